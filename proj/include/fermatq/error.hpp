#pragma once

#include <stdexcept>
#include <string>

namespace fermatq {

/// Failure categories raised by the library. The CLI maps these onto its
/// exit-code contract; inside the library they are thrown as fermatq::error.
enum class errc {
    invalid_prime,
    parse_error,
    modulus_mismatch,
    singular_matrix,
    formula_mismatch,
    sum_mismatch,
    invalid_local_pairs,
    degenerate_net,
    depth_exceeded,
    hypothesis_failed,
    class_inconsistent,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

}  // namespace fermatq
