#pragma once

/// Exact arithmetic over Z_p for a small odd prime p: residue pairs (elements
/// of the translation group Z_p x Z_p) and invertible 2x2 matrices acting on
/// them.  Everything is a small immutable value kept in canonical
/// representatives [0, p-1]; there is no floating point anywhere.

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fermatq/error.hpp"

namespace fermatq {

/// A validated prime modulus.  The geometry needs p >= 5 (the curve must have
/// genus >= 2 and a 2-dimensional space of invariant 1-forms); the ceiling
/// keeps full GL(2, p) enumerations, which grow like p^4, cheap.
class Prime {
public:
    explicit Prime(int value) : value_(value) {
        if (value < 5)
            fail(errc::invalid_prime, "modulus must be a prime >= 5, got " + std::to_string(value));
        if (value >= 100)
            fail(errc::invalid_prime, "modulus must be < 100, got " + std::to_string(value));
        for (int d = 2; d * d <= value; ++d)
            if (value % d == 0)
                fail(errc::invalid_prime, std::to_string(value) + " is not prime");
    }

    int value() const noexcept { return value_; }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    int value_;
};

/// Canonical representative of x mod p in [0, p-1]; accepts negatives.
inline int reduce_mod(long long x, int p) {
    long long r = x % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

inline int pow_mod(int base, int exp, int p) {
    long long acc = 1, b = reduce_mod(base, p);
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) acc = acc * b % p;
        b = b * b % p;
    }
    return static_cast<int>(acc);
}

/// x^{-1} mod p for prime p (Fermat); rejects x == 0.
inline int inverse_mod(int x, int p) {
    x = reduce_mod(x, p);
    if (x == 0) fail(errc::singular_matrix, "0 has no inverse mod " + std::to_string(p));
    return pow_mod(x, p - 2, p);
}

// ============================================================
// Group vectors
// ============================================================

/// An element (a, b) of Z_p x Z_p, stored reduced.
struct GroupVec {
    GroupVec(Prime p, long long a, long long b)
        : p(p.value()), a(reduce_mod(a, p.value())), b(reduce_mod(b, p.value())) {}

    int p;
    int a;
    int b;

    bool is_zero() const noexcept { return a == 0 && b == 0; }

    friend auto operator<=>(const GroupVec&, const GroupVec&) = default;
};

inline void require_same_modulus(int lhs, int rhs, const char* what) {
    if (lhs != rhs)
        fail(errc::modulus_mismatch, std::string(what) + ": moduli " + std::to_string(lhs) +
                                         " and " + std::to_string(rhs) + " differ");
}

inline GroupVec operator+(const GroupVec& u, const GroupVec& v) {
    require_same_modulus(u.p, v.p, "GroupVec addition");
    return GroupVec(Prime(u.p), u.a + v.a, u.b + v.b);
}

inline GroupVec operator-(const GroupVec& u) {
    return GroupVec(Prime(u.p), -u.a, -u.b);
}

// ============================================================
// Invertible 2x2 matrices over Z_p
// ============================================================

/// An element of GL(2, Z_p), row-major.  Construction reduces entries and
/// rejects singular matrices, so every live value is invertible.
class AutoMatrix {
public:
    AutoMatrix(Prime p, std::array<long long, 4> entries) : p_(p.value()) {
        for (int i = 0; i < 4; ++i) e_[i] = reduce_mod(entries[i], p_);
        if (det() == 0)
            fail(errc::singular_matrix, "matrix " + to_text() + " is singular mod " + std::to_string(p_));
    }

    static AutoMatrix identity(Prime p) { return AutoMatrix(p, {1, 0, 0, 1}); }

    int modulus() const noexcept { return p_; }
    int at(int row, int col) const { return e_[2 * row + col]; }
    const std::array<int, 4>& entries() const noexcept { return e_; }

    int det() const noexcept {
        return reduce_mod(static_cast<long long>(e_[0]) * e_[3] -
                              static_cast<long long>(e_[1]) * e_[2],
                          p_);
    }

    /// "r00,r01;r10,r11"
    std::string to_text() const {
        return std::to_string(e_[0]) + "," + std::to_string(e_[1]) + ";" +
               std::to_string(e_[2]) + "," + std::to_string(e_[3]);
    }

    friend auto operator<=>(const AutoMatrix&, const AutoMatrix&) = default;

private:
    int p_;
    std::array<int, 4> e_;
};

inline AutoMatrix mat_mul(const AutoMatrix& A, const AutoMatrix& B) {
    require_same_modulus(A.modulus(), B.modulus(), "matrix product");
    const Prime p(A.modulus());
    std::array<long long, 4> c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[2 * i + j] = static_cast<long long>(A.at(i, 0)) * B.at(0, j) +
                           static_cast<long long>(A.at(i, 1)) * B.at(1, j);
    return AutoMatrix(p, c);
}

inline GroupVec mat_apply(const AutoMatrix& A, const GroupVec& v) {
    require_same_modulus(A.modulus(), v.p, "matrix-vector product");
    const Prime p(A.modulus());
    return GroupVec(p,
                    static_cast<long long>(A.at(0, 0)) * v.a + static_cast<long long>(A.at(0, 1)) * v.b,
                    static_cast<long long>(A.at(1, 0)) * v.a + static_cast<long long>(A.at(1, 1)) * v.b);
}

inline AutoMatrix mat_transpose(const AutoMatrix& A) {
    return AutoMatrix(Prime(A.modulus()),
                      {A.at(0, 0), A.at(1, 0), A.at(0, 1), A.at(1, 1)});
}

/// Adjugate divided by the determinant; A * mat_inverse(A) == identity.
inline AutoMatrix mat_inverse(const AutoMatrix& A) {
    const int p = A.modulus();
    const long long d_inv = inverse_mod(A.det(), p);
    return AutoMatrix(Prime(p), {d_inv * A.at(1, 1), d_inv * (p - A.at(0, 1)),
                                 d_inv * (p - A.at(1, 0)), d_inv * A.at(0, 0)});
}

/// All of GL(2, Z_p) in lexicographic entry order; size (p^2-1)(p^2-p).
inline std::vector<AutoMatrix> enumerate_gl2(Prime p) {
    const int n = p.value();
    std::vector<AutoMatrix> out;
    out.reserve(static_cast<std::size_t>(n) * n * n * n);
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long c = 0; c < n; ++c)
                for (long long d = 0; d < n; ++d)
                    if (reduce_mod(a * d - b * c, n) != 0)
                        out.push_back(AutoMatrix(p, {a, b, c, d}));
    return out;
}

/// The subgroup of GL(2, Z_p) generated by [[0,1],[1,0]] (swapping the two
/// curve factors) and [[-1,0],[-1,1]] (a coordinate transposition on one
/// factor).  It is isomorphic to S_3 (order 6) and consists exactly of the
/// twist changes that relate isomorphic quotient surfaces, so equivalence
/// classes are closed under A -> N A N' for members N, N' and under A -> A^-1.
inline std::vector<AutoMatrix> symmetry_subgroup(Prime p) {
    const AutoMatrix s(p, {0, 1, 1, 0});
    const AutoMatrix t(p, {-1, 0, -1, 1});
    std::set<AutoMatrix> closure{AutoMatrix::identity(p), s, t};
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& x : std::set<AutoMatrix>(closure))
            for (const auto& y : closure)
                if (closure.insert(mat_mul(x, y)).second) grew = true;
    }
    return std::vector<AutoMatrix>(closure.begin(), closure.end());
}

// ============================================================
// Text format
// ============================================================

namespace detail {

/// Strict integer token: optional sign, then digits, nothing else.
inline long long parse_int_token(std::string_view token) {
    std::size_t i = 0;
    bool negative = false;
    if (i < token.size() && (token[i] == '+' || token[i] == '-')) {
        negative = token[i] == '-';
        ++i;
    }
    if (i == token.size())
        fail(errc::parse_error, "expected an integer, got \"" + std::string(token) + "\"");
    long long value = 0;
    for (; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9')
            fail(errc::parse_error, "expected an integer, got \"" + std::string(token) + "\"");
        value = value * 10 + (token[i] - '0');
        if (value > 1'000'000'000)
            fail(errc::parse_error, "integer out of range: \"" + std::string(token) + "\"");
    }
    return negative ? -value : value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace detail

/// Parses "r00,r01;r10,r11" (entries may be negative; they are reduced mod p).
inline AutoMatrix parse_matrix(std::string_view text, Prime p) {
    const auto rows = detail::split(text, ';');
    if (rows.size() != 2)
        fail(errc::parse_error, "matrix text needs two ';'-separated rows: \"" + std::string(text) + "\"");
    std::array<long long, 4> entries{};
    for (int r = 0; r < 2; ++r) {
        const auto cells = detail::split(rows[r], ',');
        if (cells.size() != 2)
            fail(errc::parse_error, "matrix row needs two ','-separated entries: \"" +
                                        std::string(rows[r]) + "\"");
        for (int c = 0; c < 2; ++c)
            entries[2 * r + c] = detail::parse_int_token(cells[c]);
    }
    return AutoMatrix(p, entries);
}

inline std::string format_matrix(const AutoMatrix& A) { return A.to_text(); }

}  // namespace fermatq
