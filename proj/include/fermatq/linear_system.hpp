#pragma once

/// Canonical divisors on the quotient surface.  The six grid curves F_0, F_1,
/// F_2 (images of the coordinate sections x_j = 0) and G_0, G_1, G_2 (images
/// of y_k = 0) carry the whole canonical system: each invariant 2-form
/// homogenizes to a monomial, whose divisor is an integer combination of
/// them.  The intersection matrix is F_j . G_k = 1 and F . F = G . G = 0.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "fermatq/action.hpp"
#include "fermatq/resolution.hpp"

namespace fermatq {

/// An effective divisor sum(f_j F_j) + sum(g_k G_k).
struct GridDivisor {
    GridDivisor() = default;
    GridDivisor(const std::array<int, 3>& f, const std::array<int, 3>& g) : f(f), g(g) {
        for (int c : f)
            if (c < 0) fail(errc::internal, "grid divisor must be effective");
        for (int c : g)
            if (c < 0) fail(errc::internal, "grid divisor must be effective");
    }

    std::array<int, 3> f{};
    std::array<int, 3> g{};

    int fsum() const noexcept { return f[0] + f[1] + f[2]; }
    int gsum() const noexcept { return g[0] + g[1] + g[2]; }
    bool is_zero() const noexcept { return fsum() == 0 && gsum() == 0; }

    /// "F0+3F1+2G2"-style rendering; "0" for the zero divisor.
    std::string to_text() const {
        std::string out;
        auto append = [&](char curve, int index, int coeff) {
            if (coeff == 0) return;
            if (!out.empty()) out += "+";
            if (coeff != 1) out += std::to_string(coeff);
            out += curve;
            out += std::to_string(index);
        };
        for (int j = 0; j < 3; ++j) append('F', j, f[j]);
        for (int k = 0; k < 3; ++k) append('G', k, g[k]);
        return out.empty() ? "0" : out;
    }

    friend auto operator<=>(const GridDivisor&, const GridDivisor&) = default;
};

inline GridDivisor operator-(const GridDivisor& lhs, const GridDivisor& rhs) {
    return GridDivisor({lhs.f[0] - rhs.f[0], lhs.f[1] - rhs.f[1], lhs.f[2] - rhs.f[2]},
                       {lhs.g[0] - rhs.g[0], lhs.g[1] - rhs.g[1], lhs.g[2] - rhs.g[2]});
}

/// Divisor of the canonical section attached to an invariant 2-form: the two
/// homogenized monomial exponents, read as grid-curve coefficients.
inline GridDivisor tensor_divisor(const InvariantTensor& t) {
    return GridDivisor(homogenize(t.first), homogenize(t.second));
}

/// A 2-dimensional linear system spanned by three grid divisors, decomposed
/// into its fixed part (common to every member) and mobile part.
struct CanonicalNet {
    std::array<GridDivisor, 3> generators;
    GridDivisor fixed;
    std::array<GridDivisor, 3> mobile;
};

/// Splits off the fixed part, the slotwise minimum of the generators.  The
/// generators must have equal coordinate sums (degree (p-3, p-3) sections of
/// one system); afterwards the mobile slotwise minima all vanish.
inline CanonicalNet split_net(const std::array<GridDivisor, 3>& generators) {
    for (const GridDivisor& d : generators)
        if (d.fsum() != generators[0].fsum() || d.gsum() != generators[0].gsum())
            fail(errc::sum_mismatch,
                 "generators " + generators[0].to_text() + " and " + d.to_text() +
                     " have different coordinate sums and span no single linear system");
    GridDivisor fixed = generators[0];
    for (int s = 0; s < 3; ++s) {
        fixed.f[s] = std::min({generators[0].f[s], generators[1].f[s], generators[2].f[s]});
        fixed.g[s] = std::min({generators[0].g[s], generators[1].g[s], generators[2].g[s]});
    }
    CanonicalNet net{generators, fixed, {}};
    for (int i = 0; i < 3; ++i) net.mobile[i] = generators[i] - fixed;
    return net;
}

/// D^2 = 2 (sum f)(sum g) by bilinearity of the grid intersection matrix.
inline int self_intersection(const GridDivisor& d) {
    return 2 * d.fsum() * d.gsum();
}

/// A grid point F_i ^ G_j through which every mobile generator passes, with
/// the local branch coefficients (F_i-coefficient, G_j-coefficient) per
/// generator.  The slotwise-minima invariant of LocalPairs is inherited from
/// the mobile part of the net.
struct BasePoint {
    int i;
    int j;
    LocalPairs local;
};

/// All base points of the mobile part.  Since mobile supports are unions of
/// grid curves, common zeros can only lie on the nine crossings F_i ^ G_j; a
/// crossing qualifies iff every mobile generator has positive coefficient on
/// F_i or on G_j.
inline std::vector<BasePoint> base_points(const CanonicalNet& net) {
    if (net.mobile[0].is_zero() && net.mobile[1].is_zero() && net.mobile[2].is_zero())
        fail(errc::degenerate_net, "mobile part is zero; the net is a single divisor");
    std::vector<BasePoint> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            bool common = true;
            std::array<LocalPairs::Pair, 3> pairs{};
            for (int t = 0; t < 3; ++t) {
                pairs[t] = {net.mobile[t].f[i], net.mobile[t].g[j]};
                common = common && (pairs[t].first > 0 || pairs[t].second > 0);
            }
            if (common) out.push_back(BasePoint{i, j, LocalPairs(pairs)});
        }
    return out;
}

}  // namespace fermatq
