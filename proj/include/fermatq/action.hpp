#pragma once

/// The group action layer.  Z_p x Z_p acts on the degree-p plane curve
///
///     F = { x0^p + x1^p + x2^p = 0 },
///
/// by phi(a,b) . (x0 : x1 : x2) = (x0 : zeta^a x1 : zeta^b x2) with zeta a
/// primitive p-th root of unity.  A twist matrix A in GL(2, Z_p) turns this
/// into the diagonal-with-twist action g . (x, y) = (phi(g) x, phi(Ag) y) on
/// F x F; the quotient surface is smooth exactly when that action is free.
///
/// This header decides freeness, enumerates the invariant 2-forms (tensor
/// products of 1-forms on the two factors), and packages the numerical
/// invariants of the quotient surface.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <vector>

#include "fermatq/modp.hpp"

namespace fermatq {

/// Genus of the degree-p Fermat curve.
inline int curve_genus(Prime p) {
    return (p.value() - 1) * (p.value() - 2) / 2;
}

// ============================================================
// Stabilizers and freeness
// ============================================================

/// The set of nonzero group elements that fix some point of the curve: the
/// punctured union of the three lines a = 0, b = 0 and a = b in Z_p x Z_p.
/// Its size is 3(p-1).
inline std::set<GroupVec> stabilizer_set(Prime p) {
    std::set<GroupVec> sigma;
    for (int t = 1; t < p.value(); ++t) {
        sigma.insert(GroupVec(p, t, 0));
        sigma.insert(GroupVec(p, 0, t));
        sigma.insert(GroupVec(p, t, t));
    }
    return sigma;
}

/// One coordinate-vanishing locus of the curve, viewed as a group orbit.  The
/// p points of F on x_i = 0 form a single orbit; each point's stabilizer is
/// the order-p subgroup generated by `generator`.
struct FixedPointOrbit {
    int vanishing_coordinate;  // i with x_i = 0 on the orbit
    GroupVec generator;        // generates the common stabilizer line
    int length;                // number of points, always p
};

inline std::array<FixedPointOrbit, 3> fixed_point_orbits(Prime p) {
    const int n = p.value();
    return {FixedPointOrbit{1, GroupVec(p, 1, 0), n},
            FixedPointOrbit{2, GroupVec(p, 0, 1), n},
            FixedPointOrbit{0, GroupVec(p, n - 1, n - 1), n}};
}

/// A quotient-surface input: the prime and the twist matrix.
struct SurfaceSpec {
    SurfaceSpec(Prime p, AutoMatrix twist) : p(p), twist(std::move(twist)) {
        require_same_modulus(p.value(), this->twist.modulus(), "surface spec");
    }

    Prime p;
    AutoMatrix twist;
};

/// Constant-time membership test for stabilizer_set: (a, b) fixes a point of
/// the curve iff it is nonzero and lies on one of the lines a = 0, b = 0,
/// a = b.
inline bool fixes_some_point(const GroupVec& g) {
    return !g.is_zero() && (g.a == 0 || g.b == 0 || g.a == g.b);
}

/// The twisted action is free iff no stabilizer element is mapped back into
/// the stabilizer set: an element (g, Ag) fixes a point of F x F exactly when
/// g and Ag both fix points of F, i.e. both lie in the stabilizer set.
inline bool is_free(const SurfaceSpec& spec) {
    const Prime p = spec.p;
    for (int t = 1; t < p.value(); ++t)
        for (const GroupVec& g : {GroupVec(p, t, 0), GroupVec(p, 0, t), GroupVec(p, t, t)})
            if (fixes_some_point(mat_apply(spec.twist, g))) return false;
    return true;
}

// ============================================================
// Invariant 2-forms
// ============================================================

/// Index (j, k) of the 1-form w_jk = u^j v^(k-(p-1)) du on the curve in the
/// affine chart u = x1/x0, v = x2/x0; the basis runs over j, k >= 0 with
/// j + k <= p - 3.  The group scales w_jk by the character (j+1, k+1), stored
/// here as a GroupVec.
struct FormIndex {
    FormIndex(Prime p, int j, int k) : p(p.value()), j(j), k(k) {
        if (j < 0 || k < 0 || j + k > p.value() - 3)
            fail(errc::internal, "form index (" + std::to_string(j) + "," + std::to_string(k) +
                                     ") out of range for p = " + std::to_string(p.value()));
    }

    int p;
    int j;
    int k;

    GroupVec character() const { return GroupVec(Prime(p), j + 1, k + 1); }

    friend auto operator<=>(const FormIndex&, const FormIndex&) = default;
};

/// Basis of 1-forms in lexicographic (j, k) order; its size is the genus.
inline std::vector<FormIndex> form_indices(Prime p) {
    std::vector<FormIndex> out;
    for (int j = 0; j + 3 <= p.value(); ++j)
        for (int k = 0; j + k + 3 <= p.value(); ++k)
            out.push_back(FormIndex(p, j, k));
    return out;
}

/// A 2-form w_jk (x) w_lm on F x F; `first` lives on the first factor.
struct InvariantTensor {
    FormIndex first;
    FormIndex second;

    friend auto operator<=>(const InvariantTensor&, const InvariantTensor&) = default;
};

/// All tensor products invariant under the twisted action, sorted
/// lexicographically by (j, k, l, m).  The element g = (a, b) scales
/// w_jk (x) w_lm by the character <chi1, g> + <chi2, Ag> where chi1, chi2 are
/// the two form characters, so invariance means chi1 + A^T chi2 = 0.  For
/// each second factor this pins down chi1 uniquely; the tensor survives iff
/// that chi1 is the character of an actual basis form.
inline std::vector<InvariantTensor> invariant_tensors(const SurfaceSpec& spec) {
    const Prime p = spec.p;
    const AutoMatrix at = mat_transpose(spec.twist);
    std::vector<InvariantTensor> out;
    for (const FormIndex& second : form_indices(p)) {
        const GroupVec chi1 = -mat_apply(at, second.character());
        const int c1 = chi1.a, c2 = chi1.b;
        if (c1 >= 1 && c2 >= 1 && c1 + c2 <= p.value() - 1)
            out.push_back(InvariantTensor{FormIndex(p, c1 - 1, c2 - 1), second});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Exponent vector of the canonical image of w_jk in the coordinate ring:
/// clearing denominators turns u^j v^(k-(p-1)) du into the monomial
/// x0^(p-3-j-k) x1^j x2^k of degree p - 3.
inline std::array<int, 3> homogenize(const FormIndex& w) {
    return {w.p - 3 - w.j - w.k, w.j, w.k};
}

// ============================================================
// Surface invariants
// ============================================================

/// Numerical record of one quotient surface.  The sheaf invariants are only
/// defined for free actions (smooth quotients) and are left empty otherwise;
/// the invariant tensors are always listed.
struct SurfaceReport {
    SurfaceSpec spec;
    bool free;
    int genus;                 // of the Fermat curve factor
    std::optional<int> chi;    // Euler characteristic of the structure sheaf
    std::optional<int> pg;     // geometric genus, chi - 1 (q = 0)
    std::optional<int> q;      // irregularity
    std::optional<int> ksq;    // self-intersection of the canonical class
    std::vector<InvariantTensor> tensors;
};

inline SurfaceReport surface_report(const SurfaceSpec& spec) {
    const int p = spec.p.value();
    SurfaceReport report{spec, is_free(spec), curve_genus(spec.p),
                         std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                         invariant_tensors(spec)};
    if (report.free) {
        // chi(O) of the quotient is chi(O) of the product divided by the
        // group order: (1 - g)^2 / p^2, which is the integer ((p-3)/2)^2.
        const long long numerator =
            static_cast<long long>(report.genus - 1) * (report.genus - 1);
        if (numerator % (static_cast<long long>(p) * p) != 0)
            fail(errc::internal, "chi is not an integer");
        report.chi = static_cast<int>(numerator / (static_cast<long long>(p) * p));
        report.q = 0;
        report.pg = *report.chi - 1;
        report.ksq = 8 * *report.chi;
        // For a free action the invariant 2-forms descend to a basis of the
        // canonical sections, so their count must equal p_g.
        if (static_cast<std::size_t>(*report.pg) != report.tensors.size())
            fail(errc::formula_mismatch,
                 "surface " + format_matrix(spec.twist) + " mod " + std::to_string(p) +
                     ": p_g = " + std::to_string(*report.pg) + " but found " +
                     std::to_string(report.tensors.size()) + " invariant 2-forms");
    }
    return report;
}

}  // namespace fermatq
