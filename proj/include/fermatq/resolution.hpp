#pragma once

/// Resolution of one isolated base point by iterated blowups.
///
/// Locally the three generators of a net cut out divisors a_i H + b_i K along
/// two smooth transversal branches H, K.  Blowing up the point pulls each
/// generator back, and removing the common multiple of the exceptional curve
/// E leaves a net on the blown-up surface whose remaining base points sit on
/// E, where (H-hat, E) and (K-hat, E) are again transversal crossings.  The
/// self-intersection of the mobile part drops by m^2 at each step, m being
/// the multiplicity of the generic member; the recursion tracks exactly these
/// numbers.
///
/// A closed form ("correction = a*b" for the shape aH, bK, cH + dK with
/// b <= a) is available under an explicit hypothesis; the recursion is the
/// authoritative path and the closed form a cross-checked fast answer, since
/// the hypothesis genuinely fails for configurations that occur.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermatq/modp.hpp"

namespace fermatq {

// ============================================================
// Local data at a branch crossing
// ============================================================

/// Coefficients (a_i, b_i) of the two local branches in the three generators.
/// Invariant: the slotwise minima over i vanish (a net has no local fixed
/// component); the blowup recursion preserves this automatically.
class LocalPairs {
public:
    using Pair = std::pair<int, int>;

    explicit LocalPairs(const std::array<Pair, 3>& pairs) : pairs_(pairs) {
        int min_a = pairs_[0].first, min_b = pairs_[0].second;
        for (const auto& [a, b] : pairs_) {
            if (a < 0 || b < 0)
                fail(errc::invalid_local_pairs, "negative branch coefficient in " + to_text());
            min_a = std::min(min_a, a);
            min_b = std::min(min_b, b);
        }
        if (min_a != 0 || min_b != 0)
            fail(errc::invalid_local_pairs,
                 "local pairs " + to_text() + " carry a common branch (slotwise minima must be 0)");
    }

    const std::array<Pair, 3>& pairs() const noexcept { return pairs_; }
    const Pair& operator[](int i) const { return pairs_[static_cast<std::size_t>(i)]; }

    /// "(a1,b1)(a2,b2)(a3,b3)"
    std::string to_text() const {
        std::string out;
        for (const auto& [a, b] : pairs_)
            out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        return out;
    }

    friend auto operator<=>(const LocalPairs&, const LocalPairs&) = default;

private:
    std::array<Pair, 3> pairs_;
};

/// Parses "a1,b1 a2,b2 a3,b3" and validates the LocalPairs invariant.
inline LocalPairs parse_pairs(std::string_view text) {
    const auto tokens = detail::split(text, ' ');
    if (tokens.size() != 3)
        fail(errc::parse_error, "pairs text needs three space-separated pairs: \"" +
                                    std::string(text) + "\"");
    std::array<LocalPairs::Pair, 3> pairs{};
    for (int i = 0; i < 3; ++i) {
        const auto cells = detail::split(tokens[i], ',');
        if (cells.size() != 2)
            fail(errc::parse_error, "pair needs two ','-separated entries: \"" +
                                        std::string(tokens[i]) + "\"");
        const long long a = detail::parse_int_token(cells[0]);
        const long long b = detail::parse_int_token(cells[1]);
        pairs[i] = {static_cast<int>(a), static_cast<int>(b)};
    }
    return LocalPairs(pairs);
}

// ============================================================
// Blowup recursion
// ============================================================

struct ResolutionStep {
    int depth;
    LocalPairs before;  // local pairs at the point being blown up
    int multiplicity;   // of the generic member, min_i (a_i + b_i)

    friend bool operator==(const ResolutionStep&, const ResolutionStep&) = default;
};

struct ResolutionTrace {
    std::vector<ResolutionStep> steps;  // pre-order over the blowup tree
    int total_correction = 0;           // sum of squared multiplicities
};

/// Default recursion-depth cap: one more than the smallest local intersection
/// number a_i b_i' + a_i' b_i over pairs of generators that share no branch
/// (sharing a branch makes that formula undercount the true intersection
/// number, so such pairs bound nothing).  Whenever no pair is (0,0) a
/// branch-disjoint pair exists: the slotwise minima give a pure-K and a
/// pure-H generator.  Every blowup step lies on both strict transforms of a
/// branch-disjoint pair and contributes m^2 >= 1 to their intersection
/// number, so the number of steps -- hence the depth -- can never reach the
/// cap; hitting it means pathological input or an implementation bug.
inline int default_depth_cap(const LocalPairs& L) {
    std::optional<int> best;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const auto& [ai, bi] = L[i];
            const auto& [aj, bj] = L[j];
            if ((ai > 0 && aj > 0) || (bi > 0 && bj > 0)) continue;
            const int inter = ai * bj + aj * bi;
            best = best ? std::min(*best, inter) : inter;
        }
    return best.value_or(0) + 1;
}

namespace detail {

inline void resolve_local_rec(const LocalPairs& L, int depth, int cap, ResolutionTrace& trace) {
    for (const auto& [a, b] : L.pairs())
        if (a == 0 && b == 0) return;  // one generator misses the point
    if (depth > cap)
        fail(errc::depth_exceeded, "blowup depth " + std::to_string(depth) + " exceeds cap " +
                                       std::to_string(cap) + " at " + L.to_text());
    int m = L[0].first + L[0].second;
    for (const auto& [a, b] : L.pairs()) m = std::min(m, a + b);
    trace.steps.push_back({depth, L, m});
    trace.total_correction += m * m;

    // Pull back and drop mE: generator i keeps e_i = a_i + b_i - m copies of
    // E, and the two candidate base points on E are H-hat ^ E and K-hat ^ E.
    std::array<LocalPairs::Pair, 3> on_h{}, on_k{};
    for (int i = 0; i < 3; ++i) {
        const auto& [a, b] = L[i];
        const int e = a + b - m;
        on_h[i] = {a, e};
        on_k[i] = {b, e};
    }
    resolve_local_rec(LocalPairs(on_h), depth + 1, cap, trace);
    resolve_local_rec(LocalPairs(on_k), depth + 1, cap, trace);
}

}  // namespace detail

/// Full blowup resolution of one candidate base point.  Returns the empty
/// trace when some generator misses the point (not a base point).  The cap
/// guards termination; pass max_depth to override the default.
inline ResolutionTrace resolve_local(const LocalPairs& L,
                                     std::optional<int> max_depth = std::nullopt) {
    ResolutionTrace trace;
    detail::resolve_local_rec(L, 0, max_depth.value_or(default_depth_cap(L)), trace);
    return trace;
}

/// One line per blowup step, then the total:
///   depth=<n> pairs=(a1,b1)(a2,b2)(a3,b3) m=<m>
///   total=<sum of m^2>
inline std::string render_trace(const ResolutionTrace& trace) {
    std::string out;
    for (const auto& step : trace.steps)
        out += "depth=" + std::to_string(step.depth) + " pairs=" + step.before.to_text() +
               " m=" + std::to_string(step.multiplicity) + "\n";
    out += "total=" + std::to_string(trace.total_correction) + "\n";
    return out;
}

// ============================================================
// Closed-form fast path
// ============================================================

/// Normal form aH, bK, cH + dK with b <= a for the closed-form correction.
class LemmaShape {
public:
    LemmaShape(int a, int b, int c, int d) : a_(a), b_(b), c_(c), d_(d) {
        if (a < 0 || b < 0 || c < 0 || d < 0 || b > a)
            fail(errc::internal, "lemma shape needs 0 <= b <= a and c, d >= 0");
    }

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    int c() const noexcept { return c_; }
    int d() const noexcept { return d_; }

    /// Euclidean step a = mb + q, 0 <= q < b; only meaningful when b != 0.
    int quotient() const {
        if (b_ == 0) fail(errc::internal, "quotient undefined for b = 0");
        return a_ / b_;
    }
    int remainder() const { return a_ - quotient() * b_; }

private:
    int a_, b_, c_, d_;
};

/// The closed form is valid when d >= b, or b != 0 and c + (a/b)*d >= a.
inline bool lemma_hypothesis(const LemmaShape& s) {
    return s.d() >= s.b() || (s.b() != 0 && s.c() + s.quotient() * s.d() >= s.a());
}

/// Correction term a*b; only under the hypothesis (the recursion can give a
/// strictly smaller total when it fails).
inline int lemma_correction(const LemmaShape& s) {
    if (!lemma_hypothesis(s))
        fail(errc::hypothesis_failed, "closed form needs d >= b or c + (a/b)d >= a");
    return s.a() * s.b();
}

/// Matches local pairs against the normal form, up to permuting generators
/// and swapping the two branches: one generator must be a pure H-multiple,
/// another a pure K-multiple.  Among the possible assignments, one whose
/// hypothesis holds is preferred (any two valid closed forms agree, both
/// equalling the recursion total); ties resolved deterministically.
inline std::optional<LemmaShape> lemma_shape(const LocalPairs& L) {
    std::optional<LemmaShape> fallback;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            const int k = 3 - i - j;
            for (const bool swap_branches : {false, true}) {
                auto oriented = [&](int slot) {
                    return swap_branches ? LocalPairs::Pair{L[slot].second, L[slot].first}
                                         : L[slot];
                };
                const auto [a, a_rest] = oriented(i);
                const auto [b_rest, b] = oriented(j);
                if (a_rest != 0 || b_rest != 0 || b > a) continue;
                const auto [c, d] = oriented(k);
                const LemmaShape shape(a, b, c, d);
                if (lemma_hypothesis(shape)) return shape;
                if (!fallback) fallback = shape;
            }
        }
    return fallback;
}

}  // namespace fermatq
