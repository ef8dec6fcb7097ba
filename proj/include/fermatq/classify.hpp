#pragma once

/// Exhaustive classification of the free twisted actions at a given prime,
/// modulo the twist changes that produce isomorphic quotient surfaces:
/// simultaneous curve symmetries A -> n2 A n1 and the factor swap A -> A^-1.
/// Every class is cross-checked member by member -- freeness, p_g and the
/// canonical-map verdict must be constant on an orbit, and a violation is
/// reported as an error rather than silently averaged away.

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "fermatq/action.hpp"
#include "fermatq/canonical_map.hpp"
#include "fermatq/tables.hpp"

namespace fermatq {

/// Closure of {A} under A -> n2 A n1 (n1, n2 in the order-6 symmetry
/// subgroup) and A -> A^-1: a double coset with inversion, size <= 72.
inline std::set<AutoMatrix> equivalence_orbit(const AutoMatrix& A) {
    const auto symmetries = symmetry_subgroup(Prime(A.modulus()));
    std::set<AutoMatrix> orbit{A};
    std::vector<AutoMatrix> work{A};
    while (!work.empty()) {
        const AutoMatrix x = work.back();
        work.pop_back();
        auto visit = [&](const AutoMatrix& y) {
            if (orbit.insert(y).second) work.push_back(y);
        };
        visit(mat_inverse(x));
        for (const AutoMatrix& n1 : symmetries)
            for (const AutoMatrix& n2 : symmetries) visit(mat_mul(n2, mat_mul(x, n1)));
    }
    return orbit;
}

struct EquivalenceClass {
    AutoMatrix representative;          // lexicographically least member
    std::vector<AutoMatrix> members;    // sorted
    SurfaceReport report;               // of the representative
    std::optional<NetResolution> resolution;  // of the representative, when p_g = 3
    std::optional<int> reference_row;   // position in the built-in table, if any
};

inline AutoMatrix reference_matrix(Prime p, const ReferenceRow& row) {
    return AutoMatrix(p, {row.matrix[0], row.matrix[1], row.matrix[2], row.matrix[3]});
}

/// Row of the built-in reference table whose matrix is equivalent to A, if
/// one is; the table covers p = 7 only.
inline std::optional<int> reference_row_lookup(Prime p, const AutoMatrix& A) {
    if (p.value() != 7) return std::nullopt;
    const auto orbit = equivalence_orbit(A);
    for (const ReferenceRow& row : reference_rows())
        if (orbit.count(reference_matrix(p, row))) return row.row;
    return std::nullopt;
}

namespace detail {

/// Analyzes one orbit and enforces the consistency contract: every member
/// must be free with the same p_g, and for p_g = 3 the same verdict (degree,
/// or pencil with the same relation).
inline EquivalenceClass analyze_class(Prime p, const std::vector<AutoMatrix>& members) {
    EquivalenceClass cls{members.front(), members,
                         surface_report(SurfaceSpec(p, members.front())), std::nullopt,
                         std::nullopt};
    const bool resolve = cls.report.pg && *cls.report.pg == 3;
    if (resolve)
        cls.resolution = resolve_net(canonical_net(cls.report.tensors));
    for (const AutoMatrix& member : members) {
        const SurfaceReport report = surface_report(SurfaceSpec(p, member));
        auto mismatch = [&](const std::string& what) {
            fail(errc::class_inconsistent,
                 "members " + format_matrix(cls.representative) + " and " +
                     format_matrix(member) + " of one class disagree on " + what);
        };
        if (report.free != cls.report.free) mismatch("freeness");
        if (report.pg != cls.report.pg) mismatch("p_g");
        if (resolve) {
            const NetResolution res = resolve_net(canonical_net(report.tensors));
            if (res.kind != cls.resolution->kind) mismatch("canonical-map kind");
            if (res.degree != cls.resolution->degree) mismatch("canonical-map degree");
            if (res.relation != cls.resolution->relation) mismatch("pencil relation");
        }
    }
    if (p.value() == 7)
        for (const ReferenceRow& row : reference_rows())
            if (std::binary_search(members.begin(), members.end(), reference_matrix(p, row)))
                cls.reference_row = row.row;
    return cls;
}

}  // namespace detail

/// Enumerates GL(2, p), keeps the free twists, partitions them into
/// equivalence orbits and analyzes one representative per orbit (verifying
/// all members).  The result is sorted by representative and is independent
/// of the thread count.
inline std::vector<EquivalenceClass> classify_all(Prime p, int threads = 1) {
    std::vector<std::vector<AutoMatrix>> orbits;
    std::set<AutoMatrix> seen;
    for (const AutoMatrix& A : enumerate_gl2(p)) {
        if (seen.count(A) || !is_free(SurfaceSpec(p, A))) continue;
        const auto orbit = equivalence_orbit(A);
        for (const AutoMatrix& member : orbit) {
            if (!is_free(SurfaceSpec(p, member)))
                fail(errc::class_inconsistent, "free matrix " + format_matrix(A) +
                                                   " is equivalent to non-free " +
                                                   format_matrix(member));
            seen.insert(member);
        }
        orbits.emplace_back(orbit.begin(), orbit.end());  // set order = sorted
    }

    std::vector<std::optional<EquivalenceClass>> slots(orbits.size());
    std::vector<std::exception_ptr> errors(orbits.size());
    const int workers =
        std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(orbits.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next.fetch_add(1); i < orbits.size(); i = next.fetch_add(1)) {
            try {
                slots[i] = detail::analyze_class(p, orbits[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<EquivalenceClass> classes;
    classes.reserve(slots.size());
    for (auto& slot : slots) classes.push_back(std::move(*slot));
    std::sort(classes.begin(), classes.end(), [](const auto& lhs, const auto& rhs) {
        return lhs.representative < rhs.representative;
    });
    return classes;
}

}  // namespace fermatq
