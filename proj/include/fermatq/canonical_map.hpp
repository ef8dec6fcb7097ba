#pragma once

/// Degree of the canonical map.  The three canonical sections span a net M
/// after removing the fixed part; blowing up its base points leaves a free
/// system M-hat with M-hat^2 = M^2 - sum of local corrections.  If M-hat^2 is
/// positive the map is generically finite onto the plane of that degree; if
/// it vanishes the map is composed with a pencil and the image is the curve
/// cut out by a multiplicative relation among the three monomial sections.

#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "fermatq/action.hpp"
#include "fermatq/linear_system.hpp"
#include "fermatq/resolution.hpp"

namespace fermatq {

enum class MapKind { generically_finite, composed_with_pencil };

struct ResolvedBasePoint {
    BasePoint point;
    ResolutionTrace trace;
};

struct NetResolution {
    CanonicalNet net;
    int m2;                // self-intersection of the mobile part
    std::vector<ResolvedBasePoint> points;
    int total_correction;  // sum over base points
    int mhat2;             // m2 - total_correction
    MapKind kind;
    std::optional<int> degree;                  // when generically finite
    std::optional<std::array<int, 3>> relation; // when composed with a pencil
};

/// Builds the canonical net of a p_g = 3 surface from its invariant 2-forms.
inline CanonicalNet canonical_net(const std::vector<InvariantTensor>& tensors) {
    if (tensors.size() != 3)
        fail(errc::internal, "a canonical net needs exactly three sections, got " +
                                 std::to_string(tensors.size()));
    return split_net({tensor_divisor(tensors[0]), tensor_divisor(tensors[1]),
                      tensor_divisor(tensors[2])});
}

/// Smallest integer vector (l1, l2, l3) with sum 0 killing every grid slot of
/// the full generators, i.e. the exponents of a monomial identity
/// m1^l1 m2^l2 m3^l3 = 1 between the three sections; nullopt if none exists.
/// Normalized primitive with positive leading entry.  The kernel of the
/// constraint rows ((1,1,1) plus one row per slot) has rank <= 1 unless all
/// generators coincide, where (1,-1,0) is returned.
inline std::optional<std::array<int, 3>> detect_relation(const CanonicalNet& net) {
    std::vector<std::array<long long, 3>> rows{{1, 1, 1}};
    for (int part = 0; part < 2; ++part)
        for (int s = 0; s < 3; ++s) {
            std::array<long long, 3> row{};
            for (int t = 0; t < 3; ++t)
                row[t] = part == 0 ? net.generators[t].f[s] : net.generators[t].g[s];
            rows.push_back(row);
        }
    auto cross = [](const std::array<long long, 3>& u, const std::array<long long, 3>& v) {
        return std::array<long long, 3>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                        u[0] * v[1] - u[1] * v[0]};
    };
    for (const auto& u : rows)
        for (const auto& v : rows) {
            const auto lambda = cross(u, v);
            if (lambda == std::array<long long, 3>{0, 0, 0}) continue;
            // u, v independent: the kernel is spanned by their cross product
            // if it is orthogonal to every row, and is trivial otherwise.
            for (const auto& row : rows)
                if (row[0] * lambda[0] + row[1] * lambda[1] + row[2] * lambda[2] != 0)
                    return std::nullopt;
            long long g = std::gcd(std::gcd(std::abs(lambda[0]), std::abs(lambda[1])),
                                   std::abs(lambda[2]));
            std::array<int, 3> out{};
            for (int t = 0; t < 3; ++t) out[t] = static_cast<int>(lambda[t] / g);
            for (int t = 0; t < 3; ++t) {
                if (out[t] == 0) continue;
                if (out[t] < 0)
                    for (int s = 0; s < 3; ++s) out[s] = -out[s];
                break;
            }
            return out;
        }
    // All rows parallel to (1,1,1): the three generators are equal and any
    // difference of unit vectors is a relation.
    return std::array<int, 3>{1, -1, 0};
}

/// Resolves every base point of the net and classifies the canonical map.
inline NetResolution resolve_net(const CanonicalNet& net,
                                 std::optional<int> max_depth = std::nullopt) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (net.mobile[i] == net.mobile[j])
                fail(errc::degenerate_net, "mobile generators " + std::to_string(i) + " and " +
                                               std::to_string(j) + " coincide (" +
                                               net.mobile[i].to_text() +
                                               "); the system is not a net");
    const int m2 = self_intersection(net.mobile[0]);
    for (const GridDivisor& d : net.mobile)
        if (self_intersection(d) != m2)
            fail(errc::internal, "mobile generators disagree on self-intersection");

    NetResolution res{net, m2, {}, 0, 0, MapKind::generically_finite, std::nullopt, std::nullopt};
    for (const BasePoint& bp : base_points(net)) {
        ResolutionTrace trace = resolve_local(bp.local, max_depth);
        res.total_correction += trace.total_correction;
        res.points.push_back(ResolvedBasePoint{bp, std::move(trace)});
    }
    res.mhat2 = res.m2 - res.total_correction;
    if (res.mhat2 < 0)
        fail(errc::internal, "resolved self-intersection " + std::to_string(res.mhat2) +
                                 " is negative");
    if (res.mhat2 > 0) {
        res.kind = MapKind::generically_finite;
        res.degree = res.mhat2;
    } else {
        res.kind = MapKind::composed_with_pencil;
        res.relation = detect_relation(net);
    }
    return res;
}

}  // namespace fermatq
