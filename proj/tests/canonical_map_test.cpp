#include "fermatq/canonical_map.hpp"

#include <gtest/gtest.h>

namespace fermatq {
namespace {

NetResolution resolve7(std::array<long long, 4> entries) {
    const Prime p(7);
    const SurfaceSpec spec(p, AutoMatrix(p, entries));
    return resolve_net(canonical_net(invariant_tensors(spec)));
}

TEST(CanonicalNetBuilder, NeedsExactlyThreeSections) {
    const Prime p(7);
    const SurfaceSpec nonfree(p, AutoMatrix::identity(p));
    EXPECT_THROW(canonical_net(invariant_tensors(nonfree)), error);
}

TEST(ResolveNet, ReferenceDegrees) {
    const NetResolution r1 = resolve7({4, 5, 3, 1});
    EXPECT_EQ(r1.m2, 24);
    EXPECT_EQ(r1.total_correction, 14);
    EXPECT_EQ(r1.mhat2, 10);
    EXPECT_EQ(r1.kind, MapKind::generically_finite);
    EXPECT_EQ(r1.degree, 10);
    EXPECT_FALSE(r1.relation.has_value());

    EXPECT_EQ(resolve7({2, 6, 1, 4}).degree, 11);
    EXPECT_EQ(resolve7({3, 3, 6, 4}).degree, 14);
    EXPECT_EQ(resolve7({3, 3, 6, 2}).degree, 5);
    EXPECT_EQ(resolve7({5, 4, 6, 5}).degree, 7);
    EXPECT_EQ(resolve7({1, 1, 6, 2}).degree, 14);
}

TEST(ResolveNet, PerPointCorrections) {
    const NetResolution r1 = resolve7({4, 5, 3, 1});
    ASSERT_EQ(r1.points.size(), 4u);
    EXPECT_EQ(r1.points[0].trace.total_correction, 4);
    EXPECT_EQ(r1.points[1].trace.total_correction, 3);
    EXPECT_EQ(r1.points[2].trace.total_correction, 3);
    EXPECT_EQ(r1.points[3].trace.total_correction, 4);

    // Row 5: M^2 = 18 and corrections 3, 3, 5 leave degree 7.
    const NetResolution r5 = resolve7({5, 4, 6, 5});
    EXPECT_EQ(r5.m2, 18);
    ASSERT_EQ(r5.points.size(), 3u);
    EXPECT_EQ(r5.points[0].trace.total_correction, 3);
    EXPECT_EQ(r5.points[1].trace.total_correction, 3);
    EXPECT_EQ(r5.points[2].trace.total_correction, 5);
    EXPECT_EQ(r5.points[2].point.i, 1);
    EXPECT_EQ(r5.points[2].point.j, 2);
}

TEST(ResolveNet, PencilCase) {
    const NetResolution r7 = resolve7({2, 2, 6, 3});
    EXPECT_EQ(r7.m2, 32);
    EXPECT_EQ(r7.total_correction, 32);  // four base points, 8 each
    ASSERT_EQ(r7.points.size(), 4u);
    for (const auto& point : r7.points) EXPECT_EQ(point.trace.total_correction, 8);
    EXPECT_EQ(r7.mhat2, 0);
    EXPECT_EQ(r7.kind, MapKind::composed_with_pencil);
    EXPECT_FALSE(r7.degree.has_value());
    ASSERT_TRUE(r7.relation.has_value());
    EXPECT_EQ(*r7.relation, (std::array<int, 3>{1, -2, 1}));  // z0 z2 = z1^2
}

TEST(ResolveNet, RejectsCoincidingGenerators) {
    const GridDivisor d1({2, 1, 0}, {1, 1, 1});
    const GridDivisor d2({0, 1, 2}, {1, 1, 1});
    try {
        resolve_net(split_net({d1, d1, d2}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::degenerate_net);
    }
}

TEST(ResolveNet, DepthOverridePropagates) {
    try {
        resolve7({4, 5, 3, 1});  // sanity: resolvable without override
        resolve_net(canonical_net(invariant_tensors(
                        SurfaceSpec(Prime(7), AutoMatrix(Prime(7), {4, 5, 3, 1})))),
                    0);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::depth_exceeded);
    }
}

// ============================================================
// Image-curve relations
// ============================================================

TEST(DetectRelation, ConicForThePencilRow) {
    const Prime p(7);
    const SurfaceSpec spec(p, AutoMatrix(p, {2, 2, 6, 3}));
    const auto relation = detect_relation(canonical_net(invariant_tensors(spec)));
    ASSERT_TRUE(relation.has_value());
    EXPECT_EQ(*relation, (std::array<int, 3>{1, -2, 1}));
}

TEST(DetectRelation, NoneForGenericallyFiniteRows) {
    const Prime p(7);
    for (const auto& entries :
         {std::array<long long, 4>{4, 5, 3, 1}, std::array<long long, 4>{2, 6, 1, 4},
          std::array<long long, 4>{3, 3, 6, 4}}) {
        const SurfaceSpec spec(p, AutoMatrix(p, entries));
        EXPECT_FALSE(detect_relation(canonical_net(invariant_tensors(spec))).has_value());
    }
}

TEST(DetectRelation, EqualGeneratorsGiveAUnitRelation) {
    const GridDivisor d({1, 2, 1}, {0, 4, 0});
    const auto relation = detect_relation(split_net({d, d, d}));
    ASSERT_TRUE(relation.has_value());
    EXPECT_EQ(*relation, (std::array<int, 3>{1, -1, 0}));
}

TEST(DetectRelation, NormalizedPrimitiveWithPositiveLeadingEntry) {
    // Generators m1, m3 with m1 m3 = m2^2 arranged in a different slot
    // pattern than the conic row.
    const GridDivisor d1({4, 0, 0}, {0, 2, 2});
    const GridDivisor d2({2, 1, 1}, {1, 2, 1});
    const GridDivisor d3({0, 2, 2}, {2, 2, 0});
    const auto relation = detect_relation(split_net({d1, d2, d3}));
    ASSERT_TRUE(relation.has_value());
    EXPECT_EQ(*relation, (std::array<int, 3>{1, -2, 1}));
}

}  // namespace
}  // namespace fermatq
