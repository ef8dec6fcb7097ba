// Acceptance suite: eleven end-to-end checks covering the published results
// this tool reproduces.  Each test prints a single PASS/FAIL line so the
// binary's output doubles as a checklist.  Everything is exact integer
// arithmetic; there are no tolerances anywhere.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fermatq/fermatq.hpp"

namespace {

using namespace fermatq;

class Acceptance : public ::testing::Test {
  protected:
    void describe(std::string text) { description_ = std::move(text); }

    void TearDown() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        std::cout << "[" << info->name() << "] " << (HasFailure() ? "FAIL" : "PASS") << ": "
                  << description_ << "\n";
    }

  private:
    std::string description_;
};

LocalPairs pairs(int a1, int b1, int a2, int b2, int a3, int b3) {
    return LocalPairs({{{a1, b1}, {a2, b2}, {a3, b3}}});
}

NetResolution resolve_twist(Prime p, const std::array<long long, 4>& entries) {
    const SurfaceSpec spec(p, AutoMatrix(p, entries));
    return resolve_net(canonical_net(surface_report(spec).tensors));
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(FERMATQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {};
    CliResult result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// ============================================================

TEST_F(Acceptance, Criterion01) {
    describe("the three headline twists are free, have p_g = 3, the expected "
             "section bases, and canonical degrees 10, 11, 14");
    const Prime p(7);
    const std::array<std::array<long long, 4>, 3> twists{
        {{4, 5, 3, 1}, {2, 6, 1, 4}, {3, 3, 6, 4}}};
    const std::array<std::array<std::array<int, 4>, 3>, 3> bases{{
        {{{1, 3, 0, 4}, {2, 2, 1, 0}, {3, 0, 1, 2}}},
        {{{0, 0, 1, 1}, {1, 2, 0, 2}, {2, 0, 4, 0}}},
        {{{0, 1, 0, 3}, {1, 3, 1, 0}, {3, 0, 3, 1}}},
    }};
    const std::array<int, 3> degrees{10, 11, 14};

    for (int i = 0; i < 3; ++i) {
        const SurfaceSpec spec(p, AutoMatrix(p, twists[i]));
        const SurfaceReport report = surface_report(spec);
        EXPECT_TRUE(report.free);
        ASSERT_EQ(report.pg, std::optional(3));
        ASSERT_EQ(report.tensors.size(), 3u);
        for (int t = 0; t < 3; ++t) {
            const InvariantTensor& w = report.tensors[t];
            EXPECT_EQ((std::array{w.first.j, w.first.k, w.second.j, w.second.k}), bases[i][t]);
        }
        const NetResolution res = resolve_net(canonical_net(report.tensors));
        EXPECT_EQ(res.kind, MapKind::generically_finite);
        EXPECT_EQ(res.degree, std::optional(degrees[i]));
    }
}

TEST_F(Acceptance, Criterion02) {
    describe("worked example: fixed part F1, base points (1,2) (2,0) (2,1) (2,2), "
             "M^2 = 24, corrections 4+3+3+4, degree 10");
    const NetResolution res = resolve_twist(Prime(7), {4, 5, 3, 1});
    EXPECT_EQ(res.net.fixed, GridDivisor({0, 1, 0}, {0, 0, 0}));
    ASSERT_EQ(res.points.size(), 4u);
    const std::array<std::pair<int, int>, 4> positions{{{1, 2}, {2, 0}, {2, 1}, {2, 2}}};
    const std::array<int, 4> corrections{4, 3, 3, 4};
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(res.points[i].point.i, positions[i].first);
        EXPECT_EQ(res.points[i].point.j, positions[i].second);
        EXPECT_EQ(res.points[i].trace.total_correction, corrections[i]);
    }
    EXPECT_EQ(res.m2, 24);
    EXPECT_EQ(res.total_correction, 14);
    EXPECT_EQ(res.mhat2, 10);
    EXPECT_EQ(res.degree, std::optional(10));
}

TEST_F(Acceptance, Criterion03) {
    describe("closed-form counterexample: recursion gives 5 where the naive "
             "product gives 6, and the hypothesis is false");
    const LocalPairs point = pairs(3, 0, 0, 2, 1, 1);
    EXPECT_EQ(resolve_local(point).total_correction, 5);
    const auto shape = lemma_shape(point);
    ASSERT_TRUE(shape.has_value());
    EXPECT_EQ(shape->a(), 3);
    EXPECT_EQ(shape->b(), 2);
    EXPECT_EQ(shape->c(), 1);
    EXPECT_EQ(shape->d(), 1);
    EXPECT_FALSE(lemma_hypothesis(*shape));
    EXPECT_EQ(shape->a() * shape->b(), 6);
}

TEST_F(Acceptance, Criterion04) {
    describe("closed form equals the recursion on every hypothesis-true shape "
             "in [0,12]^4 with b <= a");
    int cases = 0;
    int mismatches = 0;
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= 12; ++c)
                for (int d = 0; d <= 12; ++d) {
                    const LemmaShape shape(a, b, c, d);
                    if (!lemma_hypothesis(shape)) continue;
                    ++cases;
                    const int total = resolve_local(pairs(a, 0, 0, b, c, d)).total_correction;
                    if (total != a * b) ++mismatches;
                }
    EXPECT_EQ(cases, 13155);
    EXPECT_EQ(mismatches, 0);
}

TEST_F(Acceptance, Criterion05) {
    describe("remaining reference rows: degrees 5, 7, 14, the correction-5 base "
             "point, and the pencil with relation z0*z2 = z1^2");
    const Prime p(7);
    EXPECT_EQ(resolve_twist(p, {3, 3, 6, 2}).degree, std::optional(5));
    EXPECT_EQ(resolve_twist(p, {1, 1, 6, 2}).degree, std::optional(14));

    const NetResolution row5 = resolve_twist(p, {5, 4, 6, 5});
    EXPECT_EQ(row5.degree, std::optional(7));
    bool found = false;
    for (const ResolvedBasePoint& pt : row5.points)
        if (pt.point.i == 1 && pt.point.j == 2) {
            found = true;
            EXPECT_EQ(pt.trace.total_correction, 5);
        }
    EXPECT_TRUE(found);

    const NetResolution row7 = resolve_twist(p, {2, 2, 6, 3});
    EXPECT_EQ(row7.mhat2, 0);
    EXPECT_EQ(row7.kind, MapKind::composed_with_pencil);
    EXPECT_EQ(row7.relation, std::optional(std::array<int, 3>{1, -2, 1}));
}

TEST_F(Acceptance, Criterion06) {
    describe("free twists at p = 7 fall into exactly 7 classes with degree "
             "multiset {5, 7, 10, 11, 14, 14, pencil}, one per reference row");
    const auto classes = classify_all(Prime(7));
    ASSERT_EQ(classes.size(), 7u);

    std::vector<int> degrees;
    int pencils = 0;
    std::vector<int> rows;
    for (const EquivalenceClass& cls : classes) {
        ASSERT_TRUE(cls.resolution.has_value());
        if (cls.resolution->degree)
            degrees.push_back(*cls.resolution->degree);
        else
            ++pencils;
        ASSERT_TRUE(cls.reference_row.has_value());
        rows.push_back(*cls.reference_row);
    }
    std::sort(degrees.begin(), degrees.end());
    EXPECT_EQ(degrees, (std::vector<int>{5, 7, 10, 11, 14, 14}));
    EXPECT_EQ(pencils, 1);
    std::sort(rows.begin(), rows.end());
    EXPECT_EQ(rows, (std::vector<int>{1, 2, 3, 4, 5, 6, 7}));
}

TEST_F(Acceptance, Criterion07) {
    describe("21 fixed points in 3 orbits of length 7 with stabilizer generators "
             "(1,0), (0,1), (6,6); 18 non-trivial elements fix a point");
    const Prime p(7);
    EXPECT_EQ(stabilizer_set(p).size(), 18u);

    const auto orbits = fixed_point_orbits(p);
    int total = 0;
    for (const FixedPointOrbit& orbit : orbits) {
        EXPECT_EQ(orbit.length, 7);
        total += orbit.length;
    }
    EXPECT_EQ(total, 21);
    EXPECT_EQ(orbits[0].generator, GroupVec(p, 1, 0));
    EXPECT_EQ(orbits[1].generator, GroupVec(p, 0, 1));
    EXPECT_EQ(orbits[2].generator, GroupVec(p, 6, 6));
}

TEST_F(Acceptance, Criterion08) {
    describe("for 50 random twists, brute-force invariance over all 49 group "
             "elements agrees with the character criterion on all 225 candidates");
    const Prime p(7);
    std::mt19937 rng(20260815u);
    std::uniform_int_distribution<int> entry(0, 6);
    const auto forms = form_indices(p);
    ASSERT_EQ(forms.size() * forms.size(), 225u);

    for (int trial = 0; trial < 50; ++trial) {
        AutoMatrix twist = AutoMatrix::identity(p);
        for (;;) {
            const std::array<long long, 4> e{entry(rng), entry(rng), entry(rng), entry(rng)};
            const long long det = (e[0] * e[3] - e[1] * e[2]) % 7;
            if (det != 0) {
                twist = AutoMatrix(p, e);
                break;
            }
        }

        std::vector<InvariantTensor> brute;
        for (const FormIndex& first : forms)
            for (const FormIndex& second : forms) {
                bool invariant = true;
                for (int a = 0; a < 7 && invariant; ++a)
                    for (int b = 0; b < 7 && invariant; ++b) {
                        const GroupVec image = mat_apply(twist, GroupVec(p, a, b));
                        const int phase =
                            reduce_mod((first.j + 1) * a + (first.k + 1) * b +
                                           (second.j + 1) * image.a + (second.k + 1) * image.b,
                                       7);
                        invariant = phase == 0;
                    }
                if (invariant) brute.push_back(InvariantTensor{first, second});
            }
        std::sort(brute.begin(), brute.end());

        const std::vector<InvariantTensor> linear = invariant_tensors(SurfaceSpec(p, twist));
        EXPECT_EQ(brute, linear) << "twist " << format_matrix(twist);
    }
}

TEST_F(Acceptance, Criterion09) {
    describe("at p = 5 every free class has chi = 1 and p_g = q = 0, and analyze "
             "reports UNSUPPORTED_PG instead of a degree");
    const auto classes = classify_all(Prime(5));
    EXPECT_FALSE(classes.empty());
    for (const EquivalenceClass& cls : classes) {
        EXPECT_EQ(cls.report.chi, std::optional(1));
        EXPECT_EQ(cls.report.pg, std::optional(0));
        EXPECT_EQ(cls.report.q, std::optional(0));
        EXPECT_FALSE(cls.resolution.has_value());
    }

    const CliResult r = run_cli("analyze -p 5 -A '1,1;2,4'");
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(r.output.find("UNSUPPORTED_PG"), std::string::npos);
    EXPECT_EQ(r.output.find("degree"), std::string::npos);
}

TEST_F(Acceptance, Criterion10) {
    describe("every generically finite canonical degree at p = 7 is at most 36");
    for (const EquivalenceClass& cls : classify_all(Prime(7))) {
        ASSERT_TRUE(cls.resolution.has_value());
        if (cls.resolution->degree) {
            EXPECT_GT(*cls.resolution->degree, 0);
            EXPECT_LE(*cls.resolution->degree, 36);
        }
    }
}

TEST_F(Acceptance, Criterion11) {
    describe("classify -p 7 --json is byte-identical across runs and across "
             "thread counts");
    const CliResult a = run_cli("classify -p 7 --json");
    const CliResult b = run_cli("classify -p 7 --json");
    const CliResult c = run_cli("classify -p 7 --json --threads 4");
    ASSERT_EQ(a.exit_code, 0);
    ASSERT_EQ(b.exit_code, 0);
    ASSERT_EQ(c.exit_code, 0);
    EXPECT_FALSE(a.output.empty());
    EXPECT_EQ(a.output, b.output);
    EXPECT_EQ(a.output, c.output);
}

}  // namespace
