#include "urodlab/grading.hpp"

#include <gtest/gtest.h>

using namespace urodlab;

namespace {

// Oracle: dims from all pairwise differences of the x0 eigenvalues on C^n.
std::map<Rational, long> eigen_difference_dims(const std::vector<Rational>& eig) {
    std::map<Rational, long> out;
    for (std::size_t i = 0; i < eig.size(); ++i)
        for (std::size_t j = 0; j < eig.size(); ++j) out[eig[i] - eig[j]] += 1;
    out[Rational(0)] -= 1; // trace condition removes one Cartan direction
    return out;
}

} // namespace

TEST(Grading, PrincipalA1A2) {
    auto a1 = build_root_system(RootKind::A, 1);
    auto g = principal_grading(a1);
    EXPECT_TRUE(g.even);
    EXPECT_EQ(g.dim_at(-1), 1);
    EXPECT_EQ(g.dim_at(0), 1);
    EXPECT_EQ(g.dim_at(1), 1);

    auto a2 = build_root_system(RootKind::A, 2);
    auto p = principal_grading(a2);
    std::map<Rational, long> want{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}};
    EXPECT_EQ(p.dims, want);
}

TEST(Grading, PrincipalD4) {
    auto d4 = build_root_system(RootKind::D, 4);
    auto g = principal_grading(d4);
    EXPECT_EQ(g.dim_at(0), 4);
    EXPECT_EQ(g.dims.rbegin()->first, 5);
    EXPECT_TRUE(g.even);
}

TEST(Grading, Partitions) {
    auto a1 = build_root_system(RootKind::A, 1);
    EXPECT_TRUE(same_grading_data(partition_grading(a1, {2}), principal_grading(a1)));

    auto a2 = build_root_system(RootKind::A, 2);
    auto g = partition_grading(a2, {2, 1});
    EXPECT_EQ(g.dim_at(Rational(1, 2)), 2);
    EXPECT_EQ(g.dim_at(1), 1);
    EXPECT_EQ(g.dim_at(0), 2);
    EXPECT_FALSE(g.even);
    EXPECT_EQ(g.dims, eigen_difference_dims({Rational(1, 2), Rational(-1, 2), 0}));

    auto z = partition_grading(a2, {1, 1, 1});
    EXPECT_EQ(z.dims, (std::map<Rational, long>{{0, 8}}));
    EXPECT_EQ(z.x0, zero_weight(a2));

    EXPECT_THROW(partition_grading(a2, {2, 2}), DomainError);
    EXPECT_TRUE(same_grading_data(partition_grading(a2, {3}), principal_grading(a2)));
}

TEST(Grading, PartitionsMatchEigenOracle) {
    auto a3 = build_root_system(RootKind::A, 3);
    for (std::vector<int> parts : std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}) {
        std::vector<Rational> eig;
        for (int p : parts)
            for (int j = 0; j < p; ++j) eig.push_back(frac(p - 1 - 2 * j, 2));
        auto g = partition_grading(a3, parts);
        auto want = eigen_difference_dims(eig);
        std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
        EXPECT_EQ(g.dims, want);
    }
}

TEST(Grading, Stats) {
    auto a1 = build_root_system(RootKind::A, 1);
    auto s1 = grade_stats(principal_grading(a1));
    EXPECT_EQ(s1.dim_g0, 1);
    EXPECT_EQ(s1.dim_g_half, 0);
    EXPECT_EQ(s1.norm_x0, Rational(1, 2));

    auto a2 = build_root_system(RootKind::A, 2);
    auto s2 = grade_stats(partition_grading(a2, {2, 1}));
    EXPECT_EQ(s2.dim_g0, 2);
    EXPECT_EQ(s2.dim_g_half, 2);
    EXPECT_EQ(s2.norm_x0, Rational(1, 2));

    auto s3 = grade_stats(principal_grading(a2));
    EXPECT_EQ(s3.dim_g0, 2);
    EXPECT_EQ(s3.norm_x0, Rational(2));
}

TEST(Grading, Properties) {
    std::vector<GoodGrading> all;
    auto a3 = build_root_system(RootKind::A, 3);
    for (std::vector<int> parts : std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}})
        all.push_back(partition_grading(a3, parts));
    all.push_back(principal_grading(build_root_system(RootKind::D, 5)));
    all.push_back(principal_grading(build_root_system(RootKind::E, 6)));
    for (const auto& g : all) {
        Rational weighted = 0;
        long total = 0;
        for (const auto& [j, n] : g.dims) {
            weighted += j * n;
            total += n;
            EXPECT_EQ(g.dim_at(-j), n);
        }
        EXPECT_EQ(weighted, 0);
        EXPECT_EQ(total, g.system()->dim_g);
        // ad f injective on g_j for j >= 1/2
        for (const auto& [j, n] : g.dims)
            if (j >= Rational(1, 2)) {
                EXPECT_GE(n, g.dim_at(j + 1)) << g.label();
            }
    }
}

TEST(Grading, ParseAndExplicit) {
    auto a2 = build_root_system(RootKind::A, 2);
    EXPECT_TRUE(same_grading_data(parse_grading(a2, "partition=2,1"), partition_grading(a2, {2, 1})));
    EXPECT_THROW(parse_grading(a2, "partition=2,,1"), UsageError);
    EXPECT_THROW(parse_grading(a2, "minimal"), UsageError);
    auto g = explicit_grading(make_weight(a2, {Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(g.dim_at(Rational(1, 2)), 2);
}
