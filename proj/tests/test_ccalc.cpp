#include "urodlab/ccalc.hpp"

#include <gtest/gtest.h>

using namespace urodlab;

namespace {

RootSystemPtr A(int n) { return build_root_system(RootKind::A, n); }

// Virasoro (p, q) minimal-model central charge, used as an independent oracle.
Rational minimal_c(long p, long q) { return 1 - frac(6 * (p - q) * (p - q), p * q); }

} // namespace

TEST(Ccalc, Sugawara) {
    EXPECT_EQ(sugawara_cc(A(1), 3), 1);
    EXPECT_EQ(sugawara_cc(A(2), 4), 2);
    EXPECT_EQ(sugawara_cc(A(1), Rational(5, 2)), Rational(3, 5));
    EXPECT_THROW(sugawara_cc(A(1), 0), DomainError);
}

TEST(Ccalc, WAlgebraCentralCharge) {
    auto a1 = A(1);
    auto g = principal_grading(a1);
    EXPECT_EQ(w_cc(a1, g, Rational(5, 2)), minimal_c(5, 2));
    EXPECT_EQ(w_cc(a1, g, Rational(5, 2)), Rational(-22, 5));
    EXPECT_EQ(w_cc(a1, g, Rational(3, 2)), 0);
    EXPECT_EQ(w_cc(a1, g, Rational(5, 3)), Rational(-3, 5));
    for (auto t : {Rational(7, 5), Rational(-2, 9), Rational(11, 4)})
        EXPECT_EQ(w_cc(a1, g, t), 13 - 6 * (t + 1 / t));
    EXPECT_THROW(w_cc(a1, g, 0), DomainError);
}

TEST(Ccalc, TotalAndUrod) {
    auto a1 = A(1);
    CcContext ctx(a1, principal_grading(a1), Rational(3, 2));
    // l = 0 adds nothing
    EXPECT_EQ(total_cc(ctx, a1->h_dual), w_cc(ctx));
    // total at (k-1, l=1) equals W at k plus the Urod charge
    EXPECT_EQ(total_cc(ctx, 3), w_cc(a1, ctx.grading, Rational(5, 2)) + w_cc(a1, ctx.grading, Rational(5, 3)));
    EXPECT_EQ(total_cc(ctx, 3), w_cc(ctx) + urod_cc(ctx, 3));
    EXPECT_EQ(urod_cc(ctx, 3), -5);

    auto a2 = A(2);
    CcContext c2(a2, principal_grading(a2), Rational(7, 3));
    EXPECT_EQ(urod_cc(c2, 4), -22);
    EXPECT_EQ(total_cc(c2, 4), w_cc(c2) - 22);
}

TEST(Ccalc, UrodPrincipalClosedForm) {
    EXPECT_EQ(urod_cc_principal(A(1), 1), -5);
    EXPECT_EQ(urod_cc_principal(A(1), 0), 0);
    EXPECT_EQ(urod_cc_principal(A(2), 1), -22);
    for (auto sys : {A(1), A(2), A(3), build_root_system(RootKind::D, 4), build_root_system(RootKind::E, 6)})
        for (long ell : {1L, 2L, 3L})
            for (auto t : {Rational(7, 5), Rational(-1, 3), Rational(9, 2)}) {
                CcContext ctx(sys, principal_grading(sys), t);
                EXPECT_EQ(urod_cc(ctx, ell + sys->h_dual), urod_cc_principal(sys, ell)) << sys->name();
            }
}

TEST(Ccalc, ConformalEmbeddingIdentity) {
    auto a2 = A(2);
    std::vector<GoodGrading> gradings = {principal_grading(A(1)), principal_grading(a2),
                                         partition_grading(a2, {2, 1}), partition_grading(A(3), {2, 2})};
    for (const auto& g : gradings)
        for (auto t : {Rational(7, 3), Rational(7, 5), Rational(-5, 2), Rational(13, 7)}) {
            auto sys = g.system();
            CcContext ctx(sys, g, t);
            Rational lhs = w_cc(sys, g, t + 1) + w_cc(sys, principal_grading(sys), companion_level(t + 1));
            Rational rhs = w_cc(ctx) + urod_cc(ctx, sys->h_dual + 1);
            EXPECT_EQ(lhs, rhs) << g.label() << " t=" << t;
        }
    // the [2,1] Urod charge, from the identity
    CcContext ctx(a2, partition_grading(a2, {2, 1}), Rational(7, 3));
    Rational v = w_cc(a2, ctx.grading, Rational(10, 3)) + w_cc(a2, principal_grading(a2), Rational(10, 7)) -
                 w_cc(ctx);
    EXPECT_EQ(urod_cc(ctx, 4), v);
}

TEST(Ccalc, MinimalModels) {
    auto m = minimal_model(Rational(5, 2));
    EXPECT_EQ(m.c, Rational(-22, 5));
    EXPECT_EQ(m.distinct_weights(), (std::set<Rational>{0, Rational(-1, 5)}));
    auto m2 = minimal_model(Rational(5, 3));
    EXPECT_EQ(m2.c, Rational(-3, 5));
    EXPECT_EQ(m2.distinct_weights(), (std::set<Rational>{0, Rational(-1, 20), Rational(1, 5), Rational(3, 4)}));
    EXPECT_THROW(minimal_model(2), DomainError);
    EXPECT_THROW(minimal_model(Rational(-5, 2)), DomainError);
    // c agrees with w_cc for sl2
    auto a1 = A(1);
    for (auto t : {Rational(5, 2), Rational(7, 3), Rational(4, 3), Rational(11, 6)})
        EXPECT_EQ(minimal_model(t).c, w_cc(a1, principal_grading(a1), t));
}

TEST(Ccalc, FockWeights) {
    auto a1 = A(1);
    EXPECT_EQ(fock_highest_weight(zero_weight(a1), Rational(5, 2)), 0);
    EXPECT_EQ(fock_highest_weight_a1(2, Rational(5, 2)), Rational(-1, 5));
    EXPECT_EQ(fock_highest_weight_a1(2, Rational(5, 2)), minimal_model(Rational(5, 2)).weights.at({3, 1}));
    EXPECT_EQ(fock_highest_weight_a1(2, Rational(5, 3)), Rational(1, 5));
    EXPECT_THROW(fock_highest_weight(zero_weight(A(2)), 3), DomainError);
    // Kac-table match: lambda = (r-1) varpi with s = 1
    for (auto t : {Rational(5, 2), Rational(5, 3), Rational(7, 4)}) {
        auto mm = minimal_model(t);
        for (long r = 1; r < mm.p; ++r) EXPECT_EQ(fock_highest_weight_a1(r - 1, t), mm.weights.at({r, 1}));
    }
}

TEST(Ccalc, Extension) {
    auto a1 = A(1);
    EXPECT_EQ(extension_cc(a1, 0, 3), 26);
    EXPECT_EQ(extension_cc(a1, 1, 3), -7);
    EXPECT_EQ(extension_cc(a1, 2, 3), Rational(-38, 5));
    EXPECT_THROW(extension_cc(a1, 1, 1), DomainError);
    // c(I_G) + c(U) - c(W) at k + h^vee = 1 - psi
    Rational psi = 3;
    EXPECT_EQ(26 + urod_cc_principal(a1, 1) - w_cc(a1, principal_grading(a1), 1 - psi), extension_cc(a1, 1, psi));
    for (auto sys : {a1, A(2), build_root_system(RootKind::D, 4)})
        for (auto p : {Rational(3), Rational(7, 2), Rational(-2, 5)})
            for (long n = 0; n < 5; ++n) {
                EXPECT_EQ(extension_cc(sys, n + 1, p) - extension_cc(sys, n, p), extension_cc_step(sys, n, p));
                if (n >= 1) {
                    auto f0 = extension_phi(n, p), f1 = extension_phi(n + 1, p);
                    EXPECT_EQ(f0 - f1, f0 * f1);
                }
            }
}

TEST(Ccalc, ExtensionConformalDims) {
    auto a1 = A(1);
    auto alpha = make_weight(a1, {2});
    EXPECT_EQ(extension_conformal_dim(zero_weight(a1), 5), 0);
    EXPECT_EQ(extension_conformal_dim(alpha, 2), 2);
    EXPECT_EQ(extension_conformal_dim(alpha, 1), 0);
}
