#pragma once

// Central charges and conformal weights, all as exact rationals.
//
// Every square norm |rho/sqrt(t) - sqrt(t) x0|^2 is expanded as
// (rho,rho)/t - 2(rho,x0) + t(x0,x0) so no radicals ever appear.

#include "urodlab/grading.hpp"
#include "urodlab/liecore.hpp"

#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace urodlab {

struct CcContext {
    RootSystemPtr sys;
    GoodGrading grading;
    Rational t;

    CcContext(RootSystemPtr s, GoodGrading g, Rational tt) : sys(std::move(s)), grading(std::move(g)), t(std::move(tt)) {
        if (t == 0) throw DomainError("t = k + h^vee = 0 is the critical level");
        if (!grading.system()->same_as(*sys)) throw DomainError("grading belongs to another root system");
    }
};

/// Sugawara central charge k dim g/(k+h^vee) written in t.
inline Rational sugawara_cc(const RootSystemPtr& sys, const Rational& t) {
    if (t == 0) throw DomainError("Sugawara vector undefined at the critical level");
    return (t - sys->h_dual) * sys->dim_g / t;
}

/// |rho/sqrt(t) - sqrt(t) x0|^2
inline Rational shifted_norm(const RootSystemPtr& sys, const Weight& x0, const Rational& t) {
    if (t == 0) throw DomainError("critical level");
    auto r = rho(sys);
    return norm2(r) / t - 2 * inner_product(r, x0) + t * norm2(x0);
}

inline Rational reduction_cc(const RootSystemPtr& sys, const GoodGrading& g, const Rational& t) {
    auto st = grade_stats(g);
    return Rational(st.dim_g0) - frac(st.dim_g_half, 2) - 12 * shifted_norm(sys, g.x0, t);
}

/// Central charge of W^k(g, f). Leading term is dim g_0 (see README).
inline Rational w_cc(const CcContext& ctx) { return reduction_cc(ctx.sys, ctx.grading, ctx.t); }

inline Rational w_cc(const RootSystemPtr& sys, const GoodGrading& g, const Rational& t) {
    return w_cc(CcContext(sys, g, t));
}

namespace detail {
inline Rational combined_level(const CcContext& ctx, const Rational& ell_t) {
    if (ell_t == 0) throw DomainError("ell + h^vee = 0");
    Rational total = ctx.t + ell_t - ctx.sys->h_dual;
    if (total == 0) throw DomainError("k + ell + h^vee = 0 is critical");
    return total;
}
} // namespace detail

/// Central charge of H_DS(V^k(g) (x) L_ell(g)); ell_t = ell + h^vee.
inline Rational total_cc(const CcContext& ctx, const Rational& ell_t) {
    Rational tot = detail::combined_level(ctx, ell_t);
    return sugawara_cc(ctx.sys, ctx.t) + sugawara_cc(ctx.sys, ell_t) - sugawara_cc(ctx.sys, tot) +
           reduction_cc(ctx.sys, ctx.grading, tot);
}

/// Central charge of the Urod conformal vector on L_ell(g).
inline Rational urod_cc(const CcContext& ctx, const Rational& ell_t) {
    Rational tot = detail::combined_level(ctx, ell_t);
    return sugawara_cc(ctx.sys, ctx.t) + sugawara_cc(ctx.sys, ell_t) - sugawara_cc(ctx.sys, tot) +
           12 * (shifted_norm(ctx.sys, ctx.grading.x0, ctx.t) - shifted_norm(ctx.sys, ctx.grading.x0, tot));
}

/// Closed form for principal f and simply-laced g: -ell(ell h + h^2 - 1) dim g/(ell + h).
inline Rational urod_cc_principal(const RootSystemPtr& sys, long ell) {
    if (ell < 0) throw DomainError("ell must be non-negative");
    const long h = sys->h;
    return frac(-ell * (ell * h + h * h - 1) * sys->dim_g, ell + h);
}

// ---------------------------------------------------------------------------
// Virasoro minimal models (g = sl2, principal f)

struct MinimalModelData {
    long p = 0; // t = p/q
    long q = 0;
    Rational c;
    /// (r, s) -> h_{r,s}, 1 <= r <= p-1, 1 <= s <= q-1
    std::map<std::pair<long, long>, Rational> weights;

    std::set<Rational> distinct_weights() const {
        std::set<Rational> out;
        for (const auto& [rs, h] : weights) out.insert(h);
        return out;
    }
};

inline Rational kac_weight(long p, long q, long r, long s) {
    long a = r * q - s * p, b = p - q;
    return frac(a * a - b * b, 4 * p * q);
}

inline std::pair<long, long> coprime_pair(const Rational& t) {
    if (t <= 0) throw DomainError("minimal model needs t > 0");
    if (!t.get_num().fits_slong_p() || !t.get_den().fits_slong_p()) throw DomainError("level too large");
    return {t.get_num().get_si(), t.get_den().get_si()};
}

inline MinimalModelData minimal_model(const Rational& t) {
    auto [p, q] = coprime_pair(t);
    if (p < 2 || q < 2) throw DomainError("degenerate minimal model: t = p/q needs p, q >= 2, got " + to_string(t));
    MinimalModelData m;
    m.p = p;
    m.q = q;
    m.c = 1 - frac(6 * (p - q) * (p - q), p * q);
    for (long r = 1; r <= p - 1; ++r)
        for (long s = 1; s <= q - 1; ++s) m.weights[{r, s}] = kac_weight(p, q, r, s);
    for (const auto& [rs, h] : m.weights)
        if (m.weights.at({p - rs.first, q - rs.second}) != h) throw DomainError("Kac table symmetry violated");
    return m;
}

/// Conformal weight of the Fock module pi^t_lambda under the Miura map of
/// W^k(sl2): m(m+2)/(4t) - m/2 for lambda = m varpi. Only A1 is supported.
inline Rational fock_highest_weight(const Weight& lambda, const Rational& t) {
    if (t == 0) throw DomainError("critical level");
    if (lambda.system->kind != RootKind::A || lambda.system->rank != 1)
        throw DomainError("fock_highest_weight supports A1 only");
    const Rational& m = lambda.coeffs[0];
    return m * (m + 2) / (4 * t) - m / 2;
}

inline Rational fock_highest_weight_a1(const Rational& m, const Rational& t) {
    return fock_highest_weight(make_weight(build_root_system(RootKind::A, 1), {m}), t);
}

// ---------------------------------------------------------------------------
// Extension algebras A^n[g]

/// phi_n = psi/(n psi - 1)
inline Rational extension_phi(long n, const Rational& psi) {
    Rational den = n * psi - 1;
    if (den == 0) throw DomainError("pole n*psi = 1");
    return psi / den;
}

/// 2 rk + 4 h dim - n h dim (1 + psi^2/(n psi - 1)); n = 0 gives 2 rk + 4 h dim.
inline Rational extension_cc(const RootSystemPtr& sys, long n, const Rational& psi) {
    if (n < 0) throw DomainError("n must be non-negative");
    const long h = sys->h, dim = sys->dim_g;
    Rational base = Rational(2 * sys->rank + 4 * h * dim);
    if (n == 0) return base;
    Rational den = n * psi - 1;
    if (den == 0) throw DomainError("pole n*psi = 1 in extension central charge");
    return base - Rational(n * h * dim) * (1 + psi * psi / den);
}

/// One step of the induction: c(A^{n+1}) - c(A^n).
inline Rational extension_cc_step(const RootSystemPtr& sys, long n, const Rational& psi) {
    const long h = sys->h, dim = sys->dim_g;
    Rational d1 = n * psi - 1, d2 = (n + 1) * psi - 1;
    if (d1 == 0 || d2 == 0) throw DomainError("pole in extension recursion");
    return -frac((h * h + h - 1) * dim, h + 1) - sys->rank + Rational(h * dim) * psi * psi / (d1 * d2);
}

/// n/2 |lambda|^2 + (n-2)(lambda, rho)
inline Rational extension_conformal_dim(const Weight& lambda, long n) {
    return frac(n, 2) * norm2(lambda) + (n - 2) * inner_product(lambda, rho(lambda.system));
}

} // namespace urodlab
