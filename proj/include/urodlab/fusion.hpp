#pragma once

// WZW fusion rings by the Kac-Walton algorithm and the transport of the
// level p - h^vee ring to the admissible level k + h^vee = p/q.

#include "urodlab/ccalc.hpp"
#include "urodlab/lattice.hpp"
#include "urodlab/parallel.hpp"
#include "urodlab/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace urodlab {

struct FusionRing {
    RootSystemPtr sys;
    long level = 0;
    std::vector<Weight> basis; // P_+^level, sorted
    /// n[a][b][c] = N_{ab}^c
    std::vector<std::vector<std::vector<long>>> n;
    /// shifted level of the admissible ring this was transported to, if any
    std::optional<Rational> transported_t;

    std::size_t size() const { return basis.size(); }

    std::size_t index_of(const Weight& w) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), w);
        if (it == basis.end() || !(*it == w)) throw DomainError("weight " + weight_to_string(w) + " is not in the basis");
        return static_cast<std::size_t>(it - basis.begin());
    }

    std::size_t unit() const { return index_of(zero_weight(sys)); }
};

/// Moves v (a rho-shifted weight) into the open fundamental alcove of level
/// L = m + h^vee. Returns the sign of the affine Weyl element, or 0 if v lies
/// on a wall.
inline int affine_reflect_to_alcove(const RootSystem& sys, WeightKey& v, long L) {
    int sign = 1;
    while (true) {
        bool moved = false;
        for (int i = 0; i < sys.rank; ++i)
            if (v[i] < 0) {
                simple_reflect(sys, v, i);
                sign = -sign;
                moved = true;
                break;
            }
        if (moved) continue;
        Rational lev = 0;
        for (int i = 0; i < sys.rank; ++i) lev += v[i] * sys.highest_root[i];
        if (lev > L) {
            // s_0: v -> v - ((v, theta) - L) theta
            Rational c = lev - L;
            for (int j = 0; j < sys.rank; ++j) {
                Rational theta_j = 0;
                for (int i = 0; i < sys.rank; ++i) theta_j += Rational(sys.highest_root[i]) * sys.cartan[i][j];
                v[j] -= c * theta_j;
            }
            sign = -sign;
            continue;
        }
        if (lev == L) return 0;
        for (const auto& x : v)
            if (x == 0) return 0;
        return sign;
    }
}

/// Kac-Walton fusion product lambda x mu at level m, as c -> N.
inline std::map<WeightKey, long> kac_walton_product(const RootSystem& sys, long m, const WeightKey& lambda,
                                                    const WeightMap& mu_character) {
    std::map<WeightKey, long> out;
    const long L = m + sys.h_dual;
    for (const auto& [w, mult] : mu_character) {
        WeightKey v(sys.rank);
        for (int i = 0; i < sys.rank; ++i) v[i] = lambda[i] + w[i] + 1;
        int s = affine_reflect_to_alcove(sys, v, L);
        if (s == 0) continue;
        for (auto& x : v) x -= 1;
        out[v] += s * to_long(mult);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [c, v] : out)
        if (v < 0) throw DomainError("Kac-Walton produced a negative multiplicity");
    return out;
}

inline FusionRing wzw_fusion(const RootSystemPtr& sys, long m) {
    if (m < 0) throw DomainError("level must be non-negative");
    if (sys->kind != RootKind::A || sys->rank > 2) throw DomainError("wzw_fusion supports A1 and A2 only");
    FusionRing R;
    R.sys = sys;
    R.level = m;
    R.basis = dominant_weights(sys, m);
    const std::size_t n = R.basis.size();
    std::vector<WeightMap> chars(n);
    for (std::size_t b = 0; b < n; ++b) chars[b] = irreducible_character(*sys, R.basis[b].coeffs);
    R.n = parallel_map(n, [&](std::size_t a) {
        std::vector<std::vector<long>> row(n, std::vector<long>(n, 0));
        for (std::size_t b = 0; b < n; ++b)
            for (const auto& [c, v] : kac_walton_product(*sys, m, R.basis[a].coeffs, chars[b]))
                row[b][R.index_of(make_weight(sys, c))] = v;
        return row;
    });
    return R;
}

/// Ring on Adm_Z^k = P_+^{p - h^vee} with the level p - h^vee constants.
inline FusionRing transport(const RootSystemPtr& sys, const Rational& t) {
    auto [p, q] = require_admissible(sys, t);
    (void)q;
    auto R = wzw_fusion(sys, p - sys->h_dual);
    R.transported_t = t;
    return R;
}

struct RingCheck {
    bool commutative = true;
    bool associative = true;
    bool unital = true;
    bool graded = true; // N_ab^c = 0 unless a + b - c in Q
    long triples_checked = 0;
    bool ok() const { return commutative && associative && unital && graded; }
};

inline RingCheck check_ring_axioms(const FusionRing& R) {
    RingCheck out;
    const std::size_t n = R.size(), u = R.unit();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (R.n[a][b][c] != R.n[b][a][c]) out.commutative = false;
                if (R.n[a][b][c] != 0 && !in_root_lattice(R.basis[a] + R.basis[b] - R.basis[c])) out.graded = false;
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
            if (R.n[u][a][c] != (a == c ? 1 : 0)) out.unital = false;
    // (a b) c = a (b c), coefficient of d
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                ++out.triples_checked;
                for (std::size_t d = 0; d < n; ++d) {
                    long l = 0, r = 0;
                    for (std::size_t e = 0; e < n; ++e) {
                        l += R.n[a][b][e] * R.n[e][c][d];
                        r += R.n[b][c][e] * R.n[a][e][d];
                    }
                    if (l != r) out.associative = false;
                }
            }
    return out;
}

// ---------------------------------------------------------------------------
// Conformal-dimension integrality for the extension algebras

struct IntegralityReport {
    std::string sys;
    long n = 0;
    Rational radius;
    long scanned = 0;
    bool all_integer = true;
    bool all_nonnegative = true;
    std::vector<Weight> zeros;
    bool pass() const {
        if (!all_integer) return false;
        if (n < 2) return true;
        return all_nonnegative && zeros.size() == 1 && zeros[0] == zero_weight(zeros[0].system);
    }
};

/// Scans lambda in Q cap P_+ with (lambda, lambda) <= radius.
inline IntegralityReport integrality_scan(const RootSystemPtr& sys, long n, const Rational& radius) {
    if (n < 1) throw DomainError("integrality_scan needs n >= 1");
    IntegralityReport r;
    r.sys = sys->name();
    r.n = n;
    r.radius = radius;
    for (const auto& lam : lattice_points(zero_weight(sys), zero_weight(sys), radius, false)) {
        if (!is_dominant_integral(lam)) continue;
        ++r.scanned;
        Rational d = extension_conformal_dim(lam, n);
        if (!is_integer(d)) r.all_integer = false;
        if (d < 0) r.all_nonnegative = false;
        if (d == 0) r.zeros.push_back(lam);
    }
    return r;
}

} // namespace urodlab
