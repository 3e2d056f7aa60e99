#pragma once

// Character formulas. Every character starts at the lowest conformal weight
// of its module; no q^{-c/24} factor is ever included. Series are exact for
// exponents strictly below the requested order N.

#include "urodlab/ccalc.hpp"
#include "urodlab/lattice.hpp"
#include "urodlab/qseries.hpp"
#include "urodlab/weyl.hpp"

#include <map>
#include <set>
#include <vector>

namespace urodlab {

/// Characters refined by the torus of g: (weight, exponent) -> multiplicity.
class TorusCharacter {
public:
    TorusCharacter() = default;
    TorusCharacter(RootSystemPtr sys, Rational order) : sys_(std::move(sys)), order_(std::move(order)) {}

    const RootSystemPtr& system() const { return sys_; }
    const Rational& order() const { return order_; }
    /// exponent -> (weight -> multiplicity)
    const std::map<Rational, WeightMap>& slices() const { return slices_; }

    void add(const WeightKey& w, const Rational& e, const Integer& c) {
        if (e >= order_ || c == 0) return;
        auto& slot = slices_[e][w];
        slot += c;
        if (slot == 0) {
            slices_[e].erase(w);
            if (slices_[e].empty()) slices_.erase(e);
        }
    }

    std::set<WeightKey> weights() const {
        std::set<WeightKey> out;
        for (const auto& [e, m] : slices_)
            for (const auto& [w, c] : m) out.insert(w);
        return out;
    }

    /// Specialization of the torus variables to 1.
    QSeries energy_series() const {
        QSeries s(order_);
        for (const auto& [e, m] : slices_) {
            Integer tot = 0;
            for (const auto& [w, c] : m) tot += c;
            s.add_term(Rational(tot), e);
        }
        return s;
    }

    /// q-series of the weight-w subspace.
    QSeries weight_series(const WeightKey& w) const {
        QSeries s(order_);
        for (const auto& [e, m] : slices_) {
            auto it = m.find(w);
            if (it != m.end()) s.add_term(Rational(it->second), e);
        }
        return s;
    }

    /// Divides by (1 - q^n e^gamma), n > 0.
    void divide_by(long n, const WeightKey& gamma) {
        if (n <= 0) throw DomainError("divide_by needs a positive q-power");
        for (auto it = slices_.begin(); it != slices_.end(); ++it) {
            Rational target = it->first + n;
            if (target >= order_) continue;
            WeightMap snapshot = it->second;
            for (const auto& [w, c] : snapshot) {
                WeightKey v = w;
                for (std::size_t j = 0; j < v.size(); ++j) v[j] += gamma[j];
                add(v, target, c);
            }
        }
    }

    /// Multiplies every weight space by a weight-independent series with
    /// nonnegative exponents starting at 0.
    TorusCharacter times(const QSeries& s) const {
        TorusCharacter out(sys_, order_);
        if (!slices_.empty() && s.order() < order_ - slices_.begin()->first)
            throw DomainError("multiplier series too short");
        auto terms = s.terms();
        for (const auto& [e, m] : slices_) {
            for (const auto& [f, c] : terms) {
                if (e + f >= order_) break;
                for (const auto& [w, mult] : m) out.add(w, e + f, mult * c.get_num());
            }
        }
        return out;
    }

    bool operator==(const TorusCharacter& o) const { return order_ == o.order_ && slices_ == o.slices_; }

private:
    RootSystemPtr sys_;
    Rational order_;
    std::map<Rational, WeightMap> slices_;
};

/// Exponent of e^beta in the Urod-graded level-1 lattice character.
inline Rational urod_lattice_exponent(const Weight& beta, const Weight& x0) {
    return norm2(beta) / 2 - inner_product(x0, beta);
}

/// Level-1 character of the Urod algebra module L_1(g)^nu = V_{nu+Q},
/// graded by (omega_{L_1})_(1) - (x0)_(0), refined by the lattice weight.
inline TorusCharacter level1_urod_torus_character(const RootSystemPtr& sys, const Weight& nu, const Weight& x0,
                                                  const Rational& order) {
    // (beta,beta)/2 - (x0,beta) < N  <=>  |beta - x0|^2 < 2N + |x0|^2
    Rational radius2 = 2 * order + norm2(x0);
    TorusCharacter lat(sys, order);
    Rational low = 0;
    bool first = true;
    for (const auto& beta : lattice_points(coset_class(nu), x0, radius2)) {
        Rational e = urod_lattice_exponent(beta, x0);
        lat.add(beta.coeffs, e, 1);
        if (first || e < low) low = e;
        first = false;
    }
    // the lowest lattice exponent is >= -|x0|^2/2, so this length always suffices
    return lat.times(eta_inverse_power(sys->rank, order - low));
}

inline QSeries level1_urod_character(const RootSystemPtr& sys, const Weight& nu, const Weight& x0,
                                     const Rational& order) {
    return level1_urod_torus_character(sys, nu, x0, order).energy_series();
}

/// Conformal weight (lambda, lambda + 2 rho)/(2(k + h^vee)) of L_k(lambda).
inline Rational affine_conformal_weight(const Weight& lambda, long k) {
    return inner_product(lambda, lambda + 2 * rho(lambda.system)) / (2 * (k + lambda.system->h_dual));
}

/// Weyl-Kac character of the integrable module L_k(lambda), torus-refined.
/// The numerator sums eps(w) e^{w(lambda+rho+t beta)} q^{(lambda+rho,beta)+t|beta|^2/2}
/// over beta in Q and w in W, over every beta whose q-power is below the order;
/// the result is shifted to start at q^{h_lambda}.
inline TorusCharacter weyl_kac_torus_character(const Weight& lambda, long k, const Rational& order) {
    const auto& sys = lambda.system;
    if (k < 0 || !in_alcove(lambda, k)) throw DomainError("highest weight is not in P_+^k");
    const long t = k + sys->h_dual;
    const Rational h = affine_conformal_weight(lambda, k);
    const Rational rel_order = order - h;
    TorusCharacter out(sys, order);
    if (rel_order <= 0) return out;
    Weight Lambda = lambda + rho(sys);
    // q-power t/2 |beta + Lambda/t|^2 - |Lambda|^2/(2t) < rel_order
    Weight center = frac(-1, t) * Lambda;
    Rational radius2 = 2 * rel_order / t + norm2(Lambda) / (t * t);
    std::map<Rational, WeightMap> numer;
    for (const auto& beta : lattice_points(zero_weight(sys), center, radius2)) {
        Rational e = inner_product(Lambda, beta) + Rational(t) * norm2(beta) / 2;
        Weight mu = Lambda + Rational(t) * beta;
        auto dom = reflect_to_dominant(*sys, mu.coeffs);
        if (dom.on_wall) continue;
        for (const auto& [w, s] : weyl_orbit(*sys, dom.weight)) numer[e][w] += dom.sign * s;
    }
    TorusCharacter rel(sys, rel_order);
    for (const auto& [e, m] : numer) {
        for (const auto& [w, c] : divide_by_weyl_denominator(*sys, m)) rel.add(w, e, c);
    }
    // affine positive roots alpha + n delta (n >= 1): e^{-alpha - n delta} = q^n e^{-alpha}
    WeightKey zero(sys->rank);
    std::vector<WeightKey> roots;
    for (const auto& r : sys->positive_roots) {
        auto a = weight_from_root(sys, r).coeffs;
        roots.push_back(a);
        for (auto& x : a) x = -x;
        roots.push_back(a);
    }
    for (long n = 1; n < rel_order; ++n) {
        for (int i = 0; i < sys->rank; ++i) rel.divide_by(n, zero);
        for (const auto& a : roots) rel.divide_by(n, a);
    }
    for (const auto& [e, m] : rel.slices())
        for (const auto& [w, c] : m) out.add(w, e + h, c);
    return out;
}

inline QSeries weyl_kac_character(const Weight& lambda, long k, const Rational& order) {
    return weyl_kac_torus_character(lambda, k, order).energy_series();
}

/// Rocha-Caridi character of the Virasoro (p, q) module with Kac label
/// (r, s), 1 <= r <= p-1, 1 <= s <= q-1, t = p/q, starting at q^{h_{r,s}}.
inline QSeries virasoro_minimal_character(long p, long q, long r, long s, const Rational& order) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw DomainError("minimal model needs coprime p, q >= 2");
    if (r < 1 || r > p - 1 || s < 1 || s > q - 1) throw DomainError("Kac label out of range");
    const long pq4 = 4 * p * q;
    const Rational shift = frac(-(p - q) * (p - q), pq4);
    const Rational h = kac_weight(p, q, r, s);
    QSeries theta(order, h, 1);
    if (order <= h) return theta;
    // (2pqn + a)^2/(4pq) + shift < N  <=>  (2pqn + a)^2 < 4pq(N - shift)
    Rational bound2 = pq4 * (order - shift);
    Integer root = isqrt_floor(bound2) + 1;
    for (int sign : {+1, -1}) {
        const long a = q * r - sign * p * s;
        const long nmax = to_long(root / (2 * p * q)) + 2;
        for (long n = -nmax; n <= nmax; ++n) {
            Integer x = Integer(2 * p * q) * n + a;
            Rational e = Rational(x * x) / pq4 + shift;
            e.canonicalize();
            if (e < order) theta.add_term(sign, e);
        }
    }
    return theta * eta_inverse_power(1, order - h);
}

/// q^h / prod(1 - q^n)^r.
inline QSeries verma_character(const Rational& h, int r, const Rational& order) {
    if (r < 1) throw DomainError("verma_character needs rank >= 1");
    return eta_inverse_power(r, order - h).shifted(h);
}

} // namespace urodlab
