#pragma once

// Finite Weyl group actions and Weyl characters.
//
// Characters are finite maps weight -> multiplicity. Irreducible characters
// come from the Weyl numerator divided exactly by e^rho prod_{alpha>0}(1 - e^{-alpha});
// each factor is removed by summing along alpha-strings.

#include "urodlab/liecore.hpp"

#include <deque>
#include <map>
#include <tuple>
#include <vector>

namespace urodlab {

using WeightKey = std::vector<Rational>;
using WeightMap = std::map<WeightKey, Integer>;

struct DominantImage {
    WeightKey weight;
    int sign = 1;        // (-1)^{length of the reflecting element}
    bool on_wall = false; // some coefficient vanishes
};

/// s_i applied to mu (fundamental-weight coordinates).
inline void simple_reflect(const RootSystem& sys, WeightKey& mu, int i) {
    Rational c = mu[i];
    if (c == 0) return;
    for (int j = 0; j < sys.rank; ++j)
        if (sys.cartan[i][j] != 0) mu[j] -= c * sys.cartan[i][j];
}

/// Moves mu into the closed dominant chamber with simple reflections.
inline DominantImage reflect_to_dominant(const RootSystem& sys, WeightKey mu) {
    DominantImage out;
    while (true) {
        int neg = -1;
        for (int i = 0; i < sys.rank; ++i)
            if (mu[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) break;
        simple_reflect(sys, mu, neg);
        out.sign = -out.sign;
    }
    for (const auto& c : mu)
        if (c == 0) out.on_wall = true;
    out.weight = std::move(mu);
    return out;
}

/// W-orbit of a weight, with the sign of a reflecting element for each point
/// (meaningful when the stabilizer is trivial).
inline std::map<WeightKey, int> weyl_orbit(const RootSystem& sys, const WeightKey& mu) {
    std::map<WeightKey, int> seen{{mu, 1}};
    std::deque<WeightKey> todo{mu};
    while (!todo.empty()) {
        WeightKey cur = std::move(todo.front());
        todo.pop_front();
        int s = seen[cur];
        for (int i = 0; i < sys.rank; ++i) {
            if (cur[i] == 0) continue;
            WeightKey nxt = cur;
            simple_reflect(sys, nxt, i);
            if (seen.emplace(nxt, -s).second) todo.push_back(std::move(nxt));
        }
    }
    return seen;
}

namespace detail {
inline Rational pair_with_root(const WeightKey& w, const std::vector<int>& root) {
    Rational s = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
        if (root[j] != 0) s += w[j] * root[j];
    return s;
}
} // namespace detail

/// Exact division of f by (1 - e^{-alpha}); throws if f is not divisible.
inline WeightMap divide_by_root_factor(const RootSystem& sys, const WeightMap& f, const std::vector<int>& alpha_root) {
    WeightKey alpha(sys.rank);
    for (int j = 0; j < sys.rank; ++j) {
        Rational s = 0;
        for (int i = 0; i < sys.rank; ++i) s += Rational(alpha_root[i]) * sys.cartan[i][j];
        alpha[j] = s;
    }
    // string key: gamma - s alpha with s = (gamma, alpha)/2, plus the residue of s mod 1
    std::map<std::pair<WeightKey, Rational>, std::map<Rational, Integer>> strings;
    for (const auto& [gamma, c] : f) {
        if (c == 0) continue;
        Rational s = detail::pair_with_root(gamma, alpha_root) / 2;
        Rational frac_part = s - Rational(floor_of(s));
        WeightKey base = gamma;
        for (int j = 0; j < sys.rank; ++j) base[j] -= s * alpha[j];
        strings[{base, frac_part}][s] += c;
    }
    WeightMap g;
    for (const auto& [key, line] : strings) {
        Integer running = 0;
        Rational smax = line.rbegin()->first, smin = line.begin()->first;
        for (Rational s = smax; s >= smin; s -= 1) {
            auto it = line.find(s);
            if (it != line.end()) running += it->second;
            if (running != 0) {
                WeightKey gamma = key.first;
                for (int j = 0; j < sys.rank; ++j) gamma[j] += s * alpha[j];
                g[gamma] += running;
            }
        }
        if (running != 0) throw DomainError("series is not divisible by the Weyl denominator");
    }
    return g;
}

/// Divides sum c_mu e^mu by e^rho prod_{alpha>0}(1 - e^{-alpha}).
inline WeightMap divide_by_weyl_denominator(const RootSystem& sys, const WeightMap& numerator) {
    WeightMap f;
    for (const auto& [mu, c] : numerator) {
        if (c == 0) continue;
        WeightKey shifted = mu;
        for (auto& x : shifted) x -= 1;
        f[shifted] += c;
    }
    for (const auto& root : sys.positive_roots) f = divide_by_root_factor(sys, f, root);
    return f;
}

/// Alternating sum sum_w eps(w) e^{w(Lambda)} for Lambda strictly dominant.
inline WeightMap alternating_orbit_sum(const RootSystem& sys, const WeightKey& Lambda) {
    WeightMap out;
    for (const auto& [w, s] : weyl_orbit(sys, Lambda)) out[w] += s;
    return out;
}

/// Weight multiplicities of the irreducible module of highest weight lambda.
inline WeightMap irreducible_character(const RootSystem& sys, const WeightKey& lambda) {
    WeightKey Lambda = lambda;
    for (auto& x : Lambda) {
        if (!is_integer(x) || x < 0) throw DomainError("highest weight must be dominant integral");
        x += 1;
    }
    return divide_by_weyl_denominator(sys, alternating_orbit_sum(sys, Lambda));
}

inline Integer weyl_dimension(const RootSystem& sys, const WeightKey& lambda) {
    Rational num = 1, den = 1;
    for (const auto& root : sys.positive_roots) {
        Rational a = 0, b = 0;
        for (int i = 0; i < sys.rank; ++i) {
            a += (lambda[i] + 1) * root[i];
            b += root[i];
        }
        num *= a;
        den *= b;
    }
    Rational d = num / den;
    if (!is_integer(d)) throw DomainError("non-integral Weyl dimension");
    return d.get_num();
}

} // namespace urodlab
