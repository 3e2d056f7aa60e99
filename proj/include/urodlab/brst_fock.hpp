#pragma once

// Fock-space model of V^k(sl2) x L_1(sl2) x bc ghosts.
//
// Modes follow a(z) = sum a_(n) z^{-n-1}. States are normal-ordered
// monomials: PBW-ordered affine creation modes, a lattice state
// (charge m, oscillator partition) of V_{sqrt2 Z}, and an ordered list of
// ghost creation modes with {psi_(m), psi*_(n)} = delta_{m+n,-1}.
// L_1 is realized with e = e^{alpha}, f = e^{-alpha}, h = b and trivial
// cocycle, which is consistent since (alpha, alpha) = 2.

#include "urodlab/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace urodlab::brst {

enum Gen : int { E1 = 0, H1 = 1, F1 = 2, E2 = 3, H2 = 4, F2 = 5, PSI = 6, PSIS = 7 };

inline bool is_affine(int g) { return g <= F1; }
inline bool is_ghost(int g) { return g >= PSI; }

using ModeList = std::vector<std::pair<int, long>>; // (generator, mode index)

struct Mono {
    ModeList aff;          // creation modes, sorted by (index, generator)
    long m = 0;            // lattice charge
    std::vector<long> osc; // b_{-j} parts, sorted descending
    ModeList gh;           // ghost creation modes, sorted
    auto operator<=>(const Mono&) const = default;

    bool is_vacuum() const { return aff.empty() && m == 0 && osc.empty() && gh.empty(); }
    int parity() const { return static_cast<int>(gh.size() % 2); }
};

using State = std::map<Mono, Rational>;

inline void add_to(State& s, const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = s.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

inline void add_to(State& s, const State& o, const Rational& c = 1) {
    if (c == 0) return;
    for (const auto& [m, v] : o) add_to(s, m, c * v);
}

inline State scaled(const State& s, const Rational& c) {
    State out;
    add_to(out, s, c);
    return out;
}

inline State single(const Mono& m, const Rational& c = 1) {
    State s;
    add_to(s, m, c);
    return s;
}

inline State vacuum() { return single(Mono{}); }

/// Standard conformal degree: affine and lattice by their Sugawara L_0,
/// ghosts with psi of weight 0 and psi* of weight 1. It is >= 0 on every
/// state, so w_(n) x = 0 as soon as deg w + deg x - n - 1 < 0.
inline long degree(const Mono& x) {
    long d = x.m * x.m;
    for (const auto& [g, n] : x.aff) d -= n;
    for (long j : x.osc) d += j;
    for (const auto& [g, n] : x.gh) d += (g == PSI) ? -n - 1 : -n;
    return d;
}

inline long generator_degree(int g) { return g == PSI ? 0 : 1; }

/// Weight for the Hamiltonian H of the complex: e1, h1, f1 of weight 0, 1, 2;
/// the lattice by H_Urod = L_0 - h_0/2; psi of weight 0, psi* of weight 1.
inline long h_weight(const Mono& x) {
    long w = x.m * x.m - x.m;
    for (long j : x.osc) w += j;
    for (const auto& [g, n] : x.aff) w += -n - 1 + g;
    for (const auto& [g, n] : x.gh) w += (g == PSI) ? -n - 1 : -n;
    return w;
}

inline long ghost_charge(const Mono& x) {
    long c = 0;
    for (const auto& [g, n] : x.gh) c += (g == PSIS) ? 1 : -1;
    return c;
}

inline std::string to_string(const Mono& x) {
    static const char* names[] = {"e1", "h1", "f1", "e2", "h2", "f2", "psi", "psi*"};
    std::string s;
    for (const auto& [g, n] : x.aff) s += std::string(names[g]) + "(" + std::to_string(n) + ")";
    for (long j : x.osc) s += "b(" + std::to_string(-j) + ")";
    if (x.m != 0) s += "e^" + std::to_string(x.m);
    for (const auto& [g, n] : x.gh) s += std::string(names[g]) + "(" + std::to_string(n) + ")";
    return s.empty() ? "|0>" : s;
}

inline std::string to_string(const State& s) {
    if (s.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : s) {
        if (!out.empty()) out += " + ";
        out += urodlab::to_string(c) + "*" + to_string(m);
    }
    return out;
}

namespace detail {

// sl2 with e=0, h=1, f=2
inline std::pair<int, long> sl2_bracket(int x, int y) {
    if (x == y) return {-1, 0};
    if (x == 0 && y == 1) return {0, -2};
    if (x == 1 && y == 0) return {0, 2};
    if (x == 0 && y == 2) return {1, 1};
    if (x == 2 && y == 0) return {1, -1};
    if (x == 1 && y == 2) return {2, -2};
    return {2, 2}; // [f, h] = 2f
}

inline long sl2_form(int x, int y) {
    if (x == 1 && y == 1) return 2;
    if ((x == 0 && y == 2) || (x == 2 && y == 0)) return 1;
    return 0;
}

inline Rational binomial(long m, long i) {
    Rational r = 1;
    for (long j = 0; j < i; ++j) r = r * (m - j) / (j + 1);
    return r;
}

inline const std::vector<std::vector<long>>& partitions_of(long n) {
    static thread_local std::map<long, std::vector<std::vector<long>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return cache.emplace(n, std::move(out)).first->second;
}

} // namespace detail

class Fock {
  public:
    explicit Fock(Rational k) : k_(std::move(k)) {}
    const Rational& level() const { return k_; }

    /// Generator mode g_(n) applied to a state.
    State apply(int g, long n, const State& s) const {
        State out;
        for (const auto& [m, c] : s) add_to(out, apply(g, n, m), c);
        return out;
    }

    State apply(int g, long n, const Mono& x) const {
        State out;
        if (is_affine(g)) {
            Mono base = x;
            base.aff.clear();
            for (const auto& [list, c] : affine_act(g, n, x.aff)) {
                base.aff = list;
                add_to(out, base, c);
            }
        } else if (g == H2) {
            heisenberg(n, x, out);
        } else if (g == E2 || g == F2) {
            vertex(g == E2 ? 1 : -1, n, x, out);
        } else {
            ghost(g, n, x, out);
        }
        return out;
    }

    /// Y(v, z)_(n) applied to x, computed recursively by the Borcherds identity
    /// (a_(M) w)_(n) = sum_i (-1)^i C(M, i) (a_(M-i) w_(n+i) - (-1)^M eps w_(M+n-i) a_(i)).
    State field_mode(const State& v, long n, const State& x) const {
        State out;
        for (const auto& [vm, vc] : v)
            for (const auto& [xm, xc] : x) add_to(out, field_mode(vm, n, xm), vc * xc);
        return out;
    }

    State field_mode(const Mono& v, long n, const Mono& x) const {
        State out;
        if (degree(v) + degree(x) - n - 1 < 0) return out;
        if (v.is_vacuum()) {
            if (n == -1) add_to(out, x, 1);
            return out;
        }
        int a = 0;
        long M = 0;
        Mono w = v;
        if (!v.aff.empty()) {
            std::tie(a, M) = v.aff.front();
            w.aff.erase(w.aff.begin());
        } else if (!v.gh.empty()) {
            std::tie(a, M) = v.gh.front();
            w.gh.erase(w.gh.begin());
        } else if (!v.osc.empty()) {
            a = H2;
            M = -v.osc.front();
            w.osc.erase(w.osc.begin());
        } else {
            vertex(v.m, n, x, out);
            return out;
        }
        if (w.is_vacuum() && M == -1) return apply(a, n, x);
        const int eps = (is_ghost(a) && w.parity() == 1) ? -1 : 1;
        const int signM = (M % 2 == 0) ? 1 : -1;
        const long dw = degree(w), dx = degree(x);
        for (long i = 0; i <= dw + dx - n - 1; ++i) {
            Rational coef = detail::binomial(M, i) * ((i % 2 == 0) ? 1 : -1);
            if (coef == 0) break;
            State inner = field_mode(w, n + i, x);
            if (!inner.empty()) add_to(out, apply(a, M - i, inner), coef);
        }
        for (long i = 0; i <= generator_degree(a) + dx - 1; ++i) {
            Rational coef = detail::binomial(M, i) * ((i % 2 == 0) ? 1 : -1);
            if (coef == 0) break;
            State ax = apply(a, i, x);
            for (const auto& [am, ac] : ax) add_to(out, field_mode(w, M + n - i, am), -coef * signM * eps * ac);
        }
        return out;
    }

    /// Convenience: Y(v)_(n) applied to a state.
    State mode(const State& v, long n, const State& x) const { return field_mode(v, n, x); }

  private:
    Rational k_;
    mutable std::map<std::tuple<int, long, ModeList>, std::map<ModeList, Rational>> aff_cache_;

    static bool creation_before(int g, long n, const std::pair<int, long>& y) {
        return std::make_pair(n, g) <= std::make_pair(y.second, y.first);
    }

    std::map<ModeList, Rational> affine_act(int x, long n, const ModeList& L) const {
        auto key = std::make_tuple(x, n, L);
        if (auto it = aff_cache_.find(key); it != aff_cache_.end()) return it->second;
        std::map<ModeList, Rational> out;
        auto add = [&](const ModeList& l, const Rational& c) {
            if (c == 0) return;
            auto& slot = out[l];
            slot += c;
            if (slot == 0) out.erase(l);
        };
        if (L.empty()) {
            if (n < 0) add({{x, n}}, 1);
        } else if (n < 0 && creation_before(x, n, L.front())) {
            ModeList l;
            l.reserve(L.size() + 1);
            l.emplace_back(x, n);
            l.insert(l.end(), L.begin(), L.end());
            add(l, 1);
        } else {
            const auto [y, m] = L.front();
            ModeList rest(L.begin() + 1, L.end());
            for (const auto& [l, c] : affine_act(x, n, rest))
                for (const auto& [l2, c2] : affine_act(y, m, l)) add(l2, c * c2);
            auto [z, coef] = detail::sl2_bracket(x, y);
            if (z >= 0)
                for (const auto& [l, c] : affine_act(z, n + m, rest)) add(l, c * coef);
            if (n + m == 0) {
                long form = detail::sl2_form(x, y);
                if (form != 0) add(rest, k_ * n * form);
            }
        }
        aff_cache_.emplace(key, out);
        return out;
    }

    static void heisenberg(long n, const Mono& x, State& out) {
        if (n == 0) {
            add_to(out, x, Rational(2 * x.m));
            return;
        }
        Mono y = x;
        if (n < 0) {
            y.osc.insert(std::upper_bound(y.osc.begin(), y.osc.end(), -n, std::greater<long>()), -n);
            add_to(out, y, 1);
            return;
        }
        long count = std::count(x.osc.begin(), x.osc.end(), n);
        if (count == 0) return;
        y.osc.erase(std::find(y.osc.begin(), y.osc.end(), n));
        add_to(out, y, Rational(2 * n * count));
    }

    // e^{c alpha}_(n) on x: e^{c alpha} z^{2cm} E_-(z) E_+(z).
    static void vertex(long c, long n, const Mono& x, State& out) {
        // E_+ = prod_j exp(-c b_j z^{-j}/j): on x_j^{r_j} this gives sum_r (-2c)^r C(r_j, r) z^{-jr}.
        std::map<std::pair<long, std::vector<long>>, Rational> plus{{{0, x.osc}, Rational(1)}};
        std::map<long, long> mult;
        for (long j : x.osc) ++mult[j];
        for (const auto& [j, rj] : mult) {
            std::map<std::pair<long, std::vector<long>>, Rational> next;
            for (const auto& [key, coef] : plus) {
                auto parts = key.second;
                Rational f = 1;
                for (long r = 0; r <= rj; ++r) {
                    if (r > 0) {
                        parts.erase(std::find(parts.begin(), parts.end(), j));
                        f *= Rational(-2 * c);
                    }
                    next[{key.first + j * r, parts}] += coef * f * detail::binomial(rj, r);
                }
            }
            plus = std::move(next);
        }
        for (const auto& [key, coef] : plus) {
            if (coef == 0) continue;
            long d = -n - 1 - 2 * c * x.m + key.first;
            if (d < 0) continue;
            for (const auto& lam : detail::partitions_of(d)) {
                Rational f = coef;
                std::map<long, long> s;
                for (long j : lam) ++s[j];
                for (const auto& [j, sj] : s)
                    for (long r = 1; r <= sj; ++r) f = f * c / (j * r);
                Mono y = x;
                y.m = x.m + c;
                y.osc = key.second;
                y.osc.insert(y.osc.end(), lam.begin(), lam.end());
                std::sort(y.osc.begin(), y.osc.end(), std::greater<long>());
                add_to(out, y, f);
            }
        }
    }

    static void ghost(int g, long n, const Mono& x, State& out) {
        Mono y = x;
        if (n < 0) {
            auto key = std::make_pair(g, n);
            auto it = std::lower_bound(y.gh.begin(), y.gh.end(), key);
            if (it != y.gh.end() && *it == key) return;
            long pos = it - y.gh.begin();
            y.gh.insert(it, key);
            add_to(out, y, (pos % 2 == 0) ? 1 : -1);
            return;
        }
        auto partner = std::make_pair(g == PSI ? static_cast<int>(PSIS) : static_cast<int>(PSI), -n - 1);
        auto it = std::find(y.gh.begin(), y.gh.end(), partner);
        if (it == y.gh.end()) return;
        long pos = it - y.gh.begin();
        y.gh.erase(it);
        add_to(out, y, (pos % 2 == 0) ? 1 : -1);
    }
};

// Frequently used states.

inline Mono gen_state(int g) {
    Mono m;
    if (is_affine(g)) m.aff = {{g, -1}};
    else if (g == H2) m.osc = {1};
    else if (g == E2) m.m = 1;
    else if (g == F2) m.m = -1;
    else m.gh = {{g, -1}};
    return m;
}

inline State lattice_state(long m, std::vector<long> osc = {}) {
    Mono x;
    x.m = m;
    std::sort(osc.begin(), osc.end(), std::greater<long>());
    x.osc = std::move(osc);
    return single(x);
}

} // namespace urodlab::brst
