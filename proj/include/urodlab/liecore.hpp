#pragma once

// Root data for simply-laced simple Lie algebras and level arithmetic.
//
// Weights live in the fundamental-weight basis, roots in the simple-root
// basis. The invariant form is normalized so that every root has square
// length 2; for simply-laced types the Cartan matrix is then the Gram matrix
// of the simple roots and its inverse the Gram matrix of the fundamental
// weights.

#include "urodlab/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace urodlab {

enum class RootKind { A, D, E };

struct RootSystem {
    RootKind kind{};
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<Rational>> cartan_inverse;
    /// Positive roots in the simple-root basis, sorted by height then lexicographically.
    std::vector<std::vector<int>> positive_roots;
    /// Highest root in the simple-root basis; its entries are the marks.
    std::vector<int> highest_root;
    int h = 0;
    int h_dual = 0;
    int dim_g = 0;

    std::string name() const {
        const char* letter = kind == RootKind::A ? "A" : kind == RootKind::D ? "D" : "E";
        return letter + std::to_string(rank);
    }
    int num_roots() const { return 2 * static_cast<int>(positive_roots.size()); }
    bool same_as(const RootSystem& other) const { return kind == other.kind && rank == other.rank; }
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// An element of the rational span of the weight lattice, in the
/// fundamental-weight basis.
struct Weight {
    std::vector<Rational> coeffs;
    RootSystemPtr system;

    int rank() const { return static_cast<int>(coeffs.size()); }
    bool operator==(const Weight& o) const { return coeffs == o.coeffs; }
    bool operator<(const Weight& o) const { return coeffs < o.coeffs; }
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(RootKind kind, int rank) {
    std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
    switch (kind) {
    case RootKind::A:
        for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
        break;
    case RootKind::D:
        for (int i = 0; i + 2 < rank - 1; ++i) link(i, i + 1);
        link(rank - 3, rank - 2);
        link(rank - 3, rank - 1);
        break;
    case RootKind::E:
        // Bourbaki labels 1-3-4-5-6(-7-8) with 2 attached to 4, shifted to 0-based.
        link(0, 2);
        link(2, 3);
        link(1, 3);
        for (int i = 3; i + 1 < rank; ++i) link(i, i + 1);
        break;
    }
    return c;
}

inline std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw DomainError("singular Cartan matrix");
        std::swap(a[col], a[piv]);
        Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

inline int root_pairing(const std::vector<std::vector<int>>& cartan, const std::vector<int>& root, int i) {
    int s = 0;
    for (std::size_t j = 0; j < root.size(); ++j) s += root[j] * cartan[j][i];
    return s;
}

inline std::vector<std::vector<int>> positive_roots(const std::vector<std::vector<int>>& cartan) {
    const int n = static_cast<int>(cartan.size());
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n; ++i) {
        std::vector<int> r(n, 0);
        r[i] = 1;
        layer.push_back(r);
        all.insert(r);
    }
    while (!layer.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < n; ++i) {
                auto down = beta;
                --down[i];
                // Root strings have length at most 2 in simply-laced types.
                int p = all.count(down) ? 1 : 0;
                int q = p - root_pairing(cartan, beta, i);
                if (q > 0) {
                    auto up = beta;
                    ++up[i];
                    if (!all.count(up)) next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        all.insert(next.begin(), next.end());
    }
    std::vector<std::vector<int>> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

} // namespace detail

inline RootSystemPtr build_root_system(RootKind kind, int rank) {
    bool ok = (kind == RootKind::A && rank >= 1) || (kind == RootKind::D && rank >= 4) ||
              (kind == RootKind::E && rank >= 6 && rank <= 8);
    if (!ok) throw DomainError("unsupported root system kind/rank");
    auto sys = std::make_shared<RootSystem>();
    sys->kind = kind;
    sys->rank = rank;
    sys->cartan = detail::cartan_matrix(kind, rank);
    sys->cartan_inverse = detail::invert(sys->cartan);
    sys->positive_roots = detail::positive_roots(sys->cartan);
    sys->highest_root = sys->positive_roots.back();
    sys->dim_g = rank + sys->num_roots();
    sys->h = sys->num_roots() / rank;
    sys->h_dual = sys->h;
    return sys;
}

/// Parses names like "A1", "D4", "E8".
inline RootSystemPtr parse_root_system(const std::string& name) {
    if (name.size() < 2) throw UsageError("bad root system name '" + name + "'");
    RootKind kind;
    switch (name[0]) {
    case 'A': case 'a': kind = RootKind::A; break;
    case 'D': case 'd': kind = RootKind::D; break;
    case 'E': case 'e': kind = RootKind::E; break;
    default: throw DomainError("unsupported root system '" + name + "'");
    }
    int rank = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') throw UsageError("bad root system name '" + name + "'");
        rank = rank * 10 + (name[i] - '0');
        if (rank > 1000) throw DomainError("unsupported rank in '" + name + "'");
    }
    return build_root_system(kind, rank);
}

// ---------------------------------------------------------------------------
// Weights

inline Weight make_weight(const RootSystemPtr& sys, std::vector<Rational> coeffs) {
    if (static_cast<int>(coeffs.size()) != sys->rank) throw UsageError("weight has wrong rank");
    return Weight{std::move(coeffs), sys};
}

inline Weight zero_weight(const RootSystemPtr& sys) { return make_weight(sys, std::vector<Rational>(sys->rank)); }

inline Weight fundamental_weight(const RootSystemPtr& sys, int i) {
    auto w = zero_weight(sys);
    w.coeffs.at(i) = 1;
    return w;
}

inline Weight rho(const RootSystemPtr& sys) { return make_weight(sys, std::vector<Rational>(sys->rank, Rational(1))); }

/// Converts simple-root coordinates to fundamental-weight coordinates.
template <typename T>
Weight weight_from_root(const RootSystemPtr& sys, const std::vector<T>& root) {
    std::vector<Rational> c(sys->rank);
    for (int i = 0; i < sys->rank; ++i) {
        Rational s = 0;
        for (int j = 0; j < sys->rank; ++j) s += Rational(root[j]) * sys->cartan[j][i];
        c[i] = s;
    }
    return make_weight(sys, std::move(c));
}

/// Simple-root coordinates of a weight (rational in general).
inline std::vector<Rational> root_coordinates(const Weight& w) {
    const auto& ci = w.system->cartan_inverse;
    std::vector<Rational> n(w.rank());
    for (int i = 0; i < w.rank(); ++i) {
        Rational s = 0;
        for (int j = 0; j < w.rank(); ++j) s += w.coeffs[j] * ci[j][i];
        n[i] = s;
    }
    return n;
}

inline void require_same_system(const Weight& a, const Weight& b) {
    if (!a.system || !b.system || !a.system->same_as(*b.system))
        throw DomainError("weights belong to different root systems");
}

inline Weight operator+(const Weight& a, const Weight& b) {
    require_same_system(a, b);
    Weight r = a;
    for (int i = 0; i < a.rank(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
    require_same_system(a, b);
    Weight r = a;
    for (int i = 0; i < a.rank(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

inline Weight operator*(const Rational& s, const Weight& a) {
    Weight r = a;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

inline Weight operator-(const Weight& a) { return Rational(-1) * a; }

inline Rational inner_product(const Weight& a, const Weight& b) {
    require_same_system(a, b);
    const auto& ci = a.system->cartan_inverse;
    Rational s = 0;
    for (int i = 0; i < a.rank(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < b.rank(); ++j) s += a.coeffs[i] * ci[i][j] * b.coeffs[j];
    }
    return s;
}

inline Rational norm2(const Weight& a) { return inner_product(a, a); }

inline bool in_weight_lattice(const Weight& w) {
    return std::all_of(w.coeffs.begin(), w.coeffs.end(), [](const Rational& c) { return is_integer(c); });
}

inline bool in_root_lattice(const Weight& w) {
    if (!in_weight_lattice(w)) return false;
    auto n = root_coordinates(w);
    return std::all_of(n.begin(), n.end(), [](const Rational& c) { return is_integer(c); });
}

inline bool is_dominant_integral(const Weight& w) {
    return std::all_of(w.coeffs.begin(), w.coeffs.end(),
                       [](const Rational& c) { return is_integer(c) && c >= 0; });
}

/// <lambda, theta^vee> = (lambda, theta) for simply-laced types.
inline Rational level_of(const Weight& w) {
    Rational s = 0;
    for (int i = 0; i < w.rank(); ++i) s += w.coeffs[i] * w.system->highest_root[i];
    return s;
}

inline bool in_alcove(const Weight& w, long level) { return is_dominant_integral(w) && level_of(w) <= level; }

/// Exact enumeration of P_+^level, in lexicographic order of coefficients.
inline std::vector<Weight> dominant_weights(const RootSystemPtr& sys, long level) {
    if (level < 0) throw DomainError("negative level");
    std::vector<Weight> out;
    std::vector<long> c(sys->rank, 0);
    const auto& marks = sys->highest_root;
    // depth-first over coefficient vectors with sum(c_i * a_i) <= level
    auto rec = [&](auto&& self, int i, long remaining) -> void {
        if (i == sys->rank) {
            std::vector<Rational> q(c.begin(), c.end());
            out.push_back(make_weight(sys, std::move(q)));
            return;
        }
        for (long v = 0; v * marks[i] <= remaining; ++v) {
            c[i] = v;
            self(self, i + 1, remaining - v * marks[i]);
        }
        c[i] = 0;
    };
    rec(rec, 0, level);
    std::sort(out.begin(), out.end());
    return out;
}

/// Canonical representative of lambda + Q, taken in P_+^1 (0 and the
/// minuscule weights form a complete set of representatives of P/Q).
inline Weight coset_class(const Weight& w) {
    if (!in_weight_lattice(w)) throw DomainError("weight is not in the weight lattice P");
    for (const auto& rep : dominant_weights(w.system, 1))
        if (in_root_lattice(w - rep)) return rep;
    throw DomainError("no coset representative found");
}

inline long weight_lattice_index(const RootSystemPtr& sys) {
    return static_cast<long>(dominant_weights(sys, 1).size());
}

// ---------------------------------------------------------------------------
// Levels. Everything is parametrized by t = k + h^vee.

struct LevelParam {
    Rational t;
    std::optional<std::pair<long, long>> admissible_pq;
};

/// Builds the level parameter; records (p, q) when t = p/q is admissible
/// for the system, i.e. gcd(p, q) = 1, q >= 1 and p >= h^vee.
inline LevelParam level_param(const RootSystemPtr& sys, const Rational& t) {
    LevelParam lp{t, std::nullopt};
    if (t > 0 && t.get_num().fits_slong_p() && t.get_den().fits_slong_p()) {
        long p = t.get_num().get_si(), q = t.get_den().get_si();
        if (p >= sys->h_dual) lp.admissible_pq = std::make_pair(p, q);
    }
    return lp;
}

inline std::pair<long, long> require_admissible(const RootSystemPtr& sys, const Rational& t) {
    auto lp = level_param(sys, t);
    if (!lp.admissible_pq)
        throw DomainError("level k+h^vee=" + to_string(t) +
                          " is not admissible: need k+h^vee=p/q with gcd(p,q)=1, q>=1, p>=h^vee=" +
                          std::to_string(sys->h_dual));
    return *lp.admissible_pq;
}

/// Integral admissible weights: P_+^{p - h^vee}.
inline std::vector<Weight> admissible_set(const RootSystemPtr& sys, const Rational& t) {
    auto [p, q] = require_admissible(sys, t);
    (void)q;
    return dominant_weights(sys, p - sys->h_dual);
}

/// Feigin-Frenkel dual shifted level for simply-laced g: 1/t.
inline Rational dual_level(const Rational& t) {
    if (t == 0) throw DomainError("dual level undefined at t = 0 (critical level)");
    return 1 / t;
}

/// Shifted level l + h^vee determined by 1/t + 1/(l + h^vee) = 1.
inline Rational companion_level(const Rational& t) {
    if (t == 1) throw DomainError("companion level has a pole at t = 1");
    if (t == 0) throw DomainError("companion level undefined at t = 0");
    return t / (t - 1);
}

/// Binomial count |P_+^m| for A_n: C(m + n, n).
inline Integer alcove_size_type_a(int n, long m) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m + n), static_cast<unsigned long>(n));
    return r;
}

inline std::string weight_to_string(const Weight& w) {
    std::string s = "[";
    for (int i = 0; i < w.rank(); ++i) {
        if (i) s += ",";
        s += to_string(w.coeffs[i]);
    }
    return s + "]";
}

} // namespace urodlab
