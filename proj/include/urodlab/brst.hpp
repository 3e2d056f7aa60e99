#pragma once

// BRST complex for the principal DS reduction of V^k(sl2) x L_1(sl2).
//
// The full complex has infinite-dimensional H-weight spaces (e1_(-1) has
// weight 0), so everything is computed on the subcomplex C_{<=0} generated by
// f1, J^h = h1 + 2:psi psi*:, e2, h2, f2 and psi*. Its cohomology is that of
// the whole complex. Words in these generators are expanded in the Fock model
// of brst_fock.hpp, and operators are read back in word coordinates.

#include "urodlab/brst_fock.hpp"
#include "urodlab/linalg.hpp"
#include "urodlab/parallel.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace urodlab::brst {

/// A basis vector of C_{<=0}: J_(-j) ... f1_(1-p) ... psi*_(-s) ... |m, osc>.
struct Word {
    std::vector<long> j;   // J^h weights (mode -j), descending
    std::vector<long> f;   // f1 weights p >= 2 (mode 1-p), descending
    std::vector<long> s;   // psi* weights (mode -s), strictly descending
    long m = 0;            // lattice charge, also the A_(0)-eigenvalue
    std::vector<long> osc; // lattice oscillators, descending
    auto operator<=>(const Word&) const = default;
};

inline std::string to_string(const Word& w) {
    std::string out;
    for (long x : w.j) out += "J(" + std::to_string(-x) + ")";
    for (long x : w.f) out += "f1(" + std::to_string(1 - x) + ")";
    for (long x : w.s) out += "psi*(" + std::to_string(-x) + ")";
    for (long x : w.osc) out += "h2(" + std::to_string(-x) + ")";
    out += "|" + std::to_string(w.m) + ">";
    return out;
}

inline long h_weight(const Word& w) {
    long h = w.m * w.m - w.m;
    for (long x : w.j) h += x;
    for (long x : w.f) h += x;
    for (long x : w.s) h += x;
    for (long x : w.osc) h += x;
    return h;
}

namespace detail {

inline void partitions_min(long n, long min_part, std::vector<long>& cur, std::vector<std::vector<long>>& out,
                           bool distinct) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    long start = cur.empty() ? n : std::min(n, distinct ? cur.back() - 1 : cur.back());
    for (long p = start; p >= min_part; --p) {
        cur.push_back(p);
        partitions_min(n - p, min_part, cur, out, distinct);
        cur.pop_back();
    }
}

inline std::vector<std::vector<long>> partitions(long n, long min_part, bool distinct = false) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partitions_min(n, min_part, cur, out, distinct);
    return out;
}

/// Lattice states of L_1(sl2) with H_Urod weight exactly w.
inline std::vector<std::pair<long, std::vector<long>>> lattice_states(long w) {
    std::vector<std::pair<long, std::vector<long>>> out;
    for (long m = -w - 1; m <= w + 1; ++m) {
        long base = m * m - m;
        if (base > w) continue;
        for (auto& p : partitions(w - base, 1)) out.emplace_back(m, p);
    }
    return out;
}

} // namespace detail

/// Words of C_{<=0} with H-weight w and ghost number i.
inline std::vector<Word> enumerate_words(long w, long i) {
    std::vector<Word> out;
    for (long sw = 0; sw <= w; ++sw)
        for (const auto& s : detail::partitions(sw, 1, true)) {
            if (static_cast<long>(s.size()) != i) continue;
            for (long jw = 0; jw <= w - sw; ++jw)
                for (const auto& j : detail::partitions(jw, 1))
                    for (long fw = 0; fw <= w - sw - jw; ++fw)
                        for (const auto& f : detail::partitions(fw, 2))
                            for (const auto& [m, osc] : detail::lattice_states(w - sw - jw - fw))
                                out.push_back(Word{j, f, s, m, osc});
        }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Distinguished states

inline State j_state() {
    State s = single(gen_state(H1));
    add_to(s, Mono{{}, 0, {}, {{PSI, -1}, {PSIS, -1}}}, 2);
    return s;
}

/// Q_t = :(e1 + t^2 e2) psi*: + psi*
inline State q_state(const Rational& t) {
    State s = single(Mono{{{E1, -1}}, 0, {}, {{PSIS, -1}}});
    add_to(s, Mono{{}, 1, {}, {{PSIS, -1}}}, t * t);
    add_to(s, gen_state(PSIS), 1);
    return s;
}

/// Normalized cocycle Ahat = (h2 + t^2 :J^h e2:)/2, congruent to A = h2/2.
inline State ahat_state(const Fock& F, const Rational& t) {
    State s = scaled(single(gen_state(H2)), frac(1, 2));
    add_to(s, F.field_mode(j_state(), -1, lattice_state(1)), t * t / 2);
    return s;
}

/// Ambient expansion of a word, applying modes of the given generator states.
struct Generators {
    State j, f1, psis, h2, f2; // images of J^h, f1, psi*, h2, f2; e2 is fixed
};

inline Generators identity_generators() {
    return {j_state(), single(gen_state(F1)), single(gen_state(PSIS)), single(gen_state(H2)), single(gen_state(F2))};
}

inline State expand(const Fock& F, const Word& w, const Generators& g) {
    State x;
    if (w.m >= 0) {
        x = lattice_state(w.m);
    } else {
        x = vacuum();
        for (long r = 0; r < -w.m; ++r) x = F.field_mode(g.f2, -2 * r - 1, x);
    }
    for (long p : w.osc) x = F.field_mode(g.h2, -p, x);
    for (auto it = w.s.rbegin(); it != w.s.rend(); ++it) x = F.field_mode(g.psis, -*it, x);
    for (auto it = w.f.rbegin(); it != w.f.rend(); ++it) x = F.field_mode(g.f1, 1 - *it, x);
    for (auto it = w.j.rbegin(); it != w.j.rend(); ++it) x = F.field_mode(g.j, -*it, x);
    return x;
}

// ---------------------------------------------------------------------------
// State space

class Block {
  public:
    long w = 0, i = 0;
    std::vector<Word> words;
    std::vector<State> vecs; // ambient expansions

    std::size_t size() const { return words.size(); }

    void prepare() {
        std::map<Mono, std::size_t> index;
        for (const auto& v : vecs)
            for (const auto& [m, c] : v) index.try_emplace(m, index.size());
        monos_.assign(index.size(), Mono{});
        for (const auto& [m, r] : index) monos_[r] = m;
        Matrix e = zero_matrix(index.size(), size());
        for (std::size_t c = 0; c < size(); ++c)
            for (const auto& [m, v] : vecs[c]) e[index[m]][c] = v;
        rows_ = independent_rows(e, size());
        if (rows_.size() != size())
            throw DomainError("C<=0 words are linearly dependent at w=" + std::to_string(w) + ", i=" + std::to_string(i));
        Matrix s;
        for (auto r : rows_) s.push_back(e[r]);
        inv_ = *inverse(s);
    }

    /// Coordinates of an ambient vector in this block; throws if it is not in the span.
    std::vector<Rational> coordinates(const State& y) const {
        std::vector<Rational> rhs(size());
        for (std::size_t a = 0; a < rows_.size(); ++a) {
            auto it = y.find(monos_[rows_[a]]);
            if (it != y.end()) rhs[a] = it->second;
        }
        std::vector<Rational> c(size());
        for (std::size_t a = 0; a < size(); ++a)
            for (std::size_t b = 0; b < size(); ++b)
                if (inv_[a][b] != 0) c[a] += inv_[a][b] * rhs[b];
        State check;
        for (std::size_t a = 0; a < size(); ++a) add_to(check, vecs[a], c[a]);
        if (check != y)
            throw DomainError("vector leaves C<=0 block (w=" + std::to_string(w) + ", i=" + std::to_string(i) +
                              "): " + to_string(y));
        return c;
    }

  private:
    std::vector<Mono> monos_;
    std::vector<std::size_t> rows_;
    Matrix inv_;
};

struct StateSpace {
    Rational k;
    long n = 0; // blocks with w <= n - 1
    std::map<std::pair<long, long>, Block> blocks;

    const Block& block(long w, long i) const {
        static const Block empty{};
        auto it = blocks.find({w, i});
        return it == blocks.end() ? empty : it->second;
    }
    long max_charge(long w) const {
        long i = 0;
        while ((i + 1) * (i + 2) / 2 <= w) ++i;
        return i;
    }
    long dim(long w, long i) const { return static_cast<long>(block(w, i).size()); }
};

inline constexpr long kMaxCutoff = 6;

inline StateSpace build_state_space(const Rational& k, long n) {
    if (n < 1) throw DomainError("cutoff must be >= 1");
    if (n > kMaxCutoff) throw DomainError("cutoff " + std::to_string(n) + " exceeds the supported maximum " +
                                          std::to_string(kMaxCutoff));
    StateSpace sp;
    sp.k = k;
    sp.n = n;
    std::vector<std::pair<long, long>> keys;
    for (long w = 0; w < n; ++w)
        for (long i = 0; i <= sp.max_charge(w); ++i) keys.emplace_back(w, i);
    auto built = parallel_map(keys.size(), [&](std::size_t idx) {
        Fock F(k);
        Block b;
        b.w = keys[idx].first;
        b.i = keys[idx].second;
        b.words = enumerate_words(b.w, b.i);
        auto gens = identity_generators();
        for (const auto& word : b.words) b.vecs.push_back(expand(F, word, gens));
        b.prepare();
        return b;
    });
    for (auto& b : built) sp.blocks.emplace(std::make_pair(b.w, b.i), std::move(b));
    return sp;
}

// ---------------------------------------------------------------------------
// Operators

/// Matrix of a weight-preserving operator from block (w, i) to block (w, i + shift).
using BlockOp = std::map<std::pair<long, long>, Matrix>;

inline Matrix operator_matrix(const StateSpace& sp, long w, long i, long shift,
                              const std::function<State(const Fock&, const State&)>& op) {
    const Block& src = sp.block(w, i);
    const Block& dst = sp.block(w, i + shift);
    Matrix m = zero_matrix(dst.size(), src.size());
    Fock F(sp.k);
    for (std::size_t c = 0; c < src.size(); ++c) {
        State y = op(F, src.vecs[c]);
        if (dst.size() == 0) {
            if (!y.empty())
                throw DomainError("operator leaves C<=0 at w=" + std::to_string(w) + ": " + to_string(y));
            continue;
        }
        auto coords = dst.coordinates(y);
        for (std::size_t r = 0; r < dst.size(); ++r) m[r][c] = coords[r];
    }
    return m;
}

inline BlockOp blockwise(const StateSpace& sp, long shift, const std::function<State(const Fock&, const State&)>& op) {
    std::vector<std::pair<long, long>> keys;
    for (const auto& [key, b] : sp.blocks) keys.push_back(key);
    auto mats = parallel_map(keys.size(), [&](std::size_t idx) {
        return operator_matrix(sp, keys[idx].first, keys[idx].second, shift, op);
    });
    BlockOp out;
    for (std::size_t idx = 0; idx < keys.size(); ++idx) out.emplace(keys[idx], std::move(mats[idx]));
    return out;
}

/// (Q_t)_(0) on every block, as maps (w, i) -> (w, i + 1).
inline BlockOp build_qt(const StateSpace& sp, const Rational& t) {
    State q = q_state(t);
    return blockwise(sp, 1, [q](const Fock& F, const State& v) { return F.field_mode(q, 0, v); });
}

inline Matrix op_at(const BlockOp& op, long w, long i) {
    auto it = op.find({w, i});
    return it == op.end() ? Matrix{} : it->second;
}

struct NilpotencyReport {
    bool nilpotent = true;
    std::vector<std::pair<long, long>> failures;
};

inline NilpotencyReport check_nilpotent(const StateSpace& sp, const BlockOp& q) {
    NilpotencyReport r;
    for (const auto& [key, m] : q) {
        auto [w, i] = key;
        if (sp.dim(w, i + 2) == 0 || sp.dim(w, i) == 0) continue;
        Matrix sq = multiply(op_at(q, w, i + 1), m, sp.dim(w, i + 1), sp.dim(w, i));
        if (!is_zero(sq)) {
            r.nilpotent = false;
            r.failures.push_back(key);
        }
    }
    return r;
}

struct CohomologyRecord {
    long w = 0, i = 0;
    long dim_c = 0;
    long rank_out = 0; // rank of Q: C^i -> C^{i+1}
    long rank_in = 0;  // rank of Q: C^{i-1} -> C^i
    long dim_h = 0;
};

inline CohomologyRecord cohomology(const StateSpace& sp, const BlockOp& q, long w, long i) {
    CohomologyRecord r;
    r.w = w;
    r.i = i;
    r.dim_c = sp.dim(w, i);
    if (i < 0) return r; // C_{<=0} has no negative ghost number
    auto out = op_at(q, w, i);
    r.rank_out = (r.dim_c == 0 || sp.dim(w, i + 1) == 0) ? 0 : bareiss_rank(out);
    if (i > 0 && sp.dim(w, i - 1) > 0 && r.dim_c > 0) r.rank_in = bareiss_rank(op_at(q, w, i - 1));
    r.dim_h = r.dim_c - r.rank_out - r.rank_in;
    return r;
}

// ---------------------------------------------------------------------------
// The automorphism phi_t

struct AutoMap {
    Rational t;
    BlockOp ahat; // Ahat_(0) on each block
    BlockOp phi;  // phi_t on each block
    bool triangular = true;
    bool ahat_closed = true; // (Q_t)_(0) Ahat = 0
};

/// phi_t(v) for an A_(0)-eigenvector v of eigenvalue lambda: the Ahat_(0)-eigenvector of
/// eigenvalue lambda congruent to v modulo higher eigenvalues.
inline State eigen_lift(const Fock& F, const State& ahat, const State& v, long lambda, long top) {
    State x = v;
    for (long mu = lambda + 1; mu <= top; ++mu) {
        State y = F.field_mode(ahat, 0, x);
        add_to(y, x, -mu);
        x = scaled(y, Rational(1) / (lambda - mu));
    }
    return x;
}

inline long max_lattice_charge(long w) {
    long m = 0;
    while ((m + 1) * m <= w) ++m;
    return m;
}

inline AutoMap build_automorphism(const StateSpace& sp, const Rational& t) {
    AutoMap am;
    am.t = t;
    {
        Fock F(sp.k);
        am.ahat_closed = F.field_mode(q_state(t), 0, ahat_state(F, t)).empty();
    }
    am.ahat = blockwise(sp, 0, [t](const Fock& F, const State& v) { return F.field_mode(ahat_state(F, t), 0, v); });
    for (const auto& [key, m] : am.ahat) {
        const Block& b = sp.block(key.first, key.second);
        for (std::size_t c = 0; c < b.size(); ++c)
            for (std::size_t r = 0; r < b.size(); ++r) {
                Rational want = (r == c) ? Rational(b.words[c].m) : Rational(0);
                if (b.words[r].m > b.words[c].m) continue;
                if (m[r][c] != want) am.triangular = false;
            }
        const std::size_t n = b.size();
        Matrix phi = zero_matrix(n, n);
        long top = max_lattice_charge(key.first);
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<Rational> x(n);
            x[c] = 1;
            const long lambda = b.words[c].m;
            for (long mu = lambda + 1; mu <= top; ++mu) {
                std::vector<Rational> y(n);
                for (std::size_t r = 0; r < n; ++r) {
                    for (std::size_t s = 0; s < n; ++s)
                        if (m[r][s] != 0 && x[s] != 0) y[r] += m[r][s] * x[s];
                    y[r] = (y[r] - mu * x[r]) / (lambda - mu);
                }
                x = std::move(y);
            }
            for (std::size_t r = 0; r < n; ++r) phi[r][c] = x[r];
        }
        am.phi.emplace(key, std::move(phi));
    }
    return am;
}

struct IntertwiningReport {
    bool pass = true;
    long blocks_checked = 0;
    std::vector<std::pair<long, long>> failures;
};

/// phi o (Q_0)_(0) = (Q_t)_(0) o phi on every block.
inline IntertwiningReport verify_intertwining(const StateSpace& sp, const BlockOp& phi, const BlockOp& q0,
                                              const BlockOp& qt) {
    IntertwiningReport rep;
    for (const auto& [key, q] : q0) {
        auto [w, i] = key;
        const long d0 = sp.dim(w, i), d1 = sp.dim(w, i + 1);
        if (d0 == 0) continue;
        ++rep.blocks_checked;
        if (d1 == 0) continue;
        Matrix lhs = multiply(op_at(phi, w, i + 1), q, d1, d0);
        Matrix rhs = multiply(op_at(qt, w, i), op_at(phi, w, i), d0, d0);
        if (lhs != rhs) {
            rep.pass = false;
            rep.failures.push_back(key);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Generator images written out in closed form

struct ClosedFormImages {
    State e1, h1, f1, e2, h2, f2, psi, psis;
    State j; // image of J^h = h1 + 2 :psi psi*:
};

/// Variants of the f2 image. Naive: f2 - t^2/2 :J h2: + dJ - t^4/4 :e2 J J:, which
/// does not intertwine. Corrected: the coefficient of dJ is -t^2/2 and a term
/// (k+2) t^4/4 :h2 h2 e2: is added; this is what the eigenvector construction
/// produces. DropT4 is the corrected form without its t^4 :e2 J J: term.
enum class F2Image { Naive, Corrected, DropT4 };

/// e1 -> e1(1 - t^2 e2), h1 -> h1 - t^2 k de2, f1 -> f1(1 + t^2 e2), e2 -> e2,
/// h2 -> h2 + t^2 J e2, f2 as above, psi -> psi(1 - t^2 e2), psi* -> psi*(1 + t^2 e2).
inline ClosedFormImages closed_form_images(const Fock& F, const Rational& t, F2Image variant = F2Image::Naive) {
    const Rational t2 = t * t;
    ClosedFormImages im;
    auto times_e2 = [&](int g) { return F.field_mode(single(gen_state(g)), -1, lattice_state(1)); };
    im.e1 = single(gen_state(E1));
    add_to(im.e1, times_e2(E1), -t2);
    im.h1 = single(gen_state(H1));
    add_to(im.h1, F.apply(E2, -2, vacuum()), -t2 * F.level());
    im.f1 = single(gen_state(F1));
    add_to(im.f1, times_e2(F1), t2);
    im.e2 = lattice_state(1);
    State jj = j_state();
    im.h2 = single(gen_state(H2));
    add_to(im.h2, F.field_mode(jj, -1, lattice_state(1)), t2);
    im.f2 = lattice_state(-1);
    add_to(im.f2, F.field_mode(jj, -1, single(gen_state(H2))), -t2 / 2);
    add_to(im.f2, F.field_mode(jj, -2, vacuum()), variant == F2Image::Naive ? Rational(1) : -t2 / 2);
    if (variant != F2Image::DropT4) add_to(im.f2, F.apply(E2, -1, F.field_mode(jj, -1, jj)), -t2 * t2 / 4);
    if (variant != F2Image::Naive) add_to(im.f2, lattice_state(1, {1, 1}), (F.level() + 2) * t2 * t2 / 4);
    im.psi = single(gen_state(PSI));
    add_to(im.psi, times_e2(PSI), -t2);
    im.psis = single(gen_state(PSIS));
    add_to(im.psis, times_e2(PSIS), t2);
    im.j = im.h1;
    add_to(im.j, F.field_mode(im.psi, -1, im.psis), 2);
    return im;
}

inline BlockOp closed_form_phi(const StateSpace& sp, const Rational& t, F2Image variant = F2Image::Naive) {
    std::vector<std::pair<long, long>> keys;
    for (const auto& [key, b] : sp.blocks) keys.push_back(key);
    auto mats = parallel_map(keys.size(), [&](std::size_t idx) {
        Fock F(sp.k);
        auto im = closed_form_images(F, t, variant);
        Generators g{im.j, im.f1, im.psis, im.h2, im.f2};
        const Block& b = sp.block(keys[idx].first, keys[idx].second);
        Matrix m = zero_matrix(b.size(), b.size());
        for (std::size_t c = 0; c < b.size(); ++c) {
            auto coords = b.coordinates(expand(F, b.words[c], g));
            for (std::size_t r = 0; r < b.size(); ++r) m[r][c] = coords[r];
        }
        return m;
    });
    BlockOp out;
    for (std::size_t idx = 0; idx < keys.size(); ++idx) out.emplace(keys[idx], std::move(mats[idx]));
    return out;
}

// ---------------------------------------------------------------------------
// The Urod conformal vector on L_1(sl2)

/// L^U_m = 1/4 sum :b_j b_{m-j}: - (m+1)/2 b_m - (k+1)/2 m(m+1) e_(m-1)
inline State urod_virasoro_mode(const Fock& F, long m, const State& x) {
    State out;
    for (const auto& [mono, c] : x) {
        long d = 0;
        for (long p : mono.osc) d += p;
        State single_x = single(mono, c);
        for (long j = m - d; j <= d; ++j) {
            long lo = std::min(j, m - j), hi = std::max(j, m - j);
            add_to(out, F.apply(H2, lo, F.apply(H2, hi, single_x)), frac(1, 4));
        }
        add_to(out, F.apply(H2, m, single_x), frac(-(m + 1), 2));
        add_to(out, F.apply(E2, m - 1, single_x), -(F.level() + 1) * m * (m + 1) / 2);
    }
    return out;
}

struct VirasoroReport {
    Rational k;
    Rational c;
    bool brackets_ok = true;
    bool l0_matches_h_urod = true;
    long states_checked = 0;
    std::vector<std::string> failures;
};

inline VirasoroReport urod_virasoro_check(const Rational& k, long n) {
    VirasoroReport rep;
    rep.k = k;
    Fock F(k);
    auto L = [&](long m, const State& x) { return urod_virasoro_mode(F, m, x); };
    State vac = vacuum();
    State c_state = L(2, L(-2, vac));
    rep.c = c_state.empty() ? Rational(0) : 2 * c_state.begin()->second;
    if (!(c_state.empty() || (c_state.size() == 1 && c_state.begin()->first.is_vacuum()))) {
        rep.brackets_ok = false;
        rep.failures.push_back("[L2,L-2]|0> is not a multiple of |0>");
    }
    for (long w = 0; w <= n; ++w)
        for (const auto& [m, osc] : detail::lattice_states(w)) {
            State x = lattice_state(m, osc);
            ++rep.states_checked;
            State l0 = L(0, x);
            if (l0 != scaled(x, Rational(w))) rep.l0_matches_h_urod = false;
            for (long a = -2; a <= 2; ++a)
                for (long b = -2; b <= 2; ++b) {
                    State lhs = L(a, L(b, x));
                    add_to(lhs, L(b, L(a, x)), -1);
                    State rhs = scaled(L(a + b, x), Rational(a - b));
                    if (a + b == 0) add_to(rhs, x, rep.c * (a * a * a - a) / 12);
                    if (lhs != rhs) {
                        rep.brackets_ok = false;
                        rep.failures.push_back("[L" + std::to_string(a) + ",L" + std::to_string(b) + "] on " +
                                               to_string(x.begin()->first));
                    }
                }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Factor dimensions and the lab summary

struct FactorDims {
    std::vector<long> vk;    // V^k(sl2), standard grading: e, h, f of weight 1
    std::vector<long> l1;    // L_1(sl2) graded by H_Urod
    std::vector<long> ghost; // psi* modes of C_{<=0}, all ghost numbers
};

inline FactorDims factor_dims(long n) {
    FactorDims d;
    for (long w = 0; w < n; ++w) {
        long vk = 0;
        // PBW monomials in three colours: compositions of w into three partitions
        for (long a = 0; a <= w; ++a)
            for (long b = 0; a + b <= w; ++b)
                vk += static_cast<long>(detail::partitions(a, 1).size() * detail::partitions(b, 1).size() *
                                        detail::partitions(w - a - b, 1).size());
        d.vk.push_back(vk);
        d.l1.push_back(static_cast<long>(detail::lattice_states(w).size()));
        d.ghost.push_back(static_cast<long>(detail::partitions(w, 1, true).size()));
    }
    return d;
}

struct BlockSummary {
    long w = 0, i = 0;
    long dim_c = 0;
    long dim_h = 0;
};

struct BrstSummary {
    Rational k, t;
    long n = 0;
    std::vector<BlockSummary> blocks;
    bool nilpotent = false;
    bool h_nonzero_degree_vanishes = false;
    bool euler_ok = false;
    bool intertwining = false;
    bool phi_triangular = false;
    bool ahat_closed = false;
    Rational virasoro_c;
    bool virasoro_ok = false;
    std::vector<long> h0; // dim H^0(w), w < n
};

inline BrstSummary brst_summary(const StateSpace& sp, const Rational& t) {
    BrstSummary s;
    s.k = sp.k;
    s.t = t;
    s.n = sp.n;
    auto q0 = build_qt(sp, 0);
    auto qt = (t == 0) ? q0 : build_qt(sp, t);
    s.nilpotent = check_nilpotent(sp, qt).nilpotent;
    s.h_nonzero_degree_vanishes = true;
    s.euler_ok = true;
    for (long w = 0; w < sp.n; ++w) {
        long chi_c = 0, chi_h = 0;
        for (long i = 0; i <= sp.max_charge(w); ++i) {
            auto rec = cohomology(sp, qt, w, i);
            s.blocks.push_back({w, i, rec.dim_c, rec.dim_h});
            chi_c += (i % 2 == 0 ? 1 : -1) * rec.dim_c;
            chi_h += (i % 2 == 0 ? 1 : -1) * rec.dim_h;
            if (i != 0 && rec.dim_h != 0) s.h_nonzero_degree_vanishes = false;
            if (i == 0) s.h0.push_back(rec.dim_h);
        }
        if (chi_c != chi_h) s.euler_ok = false;
    }
    auto am = build_automorphism(sp, t);
    s.phi_triangular = am.triangular;
    s.ahat_closed = am.ahat_closed;
    s.intertwining = verify_intertwining(sp, am.phi, q0, qt).pass;
    auto vir = urod_virasoro_check(sp.k, sp.n);
    s.virasoro_c = vir.c;
    s.virasoro_ok = vir.brackets_ok && vir.l0_matches_h_urod && vir.c == -5;
    return s;
}

} // namespace urodlab::brst
