#pragma once

// Good gradings g = (+)_j g_j defined by a semisimple element x0, stored as a
// weight via the normalized form. Only Dynkin gradings are constructed
// (x0 = h/2 for an sl2-triple); explicit x0 input is accepted as is.

#include "urodlab/liecore.hpp"

#include <map>
#include <string>
#include <vector>

namespace urodlab {

enum class GradingSource { principal, partition, explicit_x0 };

struct GoodGrading {
    Weight x0;
    /// deg of each positive root (same order as RootSystem::positive_roots);
    /// negative roots carry the opposite degree.
    std::vector<Rational> positive_root_degrees;
    /// j -> dim g_j
    std::map<Rational, long> dims;
    bool even = true;
    GradingSource source = GradingSource::principal;
    std::vector<int> partition; // only for GradingSource::partition

    const RootSystemPtr& system() const { return x0.system; }
    long dim_at(const Rational& j) const {
        auto it = dims.find(j);
        return it == dims.end() ? 0 : it->second;
    }
    std::string label() const {
        if (source == GradingSource::principal) return "principal";
        if (source == GradingSource::explicit_x0) return "x0=" + weight_to_string(x0);
        std::string s = "partition=";
        for (std::size_t i = 0; i < partition.size(); ++i) s += (i ? "," : "") + std::to_string(partition[i]);
        return s;
    }
};

struct GradeStats {
    long dim_g0 = 0;
    long dim_g_half = 0;
    Rational norm_x0;
};

/// Builds the degree data for an arbitrary x0.
inline GoodGrading grading_from_x0(const Weight& x0, GradingSource source) {
    const auto& sys = *x0.system;
    GoodGrading g;
    g.x0 = x0;
    g.source = source;
    g.dims[Rational(0)] += sys.rank;
    for (const auto& root : sys.positive_roots) {
        // (alpha, x0) = sum_i n_i (alpha_i, x0) and (alpha_i, varpi_j) = delta_ij
        Rational d = 0;
        for (int i = 0; i < sys.rank; ++i) d += Rational(root[i]) * x0.coeffs[i];
        g.positive_root_degrees.push_back(d);
        g.dims[d] += 1;
        g.dims[Rational(-d)] += 1;
    }
    for (const auto& [j, n] : g.dims)
        if (n != 0 && !is_integer(j)) g.even = false;
    return g;
}

inline GoodGrading principal_grading(const RootSystemPtr& sys) {
    return grading_from_x0(rho(sys), GradingSource::principal);
}

/// Dynkin grading of sl_n for the nilpotent with Jordan type `parts`.
inline GoodGrading partition_grading(const RootSystemPtr& sys, std::vector<int> parts) {
    if (sys->kind != RootKind::A) throw DomainError("partition gradings are only available for type A");
    const int n = sys->rank + 1;
    long total = 0;
    for (int p : parts) {
        if (p <= 0) throw DomainError("partition parts must be positive");
        total += p;
    }
    if (total != n) throw DomainError("partition does not sum to n = " + std::to_string(n));
    std::sort(parts.begin(), parts.end(), std::greater<>());
    // eigenvalues of x0 = h/2: (p-1)/2, (p-3)/2, ..., (1-p)/2 per part, sorted decreasing
    std::vector<Rational> eig;
    for (int p : parts)
        for (int j = 0; j < p; ++j) eig.push_back(frac(p - 1 - 2 * j, 2));
    std::sort(eig.begin(), eig.end(), std::greater<>());
    std::vector<Rational> c(sys->rank);
    for (int i = 0; i < sys->rank; ++i) c[i] = eig[i] - eig[i + 1];
    auto g = grading_from_x0(make_weight(sys, c), GradingSource::partition);
    g.partition = parts;
    if (parts.size() == 1) g.source = GradingSource::principal;
    return g;
}

inline GoodGrading explicit_grading(const Weight& x0) {
    auto g = grading_from_x0(x0, GradingSource::explicit_x0);
    for (const auto& [j, n] : g.dims)
        if (g.dim_at(-j) != n) throw DomainError("explicit x0 gives an asymmetric grading");
    return g;
}

/// Parses "principal" or "partition=a,b,...".
inline GoodGrading parse_grading(const RootSystemPtr& sys, const std::string& spec) {
    if (spec.empty() || spec == "principal") return principal_grading(sys);
    const std::string prefix = "partition=";
    if (spec.rfind(prefix, 0) != 0) throw UsageError("unknown grading '" + spec + "'");
    std::vector<int> parts;
    std::string rest = spec.substr(prefix.size());
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty()) throw UsageError("malformed partition '" + spec + "'");
        for (char ch : item)
            if (ch < '0' || ch > '9') throw UsageError("malformed partition '" + spec + "'");
        parts.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return partition_grading(sys, parts);
}

inline GradeStats grade_stats(const GoodGrading& g) {
    return GradeStats{g.dim_at(0), g.dim_at(Rational(1, 2)), norm2(g.x0)};
}

inline bool same_grading_data(const GoodGrading& a, const GoodGrading& b) {
    return a.x0 == b.x0 && a.dims == b.dims && a.even == b.even;
}

} // namespace urodlab
