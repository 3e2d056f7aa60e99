#pragma once

// Enumeration of coset points nu + Q inside an ellipsoid |beta - c|^2 < R^2.
//
// In simple-root coordinates y = n - c' the norm is y^T A y with A the
// Cartan matrix, and max y_i^2 over the ellipsoid is R^2 (A^{-1})_{ii}.
// The box built from that bound therefore contains every point; the exact
// norm test then discards the rest.

#include "urodlab/liecore.hpp"

#include <vector>

namespace urodlab {

/// All beta in nu + Q with |beta - center|^2 < radius2 (or <= when !strict),
/// sorted by weight coefficients.
inline std::vector<Weight> lattice_points(const Weight& nu, const Weight& center, const Rational& radius2,
                                          bool strict = true) {
    const auto& sys = nu.system;
    std::vector<Weight> out;
    if (radius2 < 0 || (strict && radius2 == 0)) return out;
    const int r = sys->rank;
    auto cprime = root_coordinates(center - nu);
    std::vector<long> lo(r), hi(r);
    for (int i = 0; i < r; ++i) {
        Rational bound = radius2 * sys->cartan_inverse[i][i];
        Integer s = isqrt_floor(bound) + 1;
        lo[i] = to_long(floor_of(cprime[i]) - s);
        hi[i] = to_long(ceil_of(cprime[i]) + s);
    }
    std::vector<long> n(lo);
    std::vector<Rational> y(r);
    while (true) {
        for (int i = 0; i < r; ++i) y[i] = Rational(n[i]) - cprime[i];
        Rational q = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (sys->cartan[i][j] != 0) q += y[i] * sys->cartan[i][j] * y[j];
        if (strict ? q < radius2 : q <= radius2) out.push_back(nu + weight_from_root(sys, n));
        int i = 0;
        while (i < r && n[i] == hi[i]) {
            n[i] = lo[i];
            ++i;
        }
        if (i == r) break;
        ++n[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace urodlab
