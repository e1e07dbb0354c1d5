// Coefficient weights and norms for the two-variable Dirichlet-type scale,
// the one-variable disk scales, and the (conjugation-free) dual pairing.
#pragma once

#include <cmath>

#include "balldir/dd.hpp"
#include "balldir/factorials.hpp"
#include "balldir/poly.hpp"

namespace balldir {

// Space parameter. Values above 2 are legal but put the space in the
// multiplier-algebra regime, which some callers want to know about.
struct Alpha {
    double value = 0.0;

    Alpha() = default;
    explicit Alpha(double v) : value(v) {}
    bool algebra_regime() const { return value > 2.0; }
};

// (2+k+l)^alpha * k! l! / (1+k+l)!
template <class F = double>
F weight_2d(Alpha alpha, MultiIndex idx) {
    return std::pow(F(2 + idx.k + idx.l), F(alpha.value)) * factorial_ratio<F>(idx.k, idx.l);
}

struct Weight {
    Alpha alpha;
    double operator()(MultiIndex idx) const { return weight_2d(alpha, idx); }
};

inline double norm_sq_2d(const BivarPoly& f, Alpha alpha) {
    DD acc;
    for (const auto& [idx, c] : f.terms())
        acc.add(weight_2d(alpha, idx) * std::norm(c));
    return acc.value();
}

// one-variable weights: (k+1)^alpha on the disk, 2^{-k}(k+1)^alpha on the
// radius-1/sqrt(2) disk (coefficient form taken as the definition)
inline double weight_1var(Flavor flavor, Alpha alpha, int k) {
    double w = std::pow(k + 1.0, alpha.value);
    if (flavor == Flavor::SmallDiskd) w *= std::ldexp(1.0, -k);
    return w;
}

inline double norm_sq_1var(const UnivarPoly& g, Alpha alpha) {
    DD acc;
    for (const auto& [k, c] : g.coeffs())
        acc.add(weight_1var(g.flavor(), alpha, k) * std::norm(c));
    return acc.value();
}

// sum over common support of  k!l!/(1+k+l)! * a_{k,l} * b_{k,l}, no conjugation
inline Complex dual_pair(const BivarPoly& f, const BivarPoly& g) {
    const BivarPoly& small = f.support_size() <= g.support_size() ? f : g;
    const BivarPoly& large = f.support_size() <= g.support_size() ? g : f;
    DDC acc;
    for (const auto& [idx, c] : small.terms()) {
        Complex d = large.coeff(idx);
        if (d == Complex(0.0)) continue;
        acc.add(factorial_ratio(idx.k, idx.l) * c * d);
    }
    return acc.value();
}

}  // namespace balldir
