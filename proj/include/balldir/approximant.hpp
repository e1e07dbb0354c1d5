// Optimal polynomial approximants: squared distance from 1 to f times the
// total-degree-D multiplier space, by Hermitian normal equations with a
// residual-orthogonality certificate, plus the rate-fit harness.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "balldir/dd.hpp"
#include "balldir/errors.hpp"
#include "balldir/factorials.hpp"
#include "balldir/linalg.hpp"
#include "balldir/poly.hpp"
#include "balldir/weights.hpp"

namespace balldir {

struct BasisSpec {
    int max_total_degree = 0;

    std::size_t size() const {
        return std::size_t(max_total_degree + 1) * (max_total_degree + 2) / 2;
    }
};

// all (k,l) with k+l <= D: degree ascending, k descending within a degree,
// so the sequence starts (0,0),(1,0),(0,1),(2,0),...
inline std::vector<MultiIndex> enumerate_basis(BasisSpec spec) {
    std::vector<MultiIndex> basis;
    basis.reserve(spec.size());
    for (int d = 0; d <= spec.max_total_degree; ++d)
        for (int k = d; k >= 0; --k) basis.push_back({k, d - k});
    return basis;
}

struct DistOptions {
    int threads = 1;
    // Gram entries accumulate in double-double beyond this degree; the
    // residual certificate below forces a retry in double-double if plain
    // accumulation was not good enough.
    int dd_degree_threshold = 24;
    double certificate_tol = 1e-8;
};

struct DistResult {
    double dist_sq = 0.0;
    BivarPoly p_star;
    double cond_estimate = 0.0;
    double certificate = 0.0;  // max_q |<r, z^q f>| / (||f|| ||z^q f||)
    bool used_dd = false;
};

namespace detail {

template <class T>
T to_scalar(Complex c);
template <>
inline double to_scalar<double>(Complex c) {
    return c.real();
}
template <>
inline Complex to_scalar<Complex>(Complex c) {
    return c;
}

template <class T>
struct GramAccum;
template <>
struct GramAccum<double> {
    DD acc;
    void add(double w, double a, double b, bool dd) {
        if (dd)
            acc.add_prod(w, a, b);
        else
            acc.add(w * a * b);
    }
    double value() const { return acc.value(); }
};
template <>
struct GramAccum<Complex> {
    DDC acc;
    void add(double w, Complex a, Complex b, bool dd) {
        if (dd)
            acc.add_prod_conj(w, a, b);
        else
            acc.add(w * a * std::conj(b));
    }
    Complex value() const { return acc.value(); }
};

// Normal-equation solve over scalar type T (double for real symbols).
template <class T>
DistResult dist_solve(const BivarPoly& f, Alpha alpha, BasisSpec spec,
                      const DistOptions& opts, bool use_dd) {
    const auto basis = enumerate_basis(spec);
    const int n = int(basis.size());

    std::vector<MultiIndex> fidx;
    std::vector<T> fval;
    for (const auto& [idx, c] : f.terms()) {
        fidx.push_back(idx);
        fval.push_back(to_scalar<T>(c));
    }
    const int m = int(fidx.size());

    // A_{ij} = <z^{q_j} f, z^{q_i} f>_alpha
    std::vector<T> A(std::size_t(n) * n, T(0.0));
    parallel_for(std::size_t(n), opts.threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                GramAccum<T> acc;
                for (int t = 0; t < m; ++t) {
                    MultiIndex target = basis[i] + fidx[t];
                    for (int s = 0; s < m; ++s) {
                        if (basis[j] + fidx[s] == target)
                            acc.add(weight_2d(alpha, target), fval[s], fval[t], use_dd);
                    }
                }
                T v = acc.value();
                A[i * n + j] = v;
                A[j * n + i] = linalg::conj_scalar(v);
            }
        }
    });

    // b_i = <1, z^{q_i} f>_alpha; only the constant basis monomial survives
    std::vector<T> b(n, T(0.0));
    b[0] = T(weight_2d(alpha, {0, 0})) * linalg::conj_scalar(to_scalar<T>(f.coeff({0, 0})));

    std::vector<T> L = A;
    if (!linalg::cholesky_inplace(L, n))
        throw SingularGram("Gram matrix not positive definite (f == 0 or rank-deficient)");

    const double cond = linalg::norm1(A, n) * linalg::inv_norm1_estimate(L, n);

    std::vector<T> c = b;
    linalg::cholesky_solve(L, n, c);
    // one step of iterative refinement with a double-double residual
    std::vector<T> r(n);
    linalg::residual(A, n, b, c, r);
    linalg::cholesky_solve(L, n, r);
    for (int i = 0; i < n; ++i) c[i] += r[i];

    DistResult out;
    out.cond_estimate = cond;
    out.used_dd = use_dd;
    for (int i = 0; i < n; ++i) out.p_star.add_to(basis[i], Complex(c[i]));

    // distance and certificate evaluated on the actual residual polynomial
    BivarPoly res = out.p_star * f - BivarPoly(1.0);
    {
        DD acc;
        for (const auto& [idx, cv] : res.terms())
            acc.add_prod(weight_2d(alpha, idx), std::norm(cv));
        out.dist_sq = acc.value();
    }
    const double norm_f = std::sqrt(norm_sq_2d(f, alpha));
    double cert = 0.0;
    for (int i = 0; i < n; ++i) {
        DDC pairing;
        DD nrm;
        for (const auto& [idx, cf] : f.terms()) {
            MultiIndex at = basis[i] + idx;
            double w = weight_2d(alpha, at);
            pairing.add_prod_conj(w, res.coeff(at), cf);
            nrm.add(w * std::norm(cf));
        }
        double scale = norm_f * std::sqrt(nrm.value());
        if (scale > 0.0) cert = std::max(cert, std::abs(pairing.value()) / scale);
    }
    out.certificate = cert;
    return out;
}

}  // namespace detail

inline DistResult dist_sq_opt(const BivarPoly& f, Alpha alpha, BasisSpec spec,
                              const DistOptions& opts = {}) {
    if (f.is_zero()) throw SingularGram("f must be nonzero");
    bool use_dd = spec.max_total_degree > opts.dd_degree_threshold;
    auto run = [&](bool dd) {
        return f.is_real() ? detail::dist_solve<double>(f, alpha, spec, opts, dd)
                           : detail::dist_solve<Complex>(f, alpha, spec, opts, dd);
    };
    DistResult res = run(use_dd);
    if (res.certificate > opts.certificate_tol && !use_dd) res = run(true);
    if (res.certificate > opts.certificate_tol)
        throw SingularGram("residual-orthogonality certificate failed (certificate " +
                               std::to_string(res.certificate) + ")",
                           res.cond_estimate);
    return res;
}

struct DistRow {
    int D = 0;
    double dist_sq = 0.0;
    double cond_estimate = 0.0;
    BivarPoly p_star;
};

using DistanceTable = std::vector<DistRow>;

inline DistanceTable distance_sweep(const BivarPoly& f, Alpha alpha, int dmin, int dmax,
                                    int dstep = 2, const DistOptions& opts = {}) {
    if (dmin < 0 || dmax < dmin || dstep <= 0) throw DomainError("bad degree range");
    DistanceTable table;
    for (int D = dmin; D <= dmax; D += dstep) {
        DistResult r = dist_sq_opt(f, alpha, BasisSpec{D}, opts);
        table.push_back({D, r.dist_sq, r.cond_estimate, std::move(r.p_star)});
    }
    return table;
}

// phi_a(n) = n^{1-a} for a in [0,1), harmonic number for a = 1
inline double phi(Alpha alpha, int n) {
    if (n < 1) throw OutOfRange("phi requires n >= 1");
    double a = alpha.value;
    if (a == 1.0) return harmonic(n);
    if (a >= 0.0 && a < 1.0) return std::pow(double(n), 1.0 - a);
    throw OutOfRange("phi defined for alpha in [0,1]");
}

struct RateFit {
    double slope = 0.0;
    double r2 = 0.0;
    int rows_used = 0;
};

// least-squares slope of log dist_sq against log D over the window
inline RateFit rate_fit(const DistanceTable& table, int dmin, int dmax) {
    std::vector<double> lx, ly;
    for (const auto& row : table) {
        if (row.D < dmin || row.D > dmax) continue;
        if (!(row.dist_sq > 0.0))
            throw InsufficientData("rate_fit requires positive distances in the window");
        lx.push_back(std::log(double(row.D)));
        ly.push_back(std::log(row.dist_sq));
    }
    const int n = int(lx.size());
    if (n < 4) throw InsufficientData("rate_fit requires at least 4 rows in the window");
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    RateFit fit;
    fit.slope = sxy / sxx;
    fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    fit.rows_used = n;
    return fit;
}

// CSV: D, n=D/2, dist_sq, sqrt_dist_sq, phi_prediction, cond_estimate.
// The prediction column is 1/phi_{alpha-shift}(n+1) where defined, else nan.
inline void write_distance_csv(std::ostream& os, const DistanceTable& table, Alpha alpha,
                               double phi_shift = 1.0,
                               const std::vector<std::string>& header_comments = {}) {
    for (const auto& line : header_comments) os << "# " << line << "\n";
    os << "D,n,dist_sq,sqrt_dist_sq,phi_prediction,cond_estimate\n";
    for (const auto& row : table) {
        double pred = std::numeric_limits<double>::quiet_NaN();
        double shifted = alpha.value - phi_shift;
        if (row.D % 2 == 0 && shifted >= 0.0 && shifted <= 1.0)
            pred = 1.0 / phi(Alpha(shifted), row.D / 2 + 1);
        os << row.D << "," << detail::format_double(row.D / 2.0) << ","
           << detail::format_double(row.dist_sq) << ","
           << detail::format_double(std::sqrt(row.dist_sq)) << ","
           << detail::format_double(pred) << ","
           << detail::format_double(row.cond_estimate) << "\n";
    }
}

}  // namespace balldir
