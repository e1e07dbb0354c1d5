// Dense Hermitian positive definite solves: Cholesky factorization, one step
// of extra-precise iterative refinement, and a Hager-style 1-norm condition
// estimate. Scalar type is double or std::complex<double>.
#pragma once

#include <cmath>
#include <complex>
#include <thread>
#include <vector>

#include "balldir/dd.hpp"
#include "balldir/errors.hpp"

namespace balldir {

namespace linalg {

inline double conj_scalar(double x) { return x; }
inline std::complex<double> conj_scalar(std::complex<double> x) { return std::conj(x); }
inline double real_part(double x) { return x; }
inline double real_part(std::complex<double> x) { return x.real(); }
inline double abs1(double x) { return std::abs(x); }
inline double abs1(std::complex<double> x) { return std::abs(x.real()) + std::abs(x.imag()); }

// Lower Cholesky in place (full storage, row-major, upper half ignored).
// Returns false on a non-positive pivot.
template <class T>
bool cholesky_inplace(std::vector<T>& a, int n) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            T s = a[i * n + j];
            for (int p = 0; p < j; ++p) s -= a[i * n + p] * conj_scalar(a[j * n + p]);
            if (i == j) {
                double d = real_part(s);
                if (!(d > 0.0) || !std::isfinite(d)) return false;
                a[i * n + i] = T(std::sqrt(d));
            } else {
                a[i * n + j] = s / real_part(a[j * n + j]);
            }
        }
    }
    return true;
}

template <class T>
void cholesky_solve(const std::vector<T>& L, int n, std::vector<T>& x) {
    for (int i = 0; i < n; ++i) {
        T s = x[i];
        for (int p = 0; p < i; ++p) s -= L[i * n + p] * x[p];
        x[i] = s / real_part(L[i * n + i]);
    }
    for (int i = n - 1; i >= 0; --i) {
        T s = x[i];
        for (int p = i + 1; p < n; ++p) s -= conj_scalar(L[p * n + i]) * x[p];
        x[i] = s / real_part(L[i * n + i]);
    }
}

// residual r = b - G x, accumulated double-double
inline void residual(const std::vector<double>& G, int n, const std::vector<double>& b,
                     const std::vector<double>& x, std::vector<double>& r) {
    for (int i = 0; i < n; ++i) {
        DD acc;
        acc.add(b[i]);
        for (int j = 0; j < n; ++j) acc.add_prod(-G[i * n + j], x[j]);
        r[i] = acc.value();
    }
}

inline void residual(const std::vector<std::complex<double>>& G, int n,
                     const std::vector<std::complex<double>>& b,
                     const std::vector<std::complex<double>>& x,
                     std::vector<std::complex<double>>& r) {
    for (int i = 0; i < n; ++i) {
        DDC acc;
        acc.add(b[i]);
        for (int j = 0; j < n; ++j) acc.add_prod_conj(-1.0, G[i * n + j] * x[j], 1.0);
        r[i] = acc.value();
    }
}

template <class T>
double norm1(const std::vector<T>& G, int n) {
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::abs(G[i * n + j]);
        best = std::max(best, s);
    }
    return best;
}

// Hager's estimator for ||G^{-1}||_1 using the Cholesky factor.
template <class T>
double inv_norm1_estimate(const std::vector<T>& L, int n) {
    std::vector<T> x(n, T(1.0 / n));
    double est = 0.0;
    int last_j = -1;
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<T> y = x;
        cholesky_solve(L, n, y);
        double ny = 0.0;
        for (auto& v : y) ny += std::abs(v);
        est = std::max(est, ny);
        std::vector<T> xi(n);
        for (int i = 0; i < n; ++i) {
            double a = std::abs(y[i]);
            xi[i] = a == 0.0 ? T(1.0) : T(y[i] / a);
        }
        cholesky_solve(L, n, xi);
        int j = 0;
        double zmax = -1.0;
        double zdotx = 0.0;
        for (int i = 0; i < n; ++i) {
            double a = std::abs(xi[i]);
            zdotx += real_part(conj_scalar(xi[i]) * x[i]);
            if (a > zmax) {
                zmax = a;
                j = i;
            }
        }
        if (zmax <= zdotx || j == last_j) break;
        std::fill(x.begin(), x.end(), T(0.0));
        x[j] = T(1.0);
        last_j = j;
    }
    return est;
}

}  // namespace linalg

// Chunked parallel loop. Each index is computed independently, so results are
// bitwise identical for any thread count.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& body) {
    if (threads <= 1 || n < 2) {
        body(0, n);
        return;
    }
    int t = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    std::size_t chunk = (n + t - 1) / t;
    for (int i = 0; i < t; ++i) {
        std::size_t lo = i * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([=, &body] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace balldir
