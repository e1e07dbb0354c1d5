// Riesz alpha-kernels and energies. The alpha=2 moment series is exact; for
// alpha < 2 the same shell sum with (k+1)^{1-alpha} weights is only a
// comparable form and is flagged as such. Truncated series report their last
// term and a power-law tail estimate; the estimate is reported separately
// from the partial sum and never silently folded into it.
#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "balldir/errors.hpp"
#include "balldir/measures.hpp"

namespace balldir {

// h_a(t) = t^{a-2} for a in (0,2), log(e/t) for a = 2
inline double kernel_h(double alpha, double t) {
    if (!(alpha > 0.0) || alpha > 2.0) throw DomainError("kernel order must lie in (0,2]");
    if (!(t > 0.0)) throw DomainError("kernel argument must be positive");
    if (alpha == 2.0) return 1.0 - std::log(t);
    return std::pow(t, alpha - 2.0);
}

struct EnergyReport {
    double value = 0.0;          // partial_sum + tail_estimate (series), or the double sum
    double partial_sum = 0.0;
    double tail_estimate = 0.0;
    double last_term = 0.0;
    double fitted_exponent = 0.0;  // local decay exponent of the series terms
    int K = 0;                     // series truncation
    int iterations = 0;            // minimizer iterations (discrete path)
    std::string method;            // "series" | "discrete"
    bool comparable_form = false;  // alpha < 2 shell form, constants unspecified
    bool diverged = false;
    bool converged = true;         // false = iteration/truncation budget exhausted
};

struct SeriesOptions {
    double ceiling = 1e12;       // divergence ceiling for partial sums
    double tail_tol = 1e-10;     // stop refining when the last term drops below this
    double value_tol = 1e-7;     // adaptive: stop when the reported value stabilizes
    int k_max = 1 << 22;         // adaptive budget
    double divergent_exponent = 1.02;  // fitted p at or below this flags divergence
};

namespace detail {

struct TermSample {
    double k;
    double term;
};

// least-squares fit of log(term) = log c - p log k
inline bool fit_power_law(const std::vector<TermSample>& samples, double& p, double& logc) {
    if (samples.size() < 8) return false;
    double mx = 0.0, my = 0.0;
    for (const auto& s : samples) {
        mx += std::log(s.k);
        my += std::log(s.term);
    }
    mx /= samples.size();
    my /= samples.size();
    double sxx = 0.0, sxy = 0.0;
    for (const auto& s : samples) {
        double dx = std::log(s.k) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(s.term) - my);
    }
    if (sxx == 0.0) return false;
    p = -sxy / sxx;
    logc = my + p * mx;
    return true;
}

}  // namespace detail

// Truncated shell series at fixed K.
//   alpha = 2:  1 + sum_{k=1..K} shell_k / k           (exact identity)
//   alpha < 2:  sum_{k=0..K} (k+1)^{1-alpha} shell_k   (comparable form)
// The tail estimate integrates a power law fitted to the top octave of
// nonzero terms; a fitted exponent <= 1 means the tail diverges.
inline EnergyReport energy_series(const MomentMeasure& mu, double alpha, int K,
                                  const SeriesOptions& opts = {}) {
    if (!(alpha > 0.0) || alpha > 2.0) throw DomainError("series order must lie in (0,2]");
    if (K < 0) throw DomainError("energy_series requires K >= 0");
    EnergyReport rep;
    rep.method = "series";
    rep.K = K;
    rep.comparable_form = alpha < 2.0;

    auto cursor = mu.shell_cursor();
    double sum = 0.0;
    std::vector<detail::TermSample> window;  // nonzero terms, decimated on overflow
    int stride = 1;
    const int low_k = std::max(1, K / 2);

    for (int k = 0; k <= K; ++k) {
        double shell = cursor->next();
        double term;
        if (alpha == 2.0)
            term = (k == 0) ? shell : shell / k;
        else
            term = std::pow(k + 1.0, 1.0 - alpha) * shell;
        sum += term;
        if (term != 0.0) rep.last_term = term;
        if (sum > opts.ceiling) {
            rep.partial_sum = sum;
            rep.value = std::numeric_limits<double>::infinity();
            rep.diverged = true;
            return rep;
        }
        if (k >= 1 && term > 0.0 && k % stride == 0) {
            window.push_back({double(k), term});
            if (window.size() > 8192) {
                std::vector<detail::TermSample> half;
                half.reserve(window.size() / 2);
                for (std::size_t i = 0; i < window.size(); i += 2) half.push_back(window[i]);
                window.swap(half);
                stride *= 2;
            }
        }
    }
    rep.partial_sum = sum;

    std::vector<detail::TermSample> tail_window;
    for (const auto& s : window)
        if (s.k >= low_k) tail_window.push_back(s);
    double p = 0.0, logc = 0.0;
    if (detail::fit_power_law(tail_window, p, logc)) {
        rep.fitted_exponent = p;
        if (p <= opts.divergent_exponent) {
            rep.value = std::numeric_limits<double>::infinity();
            rep.diverged = true;
            return rep;
        }
        // midpoint-rule integral of c x^-p from K, spacing of nonzero terms
        double delta = tail_window.size() > 1
                           ? (tail_window.back().k - tail_window.front().k) /
                                 double(tail_window.size() - 1)
                           : 1.0;
        double keff = tail_window.back().k + 0.5 * delta;
        rep.tail_estimate = std::exp(logc) * std::pow(keff, 1.0 - p) / (delta * (p - 1.0));
    }
    rep.value = rep.partial_sum + rep.tail_estimate;
    return rep;
}

// K-doubling driver: refine until the reported value stabilizes to value_tol,
// the series is flagged divergent, or the budget runs out (converged=false).
inline EnergyReport energy_series_adaptive(const MomentMeasure& mu, double alpha,
                                           int k0 = 4096, const SeriesOptions& opts = {}) {
    EnergyReport prev;
    bool have_prev = false;
    for (int K = k0; K <= opts.k_max; K *= 2) {
        EnergyReport rep = energy_series(mu, alpha, K, opts);
        if (rep.diverged) return rep;
        if (have_prev && std::abs(rep.value - prev.value) <
                             opts.value_tol * std::max(1.0, std::abs(rep.value)))
            return rep;
        if (rep.last_term < opts.tail_tol && rep.tail_estimate == 0.0) return rep;
        prev = rep;
        have_prev = true;
    }
    prev.converged = false;
    return prev;
}

// Discrete surrogate of the double integral on a weighted cloud; self-pairs
// are excluded. Coincident distinct points make the kernel singular and the
// report is flagged divergent.
inline EnergyReport energy_discrete(const PointCloud& cloud, double alpha) {
    if (cloud.points.size() < 2)
        throw DegenerateCloud("discrete energy requires at least 2 points");
    cloud.validate();
    EnergyReport rep;
    rep.method = "discrete";
    const auto N = cloud.points.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            double ww = cloud.weights[i] * cloud.weights[j];
            if (ww == 0.0) continue;
            double t = std::abs(1.0 - hermitian_inner(cloud.points[i], cloud.points[j]));
            if (t < 1e-15) {
                rep.diverged = true;
                rep.value = std::numeric_limits<double>::infinity();
                return rep;
            }
            sum += ww * kernel_h(alpha, t);
        }
    }
    rep.partial_sum = sum;
    rep.value = sum;
    return rep;
}

}  // namespace balldir
