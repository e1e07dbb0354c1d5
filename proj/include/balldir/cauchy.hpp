// Cauchy transforms of sphere measures: coefficient expansion, truncated
// dual-space norms (literal weighted route and the moment-shell route, kept
// separate so they cross-check each other), and annihilation pairings.
#pragma once

#include <cmath>
#include <complex>

#include "balldir/errors.hpp"
#include "balldir/factorials.hpp"
#include "balldir/measures.hpp"
#include "balldir/poly.hpp"
#include "balldir/weights.hpp"

namespace balldir {

struct CauchyExpansion {
    int K = 0;          // total-degree truncation
    BivarPoly coeffs;   // coeff at (j,k-j) is (k+1) C(k,j) conj-moment(j,k-j)
};

inline CauchyExpansion cauchy_coeffs(const MomentMeasure& mu, int K) {
    if (K < 0) throw DomainError("cauchy_coeffs requires K >= 0");
    CauchyExpansion e;
    e.K = K;
    for (int k = 0; k <= K; ++k) {
        double binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            Complex m = mu.moment_bar(j, k - j);
            if (m != Complex(0.0)) e.coeffs.add_to({j, k - j}, (k + 1.0) * binom * m);
            binom = binom * double(k - j) / double(j + 1);
        }
    }
    return e;
}

struct CauchyNormReport {
    int K = 0;
    double exact_trunc = 0.0;       // sum of weight_2d(-alpha) |coeff|^2
    double lemma_form_trunc = 0.0;  // sum of (k+1)^{1-alpha} C(k,j) |mu*|^2
    double exact_last_shell = 0.0;  // k = K contributions, convergence indicators
    double lemma_last_shell = 0.0;
};

// Both truncations of the dual-norm expressions. Accumulated in long double:
// the literal route multiplies a tiny weight by a huge squared coefficient,
// which stays inside extended range for k up to a few thousand.
inline CauchyNormReport cauchy_norm_sq(const MomentMeasure& mu, Alpha alpha, int K) {
    if (K < 0) throw DomainError("cauchy_norm_sq requires K >= 0");
    CauchyNormReport rep;
    rep.K = K;
    long double exact = 0.0L, lemma = 0.0L;
    const long double a = alpha.value;
    for (int k = 0; k <= K; ++k) {
        long double exact_shell = 0.0L, lemma_shell = 0.0L;
        long double binom = 1.0L;
        const long double kp1 = k + 1.0L;
        const long double lemma_pow = std::pow(kp1, 1.0L - a);
        for (int j = 0; j <= k; ++j) {
            double m2 = std::norm(mu.moment(j, k - j));
            if (m2 != 0.0) {
                long double w = weight_2d<long double>(Alpha(-alpha.value), {j, k - j});
                long double coeff = kp1 * binom;  // modulus of the (j,k-j) coefficient / |mu*|
                exact_shell += w * (coeff * coeff) * (long double)m2;
                lemma_shell += lemma_pow * binom * (long double)m2;
            }
            binom = binom * (long double)(k - j) / (long double)(j + 1);
        }
        exact += exact_shell;
        lemma += lemma_shell;
        if (k == K) {
            rep.exact_last_shell = double(exact_shell);
            rep.lemma_last_shell = double(lemma_shell);
        }
    }
    rep.exact_trunc = double(exact);
    rep.lemma_form_trunc = double(lemma);
    return rep;
}

// max over monomials z1^a z2^b, a+b <= M, of |<z1^a z2^b f, C[mu]>| with the
// transform truncated at K >= deg f + M + margin.
inline double annihilation_check(const BivarPoly& f, const MomentMeasure& mu, int M,
                                 int margin = 8) {
    if (M < 0) throw DomainError("annihilation_check requires M >= 0");
    const int K = f.total_degree() + M + margin;
    const CauchyExpansion expansion = cauchy_coeffs(mu, K);
    double worst = 0.0;
    for (int a = 0; a <= M; ++a)
        for (int b = 0; a + b <= M; ++b) {
            Complex v = dual_pair(f.shifted({a, b}), expansion.coeffs);
            worst = std::max(worst, std::abs(v));
        }
    return worst;
}

}  // namespace balldir
