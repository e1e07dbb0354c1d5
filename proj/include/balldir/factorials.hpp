// Factorial ratios, binomials and related sequences, all evaluated by
// cancellation products so that intermediates never leave machine range.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace balldir {

// k! l! / (1+k+l)!  ==  [ prod_{i=1..min} i/(max+i) ] / (k+l+1).
// Factors interleave numerator and denominator, each in (0,1].
template <class F = double>
F factorial_ratio(int k, int l) {
    int m = std::min(k, l);
    int M = std::max(k, l);
    F r = F(1);
    for (int i = 1; i <= m; ++i) r *= F(i) / F(M + i);
    return r / F(M + m + 1);
}

// C(n, j) as a floating product; exact for small arguments, ~ulp*n otherwise.
template <class F = double>
F binomial(int n, int j) {
    if (j < 0 || j > n) return F(0);
    j = std::min(j, n - j);
    F r = F(1);
    for (int i = 1; i <= j; ++i) r = r * F(n - j + i) / F(i);
    return r;
}

inline double harmonic(int n) {
    double s = 0.0;
    for (int j = 1; j <= n; ++j) s += 1.0 / j;
    return s;
}

// s_k = 4^k (k+1)^{1/2} (k!)^2 / (1+2k)!   (decreases from 1 to sqrt(pi)/2).
// Generated by the recurrence s_{k+1} = s_k sqrt((k+2)/(k+1)) (2k+2)/(2k+3).
struct SkSequence {
    int k = 0;
    double value = 1.0;

    void advance() {
        value *= std::sqrt((k + 2.0) / (k + 1.0)) * (2.0 * k + 2.0) / (2.0 * k + 3.0);
        ++k;
    }
};

inline double s_factor(int k) {
    SkSequence s;
    while (s.k < k) s.advance();
    return s.value;
}

// 2^{k/2} and 2^{-k/2} for integer k, split as exact power of two times sqrt(2).
inline double pow2_half(int k) {
    if (k >= 0) {
        double p = std::ldexp(1.0, k / 2);
        return (k % 2 == 0) ? p : p * std::sqrt(2.0);
    }
    int a = -k;
    double p = std::ldexp(1.0, -(a / 2));
    return (a % 2 == 0) ? p : p * std::sqrt(0.5);
}

}  // namespace balldir
