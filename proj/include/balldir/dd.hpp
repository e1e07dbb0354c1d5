// Double-double accumulation (error-free transformations; Ogita-Rump-Oishi).
#pragma once

#include <cmath>
#include <complex>

namespace balldir {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    static DD two_sum(double a, double b) {
        double s = a + b;
        double ap = s - b;
        double bp = s - ap;
        return {s, (a - ap) + (b - bp)};
    }

    static DD two_prod(double a, double b) {
        double p = a * b;
        return {p, std::fma(a, b, -p)};
    }

    void add(double x) {
        DD t = two_sum(hi, x);
        t.lo += lo;
        hi = t.hi + t.lo;
        lo = t.lo - (hi - t.hi);
    }

    void add(const DD& x) {
        add(x.hi);
        add(x.lo);
    }

    // accumulate a*b without intermediate rounding
    void add_prod(double a, double b) {
        DD p = two_prod(a, b);
        add(p.hi);
        add(p.lo);
    }

    // accumulate w*a*b (w applied to both legs of the exact product)
    void add_prod(double w, double a, double b) {
        DD p = two_prod(a, b);
        add_prod(w, p.hi);
        add(w * p.lo);
    }

    double value() const { return hi + lo; }
};

// Complex accumulator for sums of w * a * conj(b), real weight w.
struct DDC {
    DD re;
    DD im;

    void add_prod_conj(double w, std::complex<double> a, std::complex<double> b) {
        re.add_prod(w, a.real(), b.real());
        re.add_prod(w, a.imag(), b.imag());
        im.add_prod(w, a.imag(), b.real());
        im.add_prod(-w, a.real(), b.imag());
    }

    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }

    std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace balldir
