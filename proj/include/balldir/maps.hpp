// Maps between one- and two-variable function spaces: axis extension and
// restriction, the diagonal restriction/lift pair, and composition with a
// unitary change of variables.
#pragma once

#include <array>
#include <cmath>
#include <vector>

#include <json.hpp>

#include "balldir/errors.hpp"
#include "balldir/factorials.hpp"
#include "balldir/poly.hpp"

namespace balldir {

class Unitary2 {
public:
    // entries row-major: [[u11,u12],[u21,u22]]; must satisfy U U* = I to 1e-14
    Unitary2(Complex u11, Complex u12, Complex u21, Complex u22)
        : u_{{u11, u12, u21, u22}} {
        check();
    }

    Complex u11() const { return u_[0]; }
    Complex u12() const { return u_[1]; }
    Complex u21() const { return u_[2]; }
    Complex u22() const { return u_[3]; }

    static Unitary2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    // the rotation exchanging 1-z1 with 1-(z1+z2)/sqrt(2)
    static Unitary2 hadamard() {
        const double s = std::sqrt(0.5);
        return {s, s, s, -s};
    }

    static Unitary2 from_json(const nlohmann::json& j) {
        auto entry = [&](int r, int c) {
            const auto& e = j.at(r).at(c);
            if (e.is_number()) return Complex(e.get<double>(), 0.0);
            return Complex(e.at(0).get<double>(), e.at(1).get<double>());
        };
        return {entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
    }

private:
    std::array<Complex, 4> u_;

    void check() const {
        auto [a, b, c, d] = u_;
        Complex r00 = a * std::conj(a) + b * std::conj(b) - 1.0;
        Complex r01 = a * std::conj(c) + b * std::conj(d);
        Complex r11 = c * std::conj(c) + d * std::conj(d) - 1.0;
        double dev = std::max({std::abs(r00), std::abs(r01), std::abs(r11)});
        if (dev > 1e-14)
            throw DomainError("matrix is not unitary (deviation " + std::to_string(dev) + ")");
    }
};

// E_j: place coefficient a_k at (k,0) for axis 1, (0,k) for axis 2
inline BivarPoly extend_axis(const UnivarPoly& g, int axis) {
    if (axis != 1 && axis != 2) throw DomainError("axis must be 1 or 2");
    if (g.flavor() != Flavor::DiskD)
        throw DomainError("extend_axis expects a disk-flavored polynomial");
    BivarPoly f;
    for (const auto& [k, c] : g.coeffs())
        f.set(axis == 1 ? MultiIndex{k, 0} : MultiIndex{0, k}, c);
    return f;
}

// R_j: keep terms with the other exponent equal to zero
inline UnivarPoly restrict_axis(const BivarPoly& f, int axis) {
    if (axis != 1 && axis != 2) throw DomainError("axis must be 1 or 2");
    UnivarPoly g(Flavor::DiskD);
    for (const auto& [idx, c] : f.terms()) {
        if (axis == 1 && idx.l == 0) g.set(idx.k, c);
        if (axis == 2 && idx.k == 0) g.set(idx.l, c);
    }
    return g;
}

// Restriction to the embedded diagonal disk, as a coefficient action:
// a_{k,k} -> 2^{-k/2} a_{k,k}, landing in the small-disk scale.
inline UnivarPoly diag_restrict(const BivarPoly& f) {
    UnivarPoly g(Flavor::SmallDiskd);
    for (const auto& [idx, c] : f.terms()) {
        if (idx.k != idx.l)
            throw NonDiagonalInput("diag_restrict requires support on the diagonal (k,k); got (" +
                                   std::to_string(idx.k) + "," + std::to_string(idx.l) + ")");
        g.set(idx.k, pow2_half(-idx.k) * c);
    }
    return g;
}

// Inverse of diag_restrict: c_k -> 2^{k/2} c_k placed at (k,k).
inline BivarPoly diag_lift(const UnivarPoly& g) {
    if (g.flavor() != Flavor::SmallDiskd)
        throw DomainError("diag_lift expects a small-disk-flavored polynomial");
    BivarPoly f;
    for (const auto& [k, c] : g.coeffs())
        f.set({k, k}, pow2_half(k) * c);
    return f;
}

// f(U (z1,z2)^T), expanded term by term with exact binomial coefficients.
inline BivarPoly compose_unitary(const BivarPoly& f, const Unitary2& U) {
    int deg = f.total_degree();
    // power tables for the four entries
    auto powers = [&](Complex u) {
        std::vector<Complex> p(deg + 1);
        p[0] = 1.0;
        for (int i = 1; i <= deg; ++i) p[i] = p[i - 1] * u;
        return p;
    };
    auto p11 = powers(U.u11()), p12 = powers(U.u12());
    auto p21 = powers(U.u21()), p22 = powers(U.u22());

    BivarPoly out;
    for (const auto& [idx, c] : f.terms()) {
        // (u11 z1 + u12 z2)^k (u21 z1 + u22 z2)^l
        for (int r = 0; r <= idx.k; ++r) {
            Complex ck = binomial(idx.k, r) * p11[r] * p12[idx.k - r];
            if (ck == Complex(0.0)) continue;
            for (int s = 0; s <= idx.l; ++s) {
                Complex cl = binomial(idx.l, s) * p21[s] * p22[idx.l - s];
                if (cl == Complex(0.0)) continue;
                out.add_to({r + s, idx.k - r + idx.l - s}, c * ck * cl);
            }
        }
    }
    return out;
}

}  // namespace balldir
