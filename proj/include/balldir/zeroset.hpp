// Sample clouds on the boundary zero sets of the model functions.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "balldir/errors.hpp"
#include "balldir/measures.hpp"

namespace balldir {

enum class ZeroSetFamily {
    point_10,    // {(1,0)}, zero set of 1 - z1
    point_diag,  // {(1/sqrt2, 1/sqrt2)}, zero set of 1 - (z1+z2)/sqrt2
    diag_circle, // {(e^{it}, e^{-it})/sqrt2}, zero set of 1 - 2 z1 z2
    flat_curve   // {(sin t, i cos t)}, zero set of 1 - z1^2 + z2^2
};

inline ZeroSetFamily zero_set_family_from_string(const std::string& s) {
    if (s == "point_10") return ZeroSetFamily::point_10;
    if (s == "point_diag") return ZeroSetFamily::point_diag;
    if (s == "diag_circle") return ZeroSetFamily::diag_circle;
    if (s == "flat_curve") return ZeroSetFamily::flat_curve;
    throw DomainError("unknown zero-set family '" + s + "'");
}

inline std::vector<SpherePoint> sample_zero_set(ZeroSetFamily family, int N) {
    switch (family) {
        case ZeroSetFamily::point_10:
            return {SpherePoint{1.0, 0.0}};
        case ZeroSetFamily::point_diag: {
            const double s = 1.0 / std::sqrt(2.0);
            return {SpherePoint{s, s}};
        }
        case ZeroSetFamily::diag_circle: {
            if (N < 1) throw DomainError("need N >= 1 samples");
            std::vector<SpherePoint> pts;
            pts.reserve(N);
            const double s = 1.0 / std::sqrt(2.0);
            for (int i = 0; i < N; ++i) {
                double t = 2.0 * M_PI * i / N;
                Complex e(std::cos(t), std::sin(t));
                pts.push_back({s * e, s * std::conj(e)});
            }
            return pts;
        }
        case ZeroSetFamily::flat_curve: {
            if (N < 1) throw DomainError("need N >= 1 samples");
            std::vector<SpherePoint> pts;
            pts.reserve(N);
            for (int i = 0; i < N; ++i) {
                double t = 2.0 * M_PI * i / N;
                pts.push_back({Complex(std::sin(t), 0.0), Complex(0.0, std::cos(t))});
            }
            return pts;
        }
    }
    throw DomainError("unknown zero-set family");
}

}  // namespace balldir
