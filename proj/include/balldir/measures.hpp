// Measures on the unit sphere of C^2, represented by their moment oracles
// mu*(m,n). Each built-in variant also supplies a shell cursor producing
//   shell_k = sum_j C(k,j) |mu*(j,k-j)|^2
// incrementally in k, which is what the norm and energy series consume.
#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "balldir/errors.hpp"
#include "balldir/factorials.hpp"
#include "balldir/poly.hpp"

namespace balldir {

struct SpherePoint {
    Complex z1;
    Complex z2;

    double residual() const { return std::norm(z1) + std::norm(z2) - 1.0; }
};

inline Complex hermitian_inner(const SpherePoint& a, const SpherePoint& b) {
    return a.z1 * std::conj(b.z1) + a.z2 * std::conj(b.z2);
}

struct PointCloud {
    std::vector<SpherePoint> points;
    std::vector<double> weights;

    void validate() const {
        if (points.size() != weights.size())
            throw DomainError("cloud points/weights size mismatch");
        double sum = 0.0;
        for (double w : weights) {
            if (w < 0.0) throw DomainError("cloud weights must be nonnegative");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw DomainError("cloud weights must sum to 1 (got " + std::to_string(sum) + ")");
        for (const auto& p : points)
            if (std::abs(p.residual()) > 1e-12)
                throw DomainError("cloud point off the unit sphere");
    }

    static PointCloud uniform(std::vector<SpherePoint> pts) {
        PointCloud c;
        c.weights.assign(pts.size(), pts.empty() ? 0.0 : 1.0 / double(pts.size()));
        c.points = std::move(pts);
        return c;
    }
};

// cursor over shell sums, k = 0, 1, 2, ...
class ShellCursor {
public:
    virtual ~ShellCursor() = default;
    virtual double next() = 0;
};

class MomentMeasure {
public:
    virtual ~MomentMeasure() = default;

    virtual Complex moment(int m, int n) const = 0;

    // conjugate-coordinate moment; equals conj(moment) for real measures,
    // which all built-in variants are
    virtual Complex moment_bar(int m, int n) const { return std::conj(moment(m, n)); }

    virtual std::string name() const = 0;

    virtual std::unique_ptr<ShellCursor> shell_cursor() const;
};

namespace detail {

// generic shell sum through the moment oracle, O(k) per shell
class GenericShellCursor : public ShellCursor {
public:
    explicit GenericShellCursor(const MomentMeasure& mu) : mu_(mu) {}
    double next() override {
        double s = 0.0;
        double binom = 1.0;  // C(k,0)
        for (int j = 0; j <= k_; ++j) {
            s += binom * std::norm(mu_.moment(j, k_ - j));
            binom = binom * double(k_ - j) / double(j + 1);
        }
        ++k_;
        return s;
    }

private:
    const MomentMeasure& mu_;
    int k_ = 0;
};

}  // namespace detail

inline std::unique_ptr<ShellCursor> MomentMeasure::shell_cursor() const {
    return std::make_unique<detail::GenericShellCursor>(*this);
}

class PointMassMeasure : public MomentMeasure {
public:
    explicit PointMassMeasure(SpherePoint zeta) : zeta_(zeta) {
        if (std::abs(zeta.residual()) > 1e-12)
            throw DomainError("point mass must sit on the unit sphere");
    }

    Complex moment(int m, int n) const override {
        Complex p(1.0), q(1.0);
        for (int i = 0; i < m; ++i) p *= zeta_.z1;
        for (int i = 0; i < n; ++i) q *= zeta_.z2;
        return p * q;
    }

    Complex moment_bar(int m, int n) const override {
        return std::conj(moment(m, n));
    }

    std::string name() const override { return "point"; }

    // binomial theorem collapses the shell to (|z1|^2+|z2|^2)^k = 1
    std::unique_ptr<ShellCursor> shell_cursor() const override {
        struct C : ShellCursor {
            double next() override { return 1.0; }
        };
        return std::make_unique<C>();
    }

    SpherePoint zeta() const { return zeta_; }

private:
    SpherePoint zeta_;
};

// uniform probability measure on {(e^{it},e^{-it})/sqrt2}: moments 2^{-j} on
// the diagonal m = n = j and zero elsewhere
class DiagCircleMeasure : public MomentMeasure {
public:
    Complex moment(int m, int n) const override {
        if (m != n) return 0.0;
        return std::ldexp(1.0, -m);
    }

    std::string name() const override { return "diag_circle"; }

    std::unique_ptr<ShellCursor> shell_cursor() const override {
        // shell_{2j} = C(2j,j) 4^{-j}, odd shells vanish
        struct C : ShellCursor {
            int k = 0;
            double w = 1.0;
            double next() override {
                if (k == 0) {
                    ++k;
                    return 1.0;
                }
                if (k % 2 == 1) {
                    ++k;
                    return 0.0;
                }
                int j = k / 2;
                w *= (2.0 * j - 1.0) / (2.0 * j);
                ++k;
                return w;
            }
        };
        return std::make_unique<C>();
    }
};

class UniformSphereMeasure : public MomentMeasure {
public:
    Complex moment(int m, int n) const override { return (m == 0 && n == 0) ? 1.0 : 0.0; }
    std::string name() const override { return "sphere"; }
};

class CloudMeasure : public MomentMeasure {
public:
    explicit CloudMeasure(PointCloud cloud) : cloud_(std::move(cloud)) { cloud_.validate(); }

    Complex moment(int m, int n) const override {
        Complex s = 0.0;
        for (std::size_t i = 0; i < cloud_.points.size(); ++i) {
            Complex p(1.0);
            for (int a = 0; a < m; ++a) p *= cloud_.points[i].z1;
            for (int a = 0; a < n; ++a) p *= cloud_.points[i].z2;
            s += cloud_.weights[i] * p;
        }
        return s;
    }

    Complex moment_bar(int m, int n) const override {
        Complex s = 0.0;
        for (std::size_t i = 0; i < cloud_.points.size(); ++i) {
            Complex p(1.0);
            for (int a = 0; a < m; ++a) p *= std::conj(cloud_.points[i].z1);
            for (int a = 0; a < n; ++a) p *= std::conj(cloud_.points[i].z2);
            s += cloud_.weights[i] * p;
        }
        return s;
    }

    std::string name() const override { return "cloud"; }

    // shell_k = sum_{i,i'} w_i w_{i'} <z_i, z_{i'}>^k via the pairwise Gram
    std::unique_ptr<ShellCursor> shell_cursor() const override {
        struct C : ShellCursor {
            std::vector<Complex> gram;
            std::vector<Complex> power;
            std::vector<double> ww;
            double next() override {
                double s = 0.0;
                for (std::size_t i = 0; i < power.size(); ++i) s += ww[i] * power[i].real();
                for (std::size_t i = 0; i < power.size(); ++i) power[i] *= gram[i];
                return s;
            }
        };
        auto c = std::make_unique<C>();
        const auto N = cloud_.points.size();
        c->gram.reserve(N * N);
        c->ww.reserve(N * N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                c->gram.push_back(hermitian_inner(cloud_.points[i], cloud_.points[j]));
                c->ww.push_back(cloud_.weights[i] * cloud_.weights[j]);
            }
        c->power.assign(N * N, Complex(1.0));
        return c;
    }

    const PointCloud& cloud() const { return cloud_; }

private:
    PointCloud cloud_;
};

// JSON measure spec:
//   {"type":"point","zeta":[[re,im],[re,im]]}
//   {"type":"diag_circle"} | {"type":"sphere"}
//   {"type":"cloud","points":[[[re,im],[re,im]],...],"weights":[...]}
inline std::unique_ptr<MomentMeasure> measure_from_json(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "diag_circle") return std::make_unique<DiagCircleMeasure>();
    if (type == "sphere") return std::make_unique<UniformSphereMeasure>();
    auto parse_point = [](const nlohmann::json& p) {
        return SpherePoint{Complex(p.at(0).at(0).get<double>(), p.at(0).at(1).get<double>()),
                           Complex(p.at(1).at(0).get<double>(), p.at(1).at(1).get<double>())};
    };
    if (type == "point") return std::make_unique<PointMassMeasure>(parse_point(j.at("zeta")));
    if (type == "cloud") {
        PointCloud cloud;
        for (const auto& p : j.at("points")) cloud.points.push_back(parse_point(p));
        cloud.weights = j.at("weights").get<std::vector<double>>();
        return std::make_unique<CloudMeasure>(std::move(cloud));
    }
    throw DomainError("unknown measure type '" + type + "'");
}

}  // namespace balldir
