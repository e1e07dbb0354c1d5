#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "balldir/factorials.hpp"
#include "balldir/maps.hpp"
#include "balldir/poly.hpp"
#include "balldir/weights.hpp"

using namespace balldir;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

UnivarPoly random_univar(std::mt19937& rng, int max_degree, Flavor flavor = Flavor::DiskD) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(0, max_degree);
    UnivarPoly g(flavor);
    int m = 1 + int(rng() % 10);
    for (int t = 0; t < m; ++t) g.set(deg(rng), coef(rng));
    if (g.is_zero()) g.set(0, 1.0);
    return g;
}

BivarPoly random_bivar(std::mt19937& rng, int max_degree) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(0, max_degree);
    BivarPoly p;
    int m = 1 + int(rng() % 10);
    for (int t = 0; t < m; ++t) {
        int d = deg(rng);
        int k = int(rng() % (d + 1));
        p.add_to({k, d - k}, coef(rng));
    }
    if (p.is_zero()) p.set({0, 0}, 1.0);
    return p;
}

// Haar-ish random unitary from the standard angle parametrization
Unitary2 random_unitary(std::mt19937& rng) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double theta = std::asin(std::sqrt(u01(rng)));
    double a = ang(rng), b = ang(rng), g = ang(rng);
    Complex ea(std::cos(a), std::sin(a)), eb(std::cos(b), std::sin(b));
    Complex eg(std::cos(g), std::sin(g));
    double c = std::cos(theta), s = std::sin(theta);
    return {eg * ea * c, eg * eb * s, -eg * std::conj(eb) * s, eg * std::conj(ea) * c};
}

}  // namespace

TEST_CASE("extension operators") {
    UnivarPoly g(Flavor::DiskD);
    g.set(0, 1.0);
    g.set(1, -1.0);
    CHECK(extend_axis(g, 1) == parse_poly("1 - z1"));

    UnivarPoly z(Flavor::DiskD);
    z.set(1, 1.0);
    CHECK(extend_axis(z, 2) == parse_poly("z2"));

    // ||E1(z)||^2 at alpha=1 is 3/2, against ||z||^2_{D_0} = 1
    double num = norm_sq_2d(extend_axis(z, 1), Alpha(1.0));
    double den = norm_sq_1var(z, Alpha(0.0));
    CHECK_THAT(num, WithinRel(1.5, 1e-15));
    CHECK(den == 1.0);
    CHECK(num / den >= 1.0);
    CHECK(num / den <= 2.0);

    UnivarPoly small(Flavor::SmallDiskd);
    small.set(0, 1.0);
    CHECK_THROWS_AS(extend_axis(small, 1), DomainError);
    CHECK_THROWS_AS(extend_axis(z, 3), DomainError);
}

TEST_CASE("restriction operators") {
    CHECK(restrict_axis(parse_poly("1 - z1 + z2"), 1).coeff(0) == Complex(1.0));
    CHECK(restrict_axis(parse_poly("1 - z1 + z2"), 1).coeff(1) == Complex(-1.0));
    CHECK(restrict_axis(parse_poly("1 - z1 + z2"), 1).coeffs().size() == 2);
    CHECK(restrict_axis(parse_poly("z1*z2"), 1).is_zero());

    std::mt19937 rng(301);
    for (int t = 0; t < 50; ++t) {
        UnivarPoly g = random_univar(rng, 30);
        CHECK(restrict_axis(extend_axis(g, 1), 1) == g);
        CHECK(restrict_axis(extend_axis(g, 2), 2) == g);
    }
}

TEST_CASE("diagonal restriction and lift") {
    UnivarPoly r = diag_restrict(parse_poly("1 - 2*z1*z2"));
    CHECK(r.flavor() == Flavor::SmallDiskd);
    CHECK(r.coeff(0) == Complex(1.0));
    CHECK(r.coeff(1) == Complex(-std::sqrt(2.0)));

    CHECK(diag_restrict(BivarPoly(1.0)).coeff(0) == Complex(1.0));
    BivarPoly sq = parse_poly("(z1*z2)^2");
    CHECK(diag_restrict(sq).coeff(2) == Complex(0.5));

    CHECK_THROWS_AS(diag_restrict(parse_poly("z1")), NonDiagonalInput);

    UnivarPoly g(Flavor::SmallDiskd);
    g.set(0, 1.0);
    g.set(1, -std::sqrt(2.0));
    BivarPoly lifted = diag_lift(g);
    CHECK(lifted.coeff({0, 0}) == Complex(1.0));
    CHECK_THAT(lifted.coeff({1, 1}).real(), WithinRel(-2.0, 1e-15));

    UnivarPoly z(Flavor::SmallDiskd);
    z.set(1, 1.0);
    CHECK(diag_lift(z).coeff({1, 1}) == Complex(std::sqrt(2.0)));

    UnivarPoly wrong(Flavor::DiskD);
    wrong.set(0, 1.0);
    CHECK_THROWS_AS(diag_lift(wrong), DomainError);
}

TEST_CASE("diag round trips") {
    std::mt19937 rng(77);
    for (int t = 0; t < 50; ++t) {
        UnivarPoly g = random_univar(rng, 60, Flavor::SmallDiskd);
        UnivarPoly back = diag_restrict(diag_lift(g));
        REQUIRE(back.coeffs().size() == g.coeffs().size());
        for (const auto& [k, c] : g.coeffs())
            REQUIRE_THAT(back.coeff(k).real(), WithinRel(c.real(), 4e-16));
    }
}

TEST_CASE("unitary construction") {
    CHECK_THROWS_AS(Unitary2(1.0, 1.0, 0.0, 1.0), DomainError);
    Unitary2 h = Unitary2::hadamard();
    CHECK(h.u11().real() == std::sqrt(0.5));
    auto j = nlohmann::json::parse("[[0.7071067811865476,0.7071067811865476],"
                                   " [0.7071067811865476,-0.7071067811865476]]");
    Unitary2 hj = Unitary2::from_json(j);
    CHECK(hj.u12() == h.u12());
    // plain numbers accepted for real entries
    auto j2 = nlohmann::json::parse("[[1.0,0.0],[0.0,1.0]]");
    CHECK(Unitary2::from_json(j2).u11() == Complex(1.0));
}

TEST_CASE("compose_unitary on the model functions") {
    Unitary2 U = Unitary2::hadamard();
    const double s = std::sqrt(0.5);

    BivarPoly fsharp = compose_unitary(parse_poly("1 - z1"), U);
    CHECK(fsharp.support_size() == 3);
    CHECK(fsharp.coeff({0, 0}) == Complex(1.0));
    CHECK(fsharp.coeff({1, 0}) == Complex(-s));
    CHECK(fsharp.coeff({0, 1}) == Complex(-s));

    BivarPoly fflat = compose_unitary(parse_poly("1 - 2*z1*z2"), U);
    BivarPoly want = parse_poly("1 - z1^2 + z2^2");
    for (const auto& [idx, c] : want.terms())
        CHECK_THAT(std::abs(fflat.coeff(idx) - c), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(fflat.coeff({1, 1})), WithinAbs(0.0, 1e-15));

    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        BivarPoly f = random_bivar(rng, 12);
        CHECK(compose_unitary(f, Unitary2::identity()) == f);
    }
}

TEST_CASE("norm invariance under random unitaries") {
    std::mt19937 rng(2025);
    for (int t = 0; t < 50; ++t) {
        BivarPoly f = random_bivar(rng, 20);
        Unitary2 U = random_unitary(rng);
        for (double a : {-1.0, 0.0, 1.0, 2.0}) {
            double before = norm_sq_2d(f, Alpha(a));
            double after = norm_sq_2d(compose_unitary(f, U), Alpha(a));
            REQUIRE_THAT(after, WithinRel(before, 1e-10));
        }
    }
}

TEST_CASE("extension bracket: axis weights against the shifted disk scale") {
    std::mt19937 rng(5150);
    for (double a : {0.0, 1.0, 2.0}) {
        double bound = std::pow(2.0, a);
        for (int t = 0; t < 100; ++t) {
            UnivarPoly g = random_univar(rng, 200);
            double num = norm_sq_2d(extend_axis(g, 1), Alpha(a));
            double den = norm_sq_1var(g, Alpha(a - 1.0));
            double ratio = num / den;
            REQUIRE(ratio >= 1.0);
            REQUIRE(ratio <= bound);
        }
    }
}

TEST_CASE("diagonal bracket: restriction comparable with factor 2^alpha s_k") {
    std::mt19937 rng(6021);
    for (double a : {0.0, 1.0, 2.0}) {
        double upper = std::pow(2.0, a);
        double lower = 0.886 * upper;
        for (int t = 0; t < 100; ++t) {
            UnivarPoly coeffs = random_univar(rng, 200, Flavor::SmallDiskd);
            BivarPoly f;
            for (const auto& [k, c] : coeffs.coeffs()) f.set({k, k}, c);
            double num = norm_sq_2d(f, Alpha(a));
            double den = norm_sq_1var(diag_restrict(f), Alpha(a - 0.5));
            double ratio = num / den;
            REQUIRE(ratio >= lower);
            REQUIRE(ratio <= upper * (1.0 + 1e-15));
        }
    }
}
