#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <random>

#include "balldir/factorials.hpp"
#include "balldir/poly.hpp"
#include "balldir/weights.hpp"

using namespace balldir;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// exact-rational reference for k! l! / (1+k+l)! via big integers
double factorial_ratio_reference(int k, int l) {
    using boost::multiprecision::cpp_int;
    using big_float = boost::multiprecision::cpp_bin_float_50;
    cpp_int num = 1, den = 1;
    for (int i = 2; i <= k; ++i) num *= i;
    for (int i = 2; i <= l; ++i) num *= i;
    for (int i = 2; i <= 1 + k + l; ++i) den *= i;
    return double(big_float(num) / big_float(den));
}

BivarPoly random_poly(std::mt19937& rng, int max_degree, bool complex_coeffs = false) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> nterms(1, 12);
    BivarPoly p;
    int m = nterms(rng);
    for (int t = 0; t < m; ++t) {
        int d = deg(rng);
        std::uniform_int_distribution<int> kpick(0, d);
        int k = kpick(rng);
        Complex c(coef(rng), complex_coeffs ? coef(rng) : 0.0);
        p.add_to({k, d - k}, c);
    }
    return p;
}

}  // namespace

TEST_CASE("weight_2d closed values") {
    CHECK(weight_2d(Alpha(2.0), {0, 0}) == 4.0);
    CHECK(weight_2d(Alpha(0.0), {0, 0}) == 1.0);
    CHECK_THAT(weight_2d(Alpha(0.0), {1, 1}), WithinRel(1.0 / 6.0, 1e-15));
}

TEST_CASE("weight_2d positivity over the tested parameter box") {
    for (double a : {-10.0, -3.0, 0.0, 3.0, 10.0})
        for (int d = 0; d <= 500; d += 7)
            for (int k = 0; k <= d; k += (d < 40 ? 1 : 11)) {
                double w = weight_2d(Alpha(a), {k, d - k});
                REQUIRE(w > 0.0);
                REQUIRE(std::isfinite(w));
            }
}

TEST_CASE("factorial ratio by cancellation matches big-integer reference") {
    for (int k = 0; k <= 300; k += (k < 30 ? 1 : 13)) {
        double got = factorial_ratio(k, k);
        double want = factorial_ratio_reference(k, k);
        REQUIRE_THAT(got, WithinRel(want, 1e-13));
    }
    std::mt19937 rng(7211);
    std::uniform_int_distribution<int> pick(0, 250);
    for (int t = 0; t < 200; ++t) {
        int k = pick(rng), l = pick(rng);
        REQUIRE_THAT(factorial_ratio(k, l), WithinRel(factorial_ratio_reference(k, l), 1e-13));
    }
}

TEST_CASE("norm_sq_2d closed values") {
    CHECK(norm_sq_2d(BivarPoly(1.0), Alpha(1.0)) == 2.0);
    CHECK_THAT(norm_sq_2d(BivarPoly::monomial({1, 0}), Alpha(0.0)), WithinRel(0.5, 1e-15));
    BivarPoly f = parse_poly("1 - 2*z1*z2");
    CHECK_THAT(norm_sq_2d(f, Alpha(0.0)), WithinRel(5.0 / 3.0, 1e-14));
    CHECK(norm_sq_2d(BivarPoly(), Alpha(1.0)) == 0.0);
}

TEST_CASE("norm monotone in alpha, term by term and in total") {
    std::mt19937 rng(1234);
    for (int t = 0; t < 50; ++t) {
        BivarPoly f = random_poly(rng, 40);
        double prev = norm_sq_2d(f, Alpha(-3.0));
        for (double a : {-1.0, -0.5, 0.0, 1.0, 2.0, 3.0}) {
            double cur = norm_sq_2d(f, Alpha(a));
            REQUIRE(prev <= cur);
            prev = cur;
        }
    }
}

TEST_CASE("dual pairing values") {
    CHECK(dual_pair(BivarPoly(1.0), BivarPoly(1.0)) == Complex(1.0));
    BivarPoly z1 = BivarPoly::monomial({1, 0});
    CHECK_THAT(dual_pair(z1, z1).real(), WithinRel(0.5, 1e-15));
}

TEST_CASE("dual pairing telescopes against the diagonal transform, exact rationals") {
    // g = z1 z2 (1 - 2 z1 z2) paired with sum_k (1+2k)!/(k!)^2 (z1 z2 / 2)^k:
    // the two surviving terms are  1/6 * 1 * 3  and  1/30 * (-2) * 7.5,
    // i.e. +1/2 and -1/2 exactly.
    BivarPoly g = parse_poly("z1*z2*(1 - 2*z1*z2)");
    BivarPoly transform;
    transform.set({0, 0}, 1.0);
    transform.set({1, 1}, 3.0);
    transform.set({2, 2}, 7.5);
    transform.set({3, 3}, 17.5);
    Complex v = dual_pair(g, transform);
    CHECK_THAT(std::abs(v), WithinAbs(0.0, 1e-15));
}

TEST_CASE("Cauchy-Schwarz across dual exponents") {
    std::mt19937 rng(99);
    for (double a : {-1.0, 0.0, 1.0, 2.0}) {
        for (int t = 0; t < 100; ++t) {
            BivarPoly f = random_poly(rng, 30);
            BivarPoly g = random_poly(rng, 30);
            double lhs = std::abs(dual_pair(f, g));
            double rhs = std::sqrt(norm_sq_2d(f, Alpha(a))) * std::sqrt(norm_sq_2d(g, Alpha(-a)));
            REQUIRE(lhs <= rhs * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("s_k decreases from 1 into [0.886, 1]") {
    SkSequence s;
    REQUIRE(s.value == 1.0);
    double prev = s.value;
    for (int k = 1; k <= 500; ++k) {
        s.advance();
        REQUIRE(s.value < prev);
        REQUIRE(s.value >= 0.886);
        REQUIRE(s.value <= 1.0);
        prev = s.value;
    }
    // limit sqrt(pi)/2
    REQUIRE_THAT(s_factor(500), WithinAbs(std::sqrt(M_PI) / 2.0, 3e-4));
}

TEST_CASE("poly arithmetic") {
    CHECK(parse_poly("(1-z1)*(1+z1)") == parse_poly("1 - z1^2"));
    CHECK(parse_poly("1-2*z1*z2") * BivarPoly(1.0) == parse_poly("1-2*z1*z2"));
    CHECK(parse_poly("(1-z1)*(1-z2)") == parse_poly("1 - z1 - z2 + z1*z2"));
    // cancellation prunes to the exact-zero support
    BivarPoly q = parse_poly("(1-z1)*(1+z1)");
    CHECK(q.support_size() == 2);
    CHECK(q.coeff({1, 0}) == Complex(0.0));
}

TEST_CASE("norm_sq_1var flavors") {
    UnivarPoly one(Flavor::DiskD);
    one.set(0, 1.0);
    CHECK(norm_sq_1var(one, Alpha(0.7)) == 1.0);

    UnivarPoly z(Flavor::DiskD);
    z.set(1, 1.0);
    CHECK(norm_sq_1var(z, Alpha(1.0)) == 2.0);

    UnivarPoly zs(Flavor::SmallDiskd);
    zs.set(1, 1.0);
    CHECK(norm_sq_1var(zs, Alpha(0.0)) == 0.5);
}

TEST_CASE("parser grammar and errors") {
    BivarPoly p = parse_poly("1 - 2*z1*z2");
    CHECK(p.coeff({0, 0}) == Complex(1.0));
    CHECK(p.coeff({1, 1}) == Complex(-2.0));
    CHECK(p.support_size() == 2);

    BivarPoly q = parse_poly("(1-z1)*(1-z2)");
    CHECK(q.coeff({0, 0}) == Complex(1.0));
    CHECK(q.coeff({1, 0}) == Complex(-1.0));
    CHECK(q.coeff({0, 1}) == Complex(-1.0));
    CHECK(q.coeff({1, 1}) == Complex(1.0));

    CHECK(parse_poly("z1^3").coeff({3, 0}) == Complex(1.0));
    CHECK(parse_poly("2.5*i*z2").coeff({0, 1}) == Complex(0.0, 2.5));
    CHECK(parse_poly("-z1^2") == Complex(-1.0) * BivarPoly::monomial({2, 0}));

    CHECK_THROWS_AS(parse_poly("z3"), ParseError);
    CHECK_THROWS_WITH(parse_poly("z3"), Catch::Matchers::ContainsSubstring("unknown variable"));
    try {
        parse_poly("1 + z3");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(parse_poly("1 + "), ParseError);
    CHECK_THROWS_AS(parse_poly("(1"), ParseError);
    CHECK_THROWS_AS(parse_poly("1 2"), ParseError);
}

TEST_CASE("print/parse round trip on canonical forms") {
    std::mt19937 rng(4242);
    for (int t = 0; t < 200; ++t) {
        BivarPoly p = random_poly(rng, 9, t % 3 == 0);
        std::string s = to_string(p);
        BivarPoly q = parse_poly(s);
        REQUIRE(q == p);
        REQUIRE(to_string(q) == s);
    }
    CHECK(to_string(BivarPoly()) == "0");
    CHECK(to_string(parse_poly("1 - 2*z1*z2")) == "1 - 2*z1*z2");
}

TEST_CASE("JSON coefficient form round trip") {
    std::mt19937 rng(515);
    for (int t = 0; t < 50; ++t) {
        BivarPoly p = random_poly(rng, 12, true);
        REQUIRE(poly_from_json(to_json(p)) == p);
    }
    auto j = nlohmann::json::parse(R"({"terms":[{"k":0,"l":0,"re":1.0,"im":0.0},
                                               {"k":1,"l":1,"re":-2.0,"im":0.0}]})");
    CHECK(poly_from_json(j) == parse_poly("1-2*z1*z2"));
}
