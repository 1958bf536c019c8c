#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "padspec/error.hpp"
#include "padspec/geometry.hpp"

using namespace padspec;
using namespace padspec::testing;

TEST_CASE("frobenius image") {
    Int p = 3;
    // x_{1, 3^{-2}} -> x_{1, 3^{-3}}
    auto img = frobenius_image(PointDescriptor::of_type2(sc(p, 1), Rational(2)));
    CHECK(img.point.center == sc(p, 1));
    CHECK(img.point.rho == Rational(3));
    CHECK(img.degree == 1); // r = 3^{-2} < omega*1

    // a = 0: r -> r^p and degree p
    auto img0 = frobenius_image(PointDescriptor::of_type2(sc(p, 0), Rational(-2)));
    CHECK(img0.point.center.is_zero());
    CHECK(img0.point.rho == Rational(-6));
    CHECK(img0.degree == 3);

    // r >= omega|a| gives degree p
    auto img1 = frobenius_image(PointDescriptor::of_type2(sc(p, 1), Rational(1, 4)));
    CHECK(img1.degree == 3);
}

TEST_CASE("frobenius iterates on x_{0,r}") {
    Int p = 2;
    PointDescriptor x = PointDescriptor::of_type2(sc(p, 0), Rational(5, 3));
    Rational rho = x.rho;
    for (int l = 1; l <= 4; ++l) {
        x = frobenius_image(x).point;
        rho *= Rational(p);
        CHECK(x.rho == rho);
    }
}

TEST_CASE("tame power image") {
    Int p = 2;
    auto a1 = tame_power_image(PointDescriptor::of_type2(sc(p, 1), Rational(0)), 3);
    CHECK(a1.point.center == sc(p, 1));
    CHECK(a1.point.rho == Rational(0));
    CHECK(a1.degree == 3); // r >= |a|

    auto a2 = tame_power_image(PointDescriptor::of_type2(sc(p, 1), Rational(2)), 3);
    CHECK(a2.point.rho == Rational(2)); // r < |a|: radius |a|^{n-1} r = r
    CHECK(a2.degree == 1);

    auto a3 = tame_power_image(PointDescriptor::of_type2(sc(p, 0), Rational(1)), 5);
    CHECK(a3.point.rho == Rational(5));

    CHECK_THROWS_AS(tame_power_image(PointDescriptor::of_type2(sc(p, 1), Rational(0)), 2), Error);
}

TEST_CASE("logarithm image radius") {
    for (long pl : {2L, 3L, 5L}) {
        Int p = pl;
        Rational om(1, p - 1);
        for (long n = 0; n <= 3; ++n) {
            Rational rr = om / rat_pow(Rational(p), n);
            CHECK(log_radius(p, rr) == om - Rational(n));
        }
        // j = 0 dominates for rho_rel above 1/(p-1)
        CHECK(log_radius(p, om * Rational(3, 2)) == om * Rational(3, 2));
        // increasing in r means decreasing in rho_rel, checked on a grid
        Rational prev;
        bool first = true;
        for (long k = 1; k <= 40; ++k) {
            Rational v = log_radius(p, Rational(k, 17));
            if (!first) CHECK(v >= prev);
            prev = v;
            first = false;
        }
        CHECK_THROWS_AS(log_radius(p, Rational(0)), Error);
    }
}

TEST_CASE("logarithm degree brackets") {
    for (long pl : {2L, 3L}) {
        Int p = pl;
        Rational om(1, p - 1);
        CHECK(log_degree(p, om).degree == Int(p)); // left-closed bracket at the boundary
        CHECK(log_degree(p, om * Rational(5, 4)).degree == 1);
        CHECK(log_degree(p, om / Rational(p) - om / Rational(1000)).degree == Int(p) * Int(p));
        CHECK(log_degree(p, om / Rational(p)).degree == Int(p) * Int(p));
    }
}

TEST_CASE("log radius is piecewise affine with breakpoints 1/((p-1)p^j)") {
    Int p = 2;
    Rational om(1, p - 1);
    for (long j = 0; j <= 3; ++j) {
        Rational b = om / rat_pow(Rational(p), j);
        // affine with slope p^{j+1} just below, p^j just above
        Rational eps(1, 1000);
        Rational below = log_radius(p, b - eps);
        Rational at = log_radius(p, b);
        Rational above = log_radius(p, b + eps);
        CHECK(at - below == rat_pow(Rational(p), j + 1) * eps);
        CHECK(above - at == rat_pow(Rational(p), j) * eps);
    }
}

TEST_CASE("delta of a point") {
    Int p = 2;
    CHECK(delta_point(PointDescriptor::of_type2(sc(p, 0), Rational(-2))).exponent() == Rational(-2));
    CHECK(delta_point(PointDescriptor::of_type1(sc(p, 7))).is_zero());
    CHECK(delta_point(PointDescriptor::of_type2(sc(p, 1, 2), Rational(3))).exponent() == Rational(-1));
    // integer translations leave it unchanged
    for (long n : {-3L, 1L, 8L}) {
        auto z = PointDescriptor::of_type2(scp(p, 1, Rational(1, 2)), Rational(1, 4));
        CHECK(delta_point(z.translated(sc(p, n))) == delta_point(z));
    }
}

TEST_CASE("point equality") {
    Int p = 2;
    auto a = PointDescriptor::of_type2(sc(p, 0), Rational(-2));
    auto b = PointDescriptor::of_type2(sc(p, 1), Rational(-2));
    CHECK(point_equal(a, b)); // |0 - 1| = 1 <= 4
    auto c = PointDescriptor::of_type2(sc(p, 1), Rational(1));
    CHECK(!point_equal(a, c));
    CHECK(!point_equal(c, PointDescriptor::of_type2(sc(p, 0), Rational(1)))); // |1| = 1 > 1/2
    CHECK(point_equal(c, PointDescriptor::of_type2(sc(p, 3), Rational(1)))); // |1 - 3| = 1/2 <= r
}

TEST_CASE("canonical rational truncation") {
    Int p = 2;
    CHECK(rational_mod_pk(Rational(5, 2), p, 0) == Rational(1, 2));
    CHECK(rational_mod_pk(Rational(1, 3), p, 0) == Rational(0));
    CHECK(rational_mod_pk(Rational(7), p, 2) == Rational(3)); // 7 = 1 + 2 + 4
    CHECK(rational_mod_pk(Rational(1, 3), p, 2) == Rational(3)); // 1/3 = 1 + 2 + ...
    CHECK(rational_mod_pk(Rational(-1, 4), p, 0) == Rational(3, 4)); // -1/4 = 1/4 + 1/2 + Z_2
}

TEST_CASE("canonical translate centers") {
    Int p = 2;
    // Z_p part of the rational coordinate is stripped
    Scalar c = sc(p, 1, 3) + scp(p, 1, Rational(1, 2));
    Scalar canon = zp_translate_canonical_center(c, true, Rational(0));
    CHECK(canon == scp(p, 1, Rational(1, 2)));
    // ball absorption: terms of valuation >= rho vanish
    Scalar d = sc(p, 1, 2) + sc(p, 8);
    CHECK(zp_translate_canonical_center(d, false, Rational(0)) == sc(p, 1, 2));
    CHECK(zp_translate_canonical_center(d, false, Rational(-2)).is_zero());
}
