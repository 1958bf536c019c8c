#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "padspec/error.hpp"
#include "padspec/newton.hpp"

#include <algorithm>

using namespace padspec;
using namespace padspec::testing;

namespace {

std::vector<std::pair<long, Val>> pts(std::initializer_list<std::pair<long, Rational>> v) {
    std::vector<std::pair<long, Val>> out;
    for (const auto& [i, q] : v) out.emplace_back(i, Val::from_exponent(q));
    return out;
}

std::vector<Rational> exps(const std::vector<Val>& vals) {
    std::vector<Rational> out;
    for (const auto& v : vals) out.push_back(v.exponent());
    return out;
}

} // namespace

TEST_CASE("polygon root valuations") {
    // T^2 - p: two roots of absolute value p^{-1/2}
    auto np = NewtonPolygon::build(pts({{0, Rational(1)}, {2, Rational(0)}}));
    CHECK(exps(np.root_norms()) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    // T^2 + T + 2 at p = 2: valuations {1, 0}
    auto np2 = NewtonPolygon::build(pts({{0, Rational(1)}, {1, Rational(0)}, {2, Rational(0)}}));
    CHECK(exps(np2.root_norms()) == std::vector<Rational>{Rational(1), Rational(0)});

    // T - cS^2 over x_{0,1} with v(c) = -4: one root of absolute value p^4
    auto np3 = NewtonPolygon::build(pts({{0, Rational(-4)}, {1, Rational(0)}}));
    CHECK(exps(np3.root_norms()) == std::vector<Rational>{Rational(-4)});
}

TEST_CASE("zero roots from a vanishing tail") {
    std::vector<std::pair<long, Val>> v = pts({{1, Rational(0)}, {3, Rational(0)}});
    v.emplace_back(0, Val::zero());
    auto np = NewtonPolygon::build(v);
    CHECK(np.zero_root_count() == 1);
    CHECK(np.root_norms().size() == 3);
    CHECK(np.root_norms()[0].is_zero());
}

TEST_CASE("width") {
    auto tsq = pts({{0, Rational(1)}, {2, Rational(0)}});
    CHECK(width_at(tsq, Rational(1, 2)) == 2);
    CHECK(width_at(tsq, Rational(0)) == 0);
    auto t2 = pts({{0, Rational(1)}, {1, Rational(0)}, {2, Rational(0)}});
    CHECK(width_at(t2, Rational(1)) == 1);
}

TEST_CASE("slope split") {
    auto np = NewtonPolygon::build(pts({{0, Rational(1)}, {1, Rational(0)}, {2, Rational(0)}}));
    auto s = slope_split(np, Val::from_exponent(Rational(1, 2)));
    REQUIRE(s.lower.size() == 1);
    REQUIRE(s.upper.size() == 1);
    CHECK(s.lower[0].exponent() == Rational(1));
    CHECK(s.upper[0].exponent() == Rational(0));
    CHECK_THROWS_AS(slope_split(np, Val::from_exponent(Rational(1))), Error);

    auto single = NewtonPolygon::build(pts({{0, Rational(2)}, {2, Rational(0)}}));
    auto everything = slope_split(single, Val::from_exponent(Rational(-1)));
    CHECK(everything.lower.size() == 2);
    CHECK(everything.upper.empty());
    auto nothing = slope_split(single, Val::from_exponent(Rational(5)));
    CHECK(nothing.lower.empty());
    CHECK(nothing.upper.size() == 2);
}

TEST_CASE("product law and width consistency on random products") {
    Rng rng(17);
    for (long p : {2L, 3L, 5L}) {
        for (int run = 0; run < 40; ++run) {
            long n = rng.pick(1, 5);
            LaurentPoly one(p, sc(p, 1));
            std::vector<LaurentPoly> prod{one};
            Rational rho(rng.pick(-3, 3), rng.pick(1, 3));
            std::vector<Rational> expected;
            for (long i = 0; i < n; ++i) {
                Scalar c = rng.nonzero_scalar(p);
                long e = rng.pick(-3, 3);
                LaurentPoly root = lmono(c, e);
                expected.push_back(root.gauss_norm(rho).exponent());
                std::vector<LaurentPoly> next(prod.size() + 1, LaurentPoly(p));
                for (std::size_t k = 0; k < prod.size(); ++k) {
                    next[k + 1] = next[k + 1] + prod[k];
                    next[k] = next[k] - prod[k] * root;
                }
                prod = std::move(next);
            }
            std::vector<std::pair<long, Val>> vals;
            for (std::size_t i = 0; i < prod.size(); ++i)
                vals.emplace_back(static_cast<long>(i), prod[i].gauss_norm(rho));
            auto np = NewtonPolygon::build(vals);
            auto rec = exps(np.root_norms());
            std::sort(expected.begin(), expected.end());
            std::sort(rec.begin(), rec.end());
            CHECK(rec == expected);
            // width at each slope matches the segment length; off-slope width is 0
            for (const auto& seg : np.segments()) CHECK(width_at(vals, -seg.slope) == seg.length);
            Rational off = (np.segments().empty() ? Rational(0) : -np.segments().front().slope) + Rational(1, 97);
            bool is_slope = false;
            for (const auto& seg : np.segments())
                if (-seg.slope == off) is_slope = true;
            if (!is_slope) CHECK(width_at(vals, off) == 0);
        }
    }
}
