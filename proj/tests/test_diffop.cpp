#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "padspec/diffop.hpp"
#include "padspec/error.hpp"

#include <algorithm>

using namespace padspec;
using namespace padspec::testing;

namespace {

DiffOp d_op(const Int& p, Gauge g) { return make_op(p, g, {LaurentPoly(p), lconst(p, 1)}); }

std::vector<Rational> norm_exps(const NewtonPolygon& np) {
    std::vector<Rational> out;
    for (const auto& v : np.root_norms()) out.push_back(v.exponent());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("Leibniz products") {
    Int p = 2;
    LaurentPoly S = lmono(sc(p, 1), 1);
    DiffOp s_op = make_op(p, Gauge::dS(), {S});
    DiffOp prod = d_op(p, Gauge::dS()) * s_op;
    CHECK(prod == make_op(p, Gauge::dS(), {lconst(p, 1), S})); // S d + 1

    DiffOp s_op2 = make_op(p, Gauge::SdS(), {S});
    DiffOp prod2 = d_op(p, Gauge::SdS()) * s_op2;
    CHECK(prod2 == make_op(p, Gauge::SdS(), {S, S})); // S d + S

    // (d - 1)(d + 1) with constant coefficients
    DiffOp dm1 = make_op(p, Gauge::dS(), {lconst(p, -1), lconst(p, 1)});
    DiffOp dp1 = make_op(p, Gauge::dS(), {lconst(p, 1), lconst(p, 1)});
    CHECK(dm1 * dp1 == make_op(p, Gauge::dS(), {lconst(p, -1), LaurentPoly(p), lconst(p, 1)}));

    CHECK_THROWS_AS(d_op(p, Gauge::dS()) * s_op2, Error);
}

TEST_CASE("associativity on random triples") {
    Rng rng(23);
    for (long p : {2L, 3L}) {
        for (auto g : {Gauge::dS(), Gauge::SdS()}) {
            for (int i = 0; i < 15; ++i) {
                DiffOp A = rng.op(p, g, rng.pick(0, 3), false);
                DiffOp B = rng.op(p, g, rng.pick(0, 3), false);
                DiffOp C = rng.op(p, g, rng.pick(0, 3), false);
                CHECK((A * B) * C == A * (B * C));
            }
        }
    }
}

TEST_CASE("twist is the affine substitution") {
    Int p = 3;
    Scalar c = sc(p, 5), a = sc(p, 2);
    DiffOp P = make_op(p, Gauge::SdS(), {LaurentPoly(p, -c), lconst(p, 1)});
    CHECK(P.twisted(a) == make_op(p, Gauge::SdS(), {LaurentPoly(p, -(c - a)), lconst(p, 1)}));

    DiffOp dsq = make_op(p, Gauge::SdS(), {LaurentPoly(p), LaurentPoly(p), lconst(p, 1)});
    CHECK(dsq.twisted(a) ==
          make_op(p, Gauge::SdS(), {LaurentPoly(p, a * a), LaurentPoly(p, a + a), lconst(p, 1)}));

    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        DiffOp Q = rng.op(p, Gauge::SdS(), rng.pick(0, 3), false);
        Scalar b = rng.scalar(p);
        CHECK(Q.twisted(b).twisted(-b) == Q);
    }
}

TEST_CASE("stirling numbers and their inversion") {
    CHECK(stirling_first(2, 1) == -1);
    CHECK(stirling_second(2, 1) == 1);
    for (unsigned i = 0; i <= 12; ++i) {
        for (unsigned k = 0; k <= 12; ++k) {
            Int acc = 0;
            for (unsigned j = std::max(1u, std::min(i, k)); j <= 12; ++j) {
                if (j > i || k > j) continue;
                acc += stirling_second(i, j) * stirling_first(j, k);
            }
            if (i == 0 || k == 0) continue; // handled by the triangular base cases
            CHECK(acc == (i == k ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(stirling_first(2, 5), Error);
}

TEST_CASE("gauge changes") {
    Int p = 2;
    // (d/dS)^2 -> (S d/dS)^2 - (S d/dS)
    DiffOp dsq = make_op(p, Gauge::dS(), {LaurentPoly(p), LaurentPoly(p), lconst(p, 1)});
    DiffOp up = gauge_up(dsq, 0);
    CHECK(up == make_op(p, Gauge::SdS(), {LaurentPoly(p), lconst(p, -1), lconst(p, 1)}));

    DiffOp d1 = make_op(p, Gauge::dS(), {LaurentPoly(p), lconst(p, 1)});
    CHECK(gauge_up(d1, 0) == make_op(p, Gauge::SdS(), {LaurentPoly(p), lconst(p, 1)}));

    CHECK(gauge_down(make_op(p, Gauge::SdS(), {LaurentPoly(p), lconst(p, 1)})) == d1);
    CHECK(gauge_down(up) == dsq);

    Rng rng(41);
    for (long q : {2L, 3L}) {
        for (unsigned l = 0; l <= 2; ++l) {
            for (int i = 0; i < 12; ++i) {
                DiffOp P = rng.op(q, Gauge::dS(), rng.pick(1, 5), true);
                CHECK(gauge_down(gauge_up(P, l)) == P);
            }
        }
    }
}

TEST_CASE("right division") {
    Rng rng(43);
    Int p = 2;
    for (int i = 0; i < 20; ++i) {
        DiffOp R = rng.op(p, Gauge::SdS(), rng.pick(1, 3), true);
        DiffOp Q = rng.op(p, Gauge::SdS(), rng.pick(0, 3), false);
        DiffOp E = rng.op(p, Gauge::SdS(), rng.pick(0, R.degree() - 1), false);
        DiffOp P = Q * R + E;
        auto [q, e] = right_divmod(P, R);
        CHECK(q == Q);
        CHECK(e == E);
    }
}

TEST_CASE("slope factorization recovers constructed factors") {
    Int p = 2;
    Rational rho(0);
    // (d - cS)(d - c'S) in the S d/dS gauge with |cS| = 16 > |c'S| = 4 > 1
    Scalar c = sc(p, 1, 16), cp = sc(p, 1, 4);
    DiffOp left = make_op(p, Gauge::SdS(), {lmono(-c, 1), lconst(p, 1)});
    DiffOp right = make_op(p, Gauge::SdS(), {lmono(-cp, 1), lconst(p, 1)});
    DiffOp P = left * right;
    Val threshold = Val::from_exponent(Rational(-3)); // |z| = 8 between 4 and 16
    auto res = slope_factor(P, threshold, 20, rho);
    CHECK(res.R.degree() == 1);
    CHECK(res.Q.degree() == 1);
    Val tol = P.sup_norm(rho) * Val::from_exponent(Rational(20));
    CHECK(!res.residual.abs_gt(tol));
    // factor polygons match the split halves
    auto split = slope_split(P.commutative_polygon(rho), threshold);
    CHECK(norm_exps(res.R.commutative_polygon(rho)) == std::vector<Rational>{Rational(-2)});
    CHECK(norm_exps(res.Q.commutative_polygon(rho)) == std::vector<Rational>{Rational(-4)});
    CHECK(split.lower.size() == 1);
    CHECK(split.upper.size() == 1);
    // recomposition residual within tolerance
    CHECK(!(P - res.Q * res.R).sup_norm(rho).abs_gt(tol));

    // exactly representable case: right factor d, zero residual
    DiffOp P2 = left * d_op(p, Gauge::SdS());
    auto res2 = slope_factor(P2, Val::from_exponent(Rational(-1)), 20, rho);
    CHECK(res2.residual.is_zero());
    CHECK(res2.R == d_op(p, Gauge::SdS()));
    CHECK(res2.Q == left);
}

TEST_CASE("slope factorization, commutative constant case") {
    Int p = 2;
    Rational rho(0);
    Scalar c = sc(p, 1, 4), cp = sc(p, 1, 2);
    // d^2 - (c + c')d + cc' with |c| = 4 > |c'| = 2
    DiffOp P = make_op(p, Gauge::dS(),
                       {LaurentPoly(p, c * cp), LaurentPoly(p, -(c + cp)), lconst(p, 1)});
    auto res = slope_factor(P, Val::from_exponent(Rational(-3, 2)), 30, rho);
    CHECK(norm_exps(res.R.commutative_polygon(rho)) == std::vector<Rational>{Rational(-1)});
    CHECK(norm_exps(res.Q.commutative_polygon(rho)) == std::vector<Rational>{Rational(-2)});
    Val tol = P.sup_norm(rho) * Val::from_exponent(Rational(30));
    CHECK(!(P - res.Q * res.R).sup_norm(rho).abs_gt(tol));

    // threshold below all roots gives (P, 1)
    auto res3 = slope_factor(P, Val::from_exponent(Rational(-1, 2)), 20, rho);
    CHECK(res3.R == DiffOp::one(p, Gauge::dS()));
    CHECK(res3.Q == P);

    // a root on the threshold is rejected
    CHECK_THROWS_AS(slope_factor(P, Val::from_exponent(Rational(-1)), 20, rho), Error);
}

TEST_CASE("twisting by zero is neutral across gauge changes") {
    Rng rng(47);
    Int p = 3;
    Rational rho(1, 2);
    Scalar zero(p, Rational(0));
    for (int i = 0; i < 10; ++i) {
        long deg = rng.pick(1, 3);
        std::vector<LaurentPoly> coeffs;
        for (long k = 0; k < deg; ++k) coeffs.push_back(LaurentPoly(p, rng.scalar(p, 2)));
        coeffs.push_back(lconst(p, 1));
        DiffOp P = make_op(p, Gauge::dS(), coeffs);
        for (unsigned l = 0; l <= 2; ++l) {
            auto lhs = norm_exps(gauge_up(P, l).twisted(zero).commutative_polygon(rho));
            auto rhs = norm_exps(gauge_up(P.twisted(zero), l).commutative_polygon(rho));
            CHECK(lhs == rhs);
        }
    }
}
