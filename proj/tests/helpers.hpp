#pragma once

#include "padspec/diffop.hpp"

#include <random>
#include <vector>

namespace padspec::testing {

inline Scalar sc(const Int& p, long num, long den = 1) { return Scalar(p, Rational(num, den)); }

/// u * p^(a/b)
inline Scalar scp(const Int& p, const Rational& u, const Rational& e) { return Scalar::ramified(p, u, e); }

inline LaurentPoly lmono(const Scalar& c, long e) { return LaurentPoly::monomial(c, e); }

inline LaurentPoly lconst(const Int& p, long num, long den = 1) { return LaurentPoly(p, sc(p, num, den)); }

inline DiffOp make_op(const Int& p, Gauge g, std::vector<LaurentPoly> coeffs) {
    return DiffOp(p, g, std::move(coeffs));
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

    Rational rational(long max_pow, const Int& p) {
        long v = pick(-max_pow, max_pow);
        long u = pick(1, 6);
        while (u % static_cast<long>(p) == 0) u = pick(1, 6);
        return Rational(u) * rat_pow(Rational(p), v);
    }

    Scalar scalar(const Int& p, unsigned max_m = 4) {
        unsigned m = static_cast<unsigned>(pick(1, max_m));
        std::vector<Rational> c(m, Rational(0));
        unsigned nterms = static_cast<unsigned>(pick(1, 2));
        for (unsigned t = 0; t < nterms; ++t) c[static_cast<unsigned>(pick(0, m - 1))] = rational(3, p);
        return Scalar(p, m, std::move(c));
    }

    Scalar nonzero_scalar(const Int& p, unsigned max_m = 4) {
        for (;;) {
            Scalar s = scalar(p, max_m);
            if (!s.is_zero()) return s;
        }
    }

    LaurentPoly laurent(const Int& p, long max_exp = 3) {
        LaurentPoly f(p);
        long nterms = pick(1, 3);
        for (long t = 0; t < nterms; ++t) f.set_term(pick(-max_exp, max_exp), scalar(p));
        return f;
    }

    LaurentPoly nonzero_laurent(const Int& p, long max_exp = 3) {
        for (;;) {
            LaurentPoly f = laurent(p, max_exp);
            if (!f.is_zero()) return f;
        }
    }

    DiffOp op(const Int& p, Gauge g, long deg, bool monic, long max_exp = 2) {
        std::vector<LaurentPoly> c;
        for (long i = 0; i < deg; ++i) c.push_back(laurent(p, max_exp));
        c.push_back(monic ? LaurentPoly(p, Scalar(p, Rational(1))) : nonzero_laurent(p, max_exp));
        return DiffOp(p, g, std::move(c));
    }
};

} // namespace padspec::testing
