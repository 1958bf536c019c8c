#pragma once

#include "padspec/rational.hpp"

#include <string>

namespace padspec {

/// An ultrametric absolute value |.| = p^(-q), stored as the exponent
/// q in Q union {+inf}. q = +inf encodes the value 0 and nothing else.
/// All norm and radius arithmetic in the library is exact in q.
class Val {
public:
    Val() : zero_(true) {}
    static Val zero() { return Val(); }
    static Val one() { return Val::from_exponent(0); }
    static Val from_exponent(const Rational& q) {
        Val v;
        v.zero_ = false;
        v.q_ = q;
        return v;
    }

    bool is_zero() const { return zero_; }

    /// Exponent accessor; only valid on nonzero values.
    const Rational& exponent() const;

    /// Multiplication adds exponents, +inf absorbing.
    Val operator*(const Val& o) const;
    Val operator/(const Val& o) const;

    /// |.|^e in exponents.
    Val pow(const Rational& e) const;

    /// Ultrametric bound min(q, q'): this encoding always takes the generic
    /// branch; exact cancellation belongs to Scalar arithmetic.
    Val ultra_add(const Val& o) const;

    bool operator==(const Val& o) const {
        return zero_ == o.zero_ && (zero_ || q_ == o.q_);
    }
    bool operator!=(const Val& o) const { return !(*this == o); }

    /// Absolute-value order: |a| < |b| iff q_a > q_b, with 0 smallest.
    bool abs_lt(const Val& o) const;
    bool abs_le(const Val& o) const { return *this == o || abs_lt(o); }
    bool abs_gt(const Val& o) const { return o.abs_lt(*this); }
    bool abs_ge(const Val& o) const { return o.abs_le(*this); }

    /// Rendered as "p^(-a/b)" with -q in lowest terms, or "0".
    std::string to_string() const;

private:
    bool zero_;
    Rational q_;
};

/// omega = lim |n!|^{1/n} = |p|^{1/(p-1)} in residue characteristic p.
Val omega(const Int& p);

} // namespace padspec
