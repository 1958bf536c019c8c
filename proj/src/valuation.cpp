#include "padspec/valuation.hpp"

#include "padspec/error.hpp"

namespace padspec {

const Rational& Val::exponent() const {
    if (zero_) fail("ZeroValuation", "exponent of the zero value");
    return q_;
}

Val Val::operator*(const Val& o) const {
    if (zero_ || o.zero_) return Val::zero();
    return Val::from_exponent(q_ + o.q_);
}

Val Val::operator/(const Val& o) const {
    if (o.zero_) fail("DivisionByZeroValue", "division by the zero value");
    if (zero_) return Val::zero();
    return Val::from_exponent(q_ - o.q_);
}

Val Val::pow(const Rational& e) const {
    if (zero_) {
        if (e <= 0) fail("ZeroValuation", "0 to a non-positive power");
        return Val::zero();
    }
    return Val::from_exponent(q_ * e);
}

Val Val::ultra_add(const Val& o) const {
    if (zero_) return o;
    if (o.zero_) return *this;
    return Val::from_exponent(q_ < o.q_ ? q_ : o.q_);
}

bool Val::abs_lt(const Val& o) const {
    if (o.zero_) return false;
    if (zero_) return true;
    return q_ > o.q_;
}

std::string Val::to_string() const {
    if (zero_) return "0";
    return "p^(" + rat_to_string(-q_) + ")";
}

Val omega(const Int& p) {
    if (p < 2) fail("NotPrime", "omega requires a prime p");
    return Val::from_exponent(Rational(1, p - 1));
}

} // namespace padspec
