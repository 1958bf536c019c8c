#pragma once

#include "padspec/rational.hpp"
#include "padspec/valuation.hpp"

#include <vector>

namespace padspec {

/// An element of the ramified field K_m = Q(p^{1/m}), stored as rational
/// coordinates on the Q-basis {p^{j/m} : 0 <= j < m}. x^m - p is Eisenstein,
/// so K_m is a field and the representation is unique for fixed m.
///
/// This is the computable sub-model of the algebraically closed base field:
/// valuations are exact because the basis elements occupy distinct classes
/// mod 1 of the value group.
class Scalar {
public:
    Scalar() : p_(2), coeffs_(1, Rational(0)) {}

    Scalar(const Int& p, const Rational& rational_value)
        : p_(p), coeffs_(1, rational_value) {}

    /// coeffs[j] multiplies p^{j/m}.
    Scalar(const Int& p, unsigned m, std::vector<Rational> coeffs);

    /// u * p^{a/b}: b divides the resulting ramification index.
    static Scalar ramified(const Int& p, const Rational& u, const Rational& exponent);

    const Int& prime() const { return p_; }
    unsigned m() const { return static_cast<unsigned>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The j = 0 coordinate (the unramified part's rational coefficient).
    const Rational& rational_part() const { return coeffs_[0]; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const; // InversionOfZero on 0
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Exact p-adic valuation: min over nonzero j of v_p(c_j) + j/m.
    Val valuation() const;

    /// Distance to the closure of Z: decompose into rational part c_0 and
    /// ramified rest R; result = max(delta(c_0), |R|) where delta(c_0) = 0
    /// when v_p(c_0) >= 0 and |c_0| otherwise.
    Val delta() const;

    /// Smallest m' | m carrying all nonzero coordinates.
    Scalar reduced() const;

    /// Re-index into K_{m'} for m a divisor of m'.
    Scalar promoted(unsigned m_prime) const;

    std::string to_string() const;

private:
    Int p_;
    std::vector<Rational> coeffs_; // size = m
};

} // namespace padspec
