#pragma once

#include "padspec/scalar.hpp"

#include <map>
#include <string>

namespace padspec {

/// The derivation acting on H(x_{0,r}): d/dS, S*d/dS, or p^l*S*d/dS.
/// PlSdS(0) is normalized to SdS on construction.
struct Gauge {
    enum class Kind { DdS, SdS, PlSdS };
    Kind kind = Kind::SdS;
    unsigned l = 0; // only for PlSdS

    static Gauge dS() { return Gauge{Kind::DdS, 0}; }
    static Gauge SdS() { return Gauge{Kind::SdS, 0}; }
    static Gauge plSdS(unsigned l) {
        if (l == 0) return SdS();
        return Gauge{Kind::PlSdS, l};
    }

    /// l with d = p^l S d/dS; only for the S-multiplied kinds.
    unsigned level() const { return kind == Kind::PlSdS ? l : 0; }

    bool operator==(const Gauge& o) const { return kind == o.kind && l == o.l; }
    bool operator!=(const Gauge& o) const { return !(*this == o); }

    std::string to_string() const;
};

/// Operator norm of the gauge derivation on H(x_{0,r}), r = p^{-rho}:
/// ||d/dS|| = 1/r, ||S d/dS|| = 1, ||p^l S d/dS|| = |p|^l.
Val derivation_norm(const Gauge& g, const Rational& rho);

/// A finite Laurent polynomial in S over Scalar: a dense representative of
/// an element of H(x_{0,r}). No zero coefficients are stored.
class LaurentPoly {
public:
    explicit LaurentPoly(const Int& p) : p_(p) {}
    LaurentPoly(const Int& p, const Scalar& constant);

    static LaurentPoly monomial(const Scalar& c, long exponent);

    const Int& prime() const { return p_; }
    const std::map<long, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant-term view (zero scalar if absent).
    Scalar constant_value() const;

    void set_term(long exponent, const Scalar& c);
    Scalar coeff(long exponent) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Scalar& c) const;
    LaurentPoly shifted(long dexp) const; // multiply by S^dexp

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Gauss norm at x_{0,r}, r = p^{-rho}: exponent min_i (v(c_i) + i*rho).
    Val gauss_norm(const Rational& rho) const;

    /// The gauge action: DdS maps c S^i to i c S^{i-1}; SdS to i c S^i;
    /// PlSdS(l) to p^l i c S^i.
    LaurentPoly derived(const Gauge& g) const;

    std::string to_string() const;

private:
    Int p_;
    std::map<long, Scalar> terms_;
};

} // namespace padspec
