#pragma once

#include "padspec/laurent.hpp"
#include "padspec/newton.hpp"

#include <vector>

namespace padspec {

/// Stirling numbers fixed by T(T-1)...(T-i+1) = sum_j s(i,j) T^j and
/// T^i = sum_j S(i,j) T(T-1)...(T-j+1). IndexOutOfRange unless 0 <= j <= i.
Int stirling_first(unsigned i, unsigned j);
Int stirling_second(unsigned i, unsigned j);

/// A differential polynomial sum g_i d^i in the ring D of the chosen gauge,
/// with Laurent-polynomial coefficients, lowest degree first. Multiplication
/// obeys d*f = d(f) + f*d with d(f) the gauge derivation.
class DiffOp {
public:
    DiffOp(const Int& p, Gauge g) : p_(p), gauge_(g), coeffs_(1, LaurentPoly(p)) {}
    DiffOp(const Int& p, Gauge g, std::vector<LaurentPoly> coeffs);

    static DiffOp one(const Int& p, Gauge g);

    const Int& prime() const { return p_; }
    const Gauge& gauge() const { return gauge_; }
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_monic() const;
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
    bool has_constant_coeffs() const;

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator*(const DiffOp& o) const; // GaugeMismatch across gauges

    bool operator==(const DiffOp& o) const;

    /// Commutative substitution T -> T + a applied coefficient-wise;
    /// the twisted operator is attached to (M, nabla - a).
    DiffOp twisted(const Scalar& a) const;

    /// (index, Gauss norm at rho) pairs of the commutative polynomial P(T).
    std::vector<std::pair<long, Val>> commutative_vals(const Rational& rho) const;
    NewtonPolygon commutative_polygon(const Rational& rho) const;

    /// max Gauss norm over coefficients.
    Val sup_norm(const Rational& rho) const;

    std::string to_string() const;

private:
    Int p_;
    Gauge gauge_;
    std::vector<LaurentPoly> coeffs_;
    void normalize();
};

/// Attached operator of (M, p^l S nabla) for monic P over d/dS: coefficient
/// of (p^l S d/dS)^i is p^{(n-i)l} sum_{j>=i} g_j S^{n-j} s(j,i).
DiffOp gauge_up(const DiffOp& P, unsigned l);

/// Inverse change of basis: coefficient of (d/dS)^i is
/// S^{i-n} sum_{j>=i} q_j p^{l(j-n)} S(j,i); P must be monic.
DiffOp gauge_down(const DiffOp& Q);

/// Right division by a monic operator: P = Q*R + E with deg E < deg R.
std::pair<DiffOp, DiffOp> right_divmod(const DiffOp& P, const DiffOp& R);

struct SlopeFactorResult {
    DiffOp Q;
    DiffOp R; // rightmost factor, carries the roots below the threshold
    Val residual;
    long iterations = 0;
};

/// Slope factorization P = Q*R at the working point x_{0,p^{-rho}}: the
/// commutative polygons of Q and R match the slope_split halves at the
/// threshold and |P - Q*R| <= p^{-precision} |P|. Fixed-point lift of the
/// commutative split; Laurent support confined to a window growing with
/// the precision. Requires ||d|| < threshold and width 0 at the threshold.
SlopeFactorResult slope_factor(const DiffOp& P, const Val& threshold, long precision, const Rational& rho);

} // namespace padspec
