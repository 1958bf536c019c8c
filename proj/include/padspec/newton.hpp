#pragma once

#include "padspec/valuation.hpp"

#include <utility>
#include <vector>

namespace padspec {

struct NewtonSegment {
    Rational slope; // strictly increasing left to right
    long length;    // horizontal length = number of roots on this slope
};

/// Newton polygon of a commutative polynomial sum a_i T^i given by the
/// valuations of its coefficients. Decoupled from the coefficient ring: the
/// same code serves polynomials over Scalar and over LaurentPoly under a
/// Gauss norm.
///
/// Sign convention (pinned by the product-reconstruction oracle): a segment
/// from (i, q_i) to (i', q_{i'}) contributes i' - i roots of valuation
/// -(q_{i'} - q_i)/(i' - i). Zero coefficients below the lowest finite index
/// contribute roots z = 0, reported as |z| = 0.
class NewtonPolygon {
public:
    /// coeff_vals: (index, |a_i|) pairs; |a_i| = 0 entries are allowed and
    /// mean vanishing coefficients. Throws EmptyPolynomial when nothing is
    /// finite or the top index carries the zero value.
    static NewtonPolygon build(const std::vector<std::pair<long, Val>>& coeff_vals);

    const std::vector<std::pair<long, Rational>>& hull() const { return hull_; }
    const std::vector<NewtonSegment>& segments() const { return segments_; }
    long degree() const { return degree_; }
    long zero_root_count() const { return zero_roots_; }

    /// Multiset of |z_i| over all degree() roots, sorted ascending in
    /// absolute value (zero roots first).
    std::vector<Val> root_norms() const;

private:
    long degree_ = 0;
    long zero_roots_ = 0;
    std::vector<std::pair<long, Rational>> hull_;
    std::vector<NewtonSegment> segments_;
};

/// W_r(P) for r = p^{-rho_T}: difference between the largest and smallest
/// index achieving max_i |a_i| r^i.
long width_at(const std::vector<std::pair<long, Val>>& coeff_vals, const Rational& rho_T);

struct SlopeSplit {
    std::vector<Val> lower; // |z| < threshold
    std::vector<Val> upper; // |z| > threshold
};

/// Partition of the root-norm multiset by a threshold that hits no root;
/// throws ThresholdHitsRoot otherwise.
SlopeSplit slope_split(const NewtonPolygon& poly, const Val& threshold);

} // namespace padspec
