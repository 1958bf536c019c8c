#pragma once

#include "padspec/diffop.hpp"

#include <optional>
#include <vector>

namespace padspec {

enum class RadiusFlag { Small, Boundary, Intermediate, Solvable };

std::string flag_to_string(RadiusFlag f);

struct RadiusEntry {
    Val value;
    RadiusFlag flag;
};

/// Subsidiary radii of convergence at x_{0,r}, r = p^{-rho}, as a
/// non-decreasing multiset of absolute values. `gauge_level` empty means the
/// entries are true d/dS-normalized radii (R_i <= r); level l means the
/// p^l S d/dS scale, related by R^{dS} = |p|^l r(x) R^{p^l S dS}.
/// Values equal to omega * r are flagged Boundary: the polygon formula only
/// certifies the strict regime.
struct RadiiReport {
    Int p;
    Rational point_rho;
    std::optional<unsigned> gauge_level; // empty = true scale
    std::vector<RadiusEntry> radii;      // ascending absolute value
    bool boundary_ambiguity = false;

    long rank() const { return static_cast<long>(radii.size()); }
    bool is_true_scale() const { return !gauge_level.has_value(); }
    bool pure() const;
};

/// Radii from the commutative polygon of P via R_i = omega / max(||d||, |lambda_i|)
/// in P's own gauge scale (true scale for d/dS).
RadiiReport radii_from_polygon(const DiffOp& P, const Rational& point_rho);

/// The d/dS special case of radii_from_polygon (P monic over d/dS).
RadiiReport radii_young(const DiffOp& P, const Rational& point_rho);

enum class RescaleDirection { ToDdS, FromDdS };

/// Exponent shift by l + rho between the p^l S d/dS scale and the true scale.
RadiiReport radii_gauge_rescale(const RadiiReport& report, unsigned l, RescaleDirection dir);

/// Frobenius push-forward of the radii multiset (one step): each R expands
/// to p values, {R^p, omega^p r^p (p-1 times)} above the omega r boundary
/// and {|p| r^{p-1} R (p times)} at or below it; the new point is rho' = p rho.
/// Entries exactly at omega r set boundary_ambiguity (the branches agree there).
RadiiReport radii_frobenius_push(const RadiiReport& report);

/// Closed form of the l-fold push for a pure input with
/// omega^{1/p^{l-1}} r <= R_1 <= omega^{1/p^l} r; must equal iterating
/// radii_frobenius_push l times. PurityViolated otherwise.
RadiiReport radii_frobenius_push_iter(const RadiiReport& report, unsigned l);

/// Radius of convergence of (H(x_{0,r}), S d/dS - a): r when a lies in Z_p,
/// otherwise (|p|^l omega r^{p^l} / delta(a))^{1/p^l} with
/// l = max(0, floor(log delta / log |p|) + 1), evaluated exactly in exponents.
Val rank_one_radius(const Scalar& a, const Rational& point_rho);

struct SpectralNormBound {
    bool exact;
    Val value; // the norm when exact, else the bound ||d||
};

/// max(||d||, ||nabla||_sp) = omega / R_1 in the gauge scale: returns the
/// spectral norm when omega/R_1 exceeds ||d||, else the bound marker.
SpectralNormBound spectral_norm_from_radius(const RadiiReport& report, const Gauge& gauge);

} // namespace padspec
