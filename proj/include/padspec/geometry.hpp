#pragma once

#include "padspec/scalar.hpp"

namespace padspec {

/// A point x_{c,r} of the affine line with c in K_m and r = p^{-rho} in the
/// exact model's value group p^Q; rho = +inf encodes a type-1 point. Only
/// types 1 and 2 are representable.
struct PointDescriptor {
    Scalar center;
    bool type1 = false;
    Rational rho; // radius exponent when !type1

    static PointDescriptor of_type1(const Scalar& c) { return {c, true, Rational(0)}; }
    static PointDescriptor of_type2(const Scalar& c, const Rational& rho) { return {c, false, rho}; }

    Val radius() const { return type1 ? Val::zero() : Val::from_exponent(rho); }
    PointDescriptor translated(const Scalar& a) const { return {center + a, type1, rho}; }

    std::string to_string() const;
};

/// x_{c,rho} = x_{c',rho'} iff rho = rho' and |c - c'| <= p^{-rho}.
bool point_equal(const PointDescriptor& a, const PointDescriptor& b);

struct MapImage {
    PointDescriptor point;
    Int degree; // [H(y) : H(x)]
};

/// Frob_p(x_{a,r}) = x_{a^p, max(|p||a|^{p-1} r, r^p)}; the extension degree
/// is p when r >= omega |a| and 1 otherwise.
MapImage frobenius_image(const PointDescriptor& x);

/// n-th power map for gcd(n, p) = 1: x_{a,r} -> x_{a^n, max(|a|^{n-1} r, r^n)};
/// degree n when r >= |a|, else 1.
MapImage tame_power_image(const PointDescriptor& x, long n);

/// Image radius exponent of the logarithm on D(a,|a|)^- at relative radius
/// r = |a| p^{-rho_rel}: min over j >= 0 of (p^j rho_rel - j), exact.
Rational log_radius(const Int& p, const Rational& rho_rel);

struct LogDegree {
    unsigned n;
    Int degree; // p^n
};

/// Degree class of the logarithm: p^n for rho_rel in the left-closed
/// omega-bracket (1/((p-1)p^n), 1/((p-1)p^{n-1})], and 1 above 1/(p-1).
LogDegree log_degree(const Int& p, const Rational& rho_rel);

/// delta extended to points: |T(z) - n| = max(|c - n|, r) for integers n,
/// so the distance from z to the closure of Z is max(r, delta(c)).
Val delta_point(const PointDescriptor& z);

/// Canonical representative of q modulo p^K Z_p: the partial p-adic
/// expansion of q with digits at positions < K.
Rational rational_mod_pk(const Rational& q, const Int& p, long K);

/// Canonical center of {x_{c,rho}} + Z_p (or of a Z-train of disks of
/// radius p^{-rho}): the Q_p-coordinate is reduced modulo Z_p and every
/// basis coordinate modulo the radius ball. rho_inf = true means r = 0.
Scalar zp_translate_canonical_center(const Scalar& c, bool rho_inf, const Rational& rho);

} // namespace padspec
