#include "padspec/geometry.hpp"

#include "padspec/error.hpp"

#include <numeric>

namespace padspec {

std::string PointDescriptor::to_string() const {
    return "x(" + center.to_string() + ", rho=" + (type1 ? "inf" : rat_to_string(rho)) + ")";
}

bool point_equal(const PointDescriptor& a, const PointDescriptor& b) {
    if (a.type1 != b.type1) return false;
    if (!a.type1 && a.rho != b.rho) return false;
    Val d = (a.center - b.center).valuation();
    return d.abs_le(a.radius());
}

MapImage frobenius_image(const PointDescriptor& x) {
    const Int& p = x.center.prime();
    long pl = static_cast<long>(p);
    PointDescriptor img;
    img.center = x.center.pow(pl);
    Val va = x.center.valuation();
    bool first_finite = !x.type1 && !va.is_zero();
    if (x.type1) {
        img.type1 = true;
    } else {
        img.type1 = false;
        Rational second = x.rho * Rational(p);
        if (first_finite) {
            Rational first = Rational(1) + Rational(p - 1) * va.exponent() + x.rho;
            img.rho = std::min(first, second);
        } else {
            img.rho = second;
        }
    }
    // degree p iff r >= omega |a|
    Rational om(1, p - 1);
    bool big;
    if (va.is_zero())
        big = true; // a = 0: omega|a| = 0 <= r
    else if (x.type1)
        big = false;
    else
        big = x.rho <= om + va.exponent();
    return {img, big ? Int(p) : Int(1)};
}

MapImage tame_power_image(const PointDescriptor& x, long n) {
    const Int& p = x.center.prime();
    if (n < 1) fail("NotCoprime", "power-map index must be a positive integer");
    if (Int(n) % p == 0) fail("NotCoprime", "power-map index shares a factor with p");
    PointDescriptor img;
    img.center = x.center.pow(n);
    Val va = x.center.valuation();
    if (x.type1) {
        img.type1 = true;
    } else {
        img.type1 = false;
        Rational second = x.rho * Rational(n);
        if (!va.is_zero()) {
            Rational first = Rational(n - 1) * va.exponent() + x.rho;
            img.rho = std::min(first, second);
        } else {
            img.rho = second;
        }
    }
    bool big;
    if (va.is_zero())
        big = true;
    else if (x.type1)
        big = false;
    else
        big = x.rho <= va.exponent();
    return {img, big ? Int(n) : Int(1)};
}

Rational log_radius(const Int& p, const Rational& rho_rel) {
    if (rho_rel <= 0) fail("NonPositiveRelativeRadius", "relative radius exponent must be positive");
    Rational best = rho_rel; // j = 0
    Rational t = rho_rel;
    Rational pj = rho_rel;
    long j = 0;
    while (true) {
        Rational delta = pj * Rational(p - 1) - Rational(1); // t_{j+1} - t_j
        if (delta > 0) break;
        t += delta;
        pj *= Rational(p);
        ++j;
        if (t < best) best = t;
        if (j > 4096) fail("NonPositiveRelativeRadius", "log_radius failed to stabilize");
    }
    return best;
}

LogDegree log_degree(const Int& p, const Rational& rho_rel) {
    if (rho_rel <= 0) fail("NonPositiveRelativeRadius", "relative radius exponent must be positive");
    Rational bound(1, p - 1);
    if (rho_rel > bound) return {0, Int(1)};
    unsigned n = 1;
    Rational b = bound / Rational(p); // 1/((p-1)p^n)
    while (rho_rel <= b) {
        b /= Rational(p);
        ++n;
        if (n > 4096) fail("NonPositiveRelativeRadius", "log_degree failed to stabilize");
    }
    return {n, int_pow(p, n)};
}

Val delta_point(const PointDescriptor& z) {
    Val dc = z.center.delta();
    Val r = z.radius();
    return dc.abs_ge(r) ? dc : r;
}

namespace {

Int mod_inverse(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    Int t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) fail("NotPrime", "no inverse mod p");
    if (t < 0) t += p;
    return t;
}

} // namespace

Rational rational_mod_pk(const Rational& q, const Int& p, long K) {
    if (q == 0) return Rational(0);
    long v = vp_rat(q, p);
    if (v >= K) return Rational(0);
    Rational rest = q;
    Rational acc(0);
    for (long i = v; i < K; ++i) {
        if (rest == 0) break;
        if (vp_rat(rest, p) > i) continue;
        // digit of rest at position i
        Rational x = rest / rat_pow(Rational(p), i);
        Int num = rat_num(x) % p;
        Int den_inv = mod_inverse(rat_den(x), p);
        Int digit = (num * den_inv) % p;
        if (digit < 0) digit += p;
        if (digit != 0) {
            Rational term = Rational(digit) * rat_pow(Rational(p), i);
            acc += term;
            rest -= term;
        }
    }
    return acc;
}

Scalar zp_translate_canonical_center(const Scalar& c, bool rho_inf, const Rational& rho) {
    const Int& p = c.prime();
    unsigned m = c.m();
    std::vector<Rational> out(m, Rational(0));
    for (unsigned j = 0; j < m; ++j) {
        const Rational& cj = c.coeffs()[j];
        if (cj == 0) continue;
        if (j == 0) {
            // Z_p absorbs digits at positions >= 0; the ball absorbs >= rho.
            Rational cutoff = rho_inf ? Rational(0) : std::min(Rational(0), rho);
            out[0] = rational_mod_pk(cj, p, static_cast<long>(rat_ceil(cutoff)));
        } else if (rho_inf) {
            out[j] = cj;
        } else {
            Rational cutoff = rho - Rational(j, m);
            out[j] = rational_mod_pk(cj, p, static_cast<long>(rat_ceil(cutoff)));
        }
    }
    return Scalar(p, m, std::move(out)).reduced();
}

} // namespace padspec
