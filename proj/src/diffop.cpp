#include "padspec/diffop.hpp"

#include "padspec/error.hpp"

#include <algorithm>
#include <map>

namespace padspec {

namespace {

Int binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long j = 0; j < k; ++j) {
        r *= Int(n - j);
        r /= Int(j + 1);
    }
    return r;
}

using StirlingTable = std::map<std::pair<unsigned, unsigned>, Int>;

Int stirling_rec(StirlingTable& cache, unsigned i, unsigned j, bool first) {
    if (j > i) fail("IndexOutOfRange", "stirling indices require j <= i");
    if (i == 0) return j == 0 ? 1 : 0;
    if (j == 0) return 0;
    auto key = std::make_pair(i, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Int lower = (j <= i - 1) ? stirling_rec(cache, i - 1, j, first) : Int(0);
    Int r;
    if (first)
        r = stirling_rec(cache, i - 1, j - 1, first) - Int(i - 1) * lower;
    else
        r = stirling_rec(cache, i - 1, j - 1, first) + Int(j) * lower;
    cache.emplace(key, r);
    return r;
}

} // namespace

Int stirling_first(unsigned i, unsigned j) {
    static StirlingTable cache;
    return stirling_rec(cache, i, j, true);
}

Int stirling_second(unsigned i, unsigned j) {
    static StirlingTable cache;
    return stirling_rec(cache, i, j, false);
}

DiffOp::DiffOp(const Int& p, Gauge g, std::vector<LaurentPoly> coeffs) : p_(p), gauge_(g), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back(p_);
    normalize();
}

DiffOp DiffOp::one(const Int& p, Gauge g) {
    return DiffOp(p, g, {LaurentPoly(p, Scalar(p, Rational(1)))});
}

void DiffOp::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool DiffOp::is_monic() const {
    LaurentPoly unit(p_, Scalar(p_, Rational(1)));
    return coeffs_.back() == unit;
}

bool DiffOp::has_constant_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.is_constant()) return false;
    return true;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    if (gauge_ != o.gauge_) fail("GaugeMismatch", "operands in different gauges");
    std::vector<LaurentPoly> c(std::max(coeffs_.size(), o.coeffs_.size()), LaurentPoly(p_));
    for (size_t i = 0; i < c.size(); ++i) {
        LaurentPoly t(p_);
        if (i < coeffs_.size()) t = t + coeffs_[i];
        if (i < o.coeffs_.size()) t = t + o.coeffs_[i];
        c[i] = t;
    }
    return DiffOp(p_, gauge_, std::move(c));
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
    DiffOp neg = o;
    for (auto& c : neg.coeffs_) c = -c;
    return *this + neg;
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
    if (gauge_ != o.gauge_) fail("GaugeMismatch", "operands in different gauges");
    // d^i * f = sum_k C(i,k) delta^{i-k}(f) d^k (iterated Leibniz)
    std::vector<LaurentPoly> out(coeffs_.size() + o.coeffs_.size() - 1, LaurentPoly(p_));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            // walk k from i down to 0 so cur = delta^{i-k}(b_j) applies one step at a time
            LaurentPoly cur = o.coeffs_[j];
            for (long k = static_cast<long>(i); k >= 0; --k) {
                Int bc = binom(static_cast<long>(i), k);
                if (bc != 0 && !cur.is_zero()) {
                    LaurentPoly term = (coeffs_[i] * cur).scaled(Scalar(p_, Rational(bc)));
                    size_t idx = static_cast<size_t>(k) + j;
                    out[idx] = out[idx] + term;
                }
                if (k > 0) cur = cur.derived(gauge_);
            }
        }
    }
    return DiffOp(p_, gauge_, std::move(out));
}

bool DiffOp::operator==(const DiffOp& o) const {
    if (gauge_ != o.gauge_ || coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
}

DiffOp DiffOp::twisted(const Scalar& a) const {
    // constants commute with d in every gauge, so (d + a)^i expands binomially
    std::vector<LaurentPoly> out(coeffs_.size(), LaurentPoly(p_));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        Scalar apow(p_, Rational(1));
        for (long k = static_cast<long>(i); k >= 0; --k) {
            // apow = a^{i-k}
            Scalar c = Scalar(p_, Rational(binom(static_cast<long>(i), k))) * apow;
            out[static_cast<size_t>(k)] = out[static_cast<size_t>(k)] + coeffs_[i].scaled(c);
            apow = apow * a;
        }
    }
    return DiffOp(p_, gauge_, std::move(out));
}

std::vector<std::pair<long, Val>> DiffOp::commutative_vals(const Rational& rho) const {
    std::vector<std::pair<long, Val>> out;
    for (size_t i = 0; i < coeffs_.size(); ++i) out.emplace_back(static_cast<long>(i), coeffs_[i].gauss_norm(rho));
    return out;
}

NewtonPolygon DiffOp::commutative_polygon(const Rational& rho) const {
    return NewtonPolygon::build(commutative_vals(rho));
}

Val DiffOp::sup_norm(const Rational& rho) const {
    Val best = Val::zero();
    for (const auto& c : coeffs_) {
        Val g = c.gauss_norm(rho);
        if (g.abs_gt(best)) best = g;
    }
    return best;
}

std::string DiffOp::to_string() const {
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero() && coeffs_.size() > 1) continue;
        if (!s.empty()) s += " + ";
        s += "[" + coeffs_[i].to_string() + "]d^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

DiffOp gauge_up(const DiffOp& P, unsigned l) {
    if (P.gauge() != Gauge::dS()) fail("GaugeMismatch", "gauge_up expects a d/dS operator");
    if (!P.is_monic()) fail("NotMonic", "gauge_up expects a monic operator");
    const Int& p = P.prime();
    long n = P.degree();
    std::vector<LaurentPoly> out(static_cast<size_t>(n) + 1, LaurentPoly(p));
    for (long i = 0; i <= n; ++i) {
        LaurentPoly acc(p);
        for (long j = i; j <= n; ++j) {
            Int s = stirling_first(static_cast<unsigned>(j), static_cast<unsigned>(i));
            if (s == 0) continue;
            acc = acc + P.coeffs()[static_cast<size_t>(j)].shifted(n - j).scaled(Scalar(p, Rational(s)));
        }
        Scalar pl(p, rat_pow(Rational(p), static_cast<long>(l) * (n - i)));
        out[static_cast<size_t>(i)] = acc.scaled(pl);
    }
    return DiffOp(p, Gauge::plSdS(l), std::move(out));
}

DiffOp gauge_down(const DiffOp& Q) {
    unsigned l = 0;
    if (Q.gauge().kind == Gauge::Kind::PlSdS)
        l = Q.gauge().l;
    else if (Q.gauge() != Gauge::SdS())
        fail("GaugeMismatch", "gauge_down expects a p^l S d/dS operator");
    if (!Q.is_monic()) fail("NotMonic", "gauge_down expects a monic operator");
    const Int& p = Q.prime();
    long n = Q.degree();
    std::vector<LaurentPoly> out(static_cast<size_t>(n) + 1, LaurentPoly(p));
    for (long i = 0; i <= n; ++i) {
        LaurentPoly acc(p);
        for (long j = i; j <= n; ++j) {
            Int s = stirling_second(static_cast<unsigned>(j), static_cast<unsigned>(i));
            if (s == 0) continue;
            Scalar c = Scalar(p, Rational(s) * rat_pow(Rational(p), static_cast<long>(l) * (j - n)));
            acc = acc + Q.coeffs()[static_cast<size_t>(j)].scaled(c);
        }
        out[static_cast<size_t>(i)] = acc.shifted(i - n);
    }
    return DiffOp(p, Gauge::dS(), std::move(out));
}

std::pair<DiffOp, DiffOp> right_divmod(const DiffOp& P, const DiffOp& R) {
    if (P.gauge() != R.gauge()) fail("GaugeMismatch", "division across gauges");
    if (!R.is_monic()) fail("NotMonic", "right division requires a monic divisor");
    const Int& p = P.prime();
    long d = R.degree();
    DiffOp rem = P;
    std::vector<LaurentPoly> q(std::max<long>(P.degree() - d + 1, 1), LaurentPoly(p));
    while (rem.degree() >= d && !rem.is_zero()) {
        long e = rem.degree();
        LaurentPoly lead = rem.coeffs().back();
        if (lead.is_zero()) break;
        std::vector<LaurentPoly> mono(static_cast<size_t>(e - d) + 1, LaurentPoly(p));
        mono.back() = lead;
        DiffOp m(p, P.gauge(), std::move(mono));
        q[static_cast<size_t>(e - d)] = q[static_cast<size_t>(e - d)] + lead;
        rem = rem - m * R;
        if (rem.degree() >= e && !rem.is_zero() && !rem.coeffs().back().is_zero())
            fail("NoConvergence", "division failed to reduce degree");
    }
    return {DiffOp(p, P.gauge(), std::move(q)), rem};
}

namespace {

LaurentPoly window_truncate(const LaurentPoly& f, long W) {
    LaurentPoly out(f.prime());
    for (const auto& [e, c] : f.terms())
        if (std::abs(e) <= W) out.set_term(e, c);
    return out;
}

DiffOp window_truncate(const DiffOp& A, long W) {
    std::vector<LaurentPoly> c;
    c.reserve(A.coeffs().size());
    for (const auto& f : A.coeffs()) c.push_back(window_truncate(f, W));
    return DiffOp(A.prime(), A.gauge(), std::move(c));
}

/// Truncated multiplicative inverse of f at radius rho: requires a unique
/// Gauss-dominant monomial; series summed until the tail is below
/// p^{-extra} relative to |1/f|.
LaurentPoly truncated_inverse(const LaurentPoly& f, const Rational& rho, long W, const Rational& extra) {
    if (f.is_zero()) fail("NoConvergence", "inverting the zero coefficient");
    const Int& p = f.prime();
    Val norm = f.gauss_norm(rho);
    long dom_exp = 0;
    Scalar dom_coeff(p, Rational(0));
    int hits = 0;
    for (const auto& [e, c] : f.terms()) {
        Val t = c.valuation() * Val::from_exponent(Rational(e) * rho);
        if (t == norm) {
            ++hits;
            dom_exp = e;
            dom_coeff = c;
        }
    }
    if (hits != 1) fail("NoConvergence", "coefficient without a dominant monomial cannot be inverted");
    // f = m (1 + h), |h| < 1; 1/f = (sum (-h)^k) / m
    LaurentPoly minv = LaurentPoly::monomial(dom_coeff.inverse(), -dom_exp);
    LaurentPoly h = (f - LaurentPoly::monomial(dom_coeff, dom_exp)) * minv;
    h = window_truncate(h, W);
    if (h.is_zero()) return minv;
    Rational gap = h.gauss_norm(rho).exponent(); // > 0
    LaurentPoly acc(p, Scalar(p, Rational(1)));
    LaurentPoly pow(p, Scalar(p, Rational(1)));
    Rational gained(0);
    while (gained <= extra) {
        pow = window_truncate(pow * (-h), W);
        if (pow.is_zero()) break;
        acc = acc + pow;
        gained += gap;
    }
    return window_truncate(acc * minv, W);
}

} // namespace

SlopeFactorResult slope_factor(const DiffOp& P, const Val& threshold, long precision, const Rational& rho) {
    if (!P.is_monic()) fail("NotMonic", "slope_factor expects a monic operator");
    if (precision <= 0) fail("PreconditionViolated", "precision must be positive");
    Val dn = derivation_norm(P.gauge(), rho);
    if (!dn.abs_lt(threshold)) fail("PreconditionViolated", "derivation norm must be below the threshold");

    auto vals = P.commutative_vals(rho);
    if (width_at(vals, threshold.exponent()) != 0) fail("PolygonBoundaryRoot", "a root lies on the threshold sphere");

    NewtonPolygon poly = P.commutative_polygon(rho);
    SlopeSplit split = slope_split(poly, threshold);
    long d = static_cast<long>(split.lower.size());
    long n = P.degree();
    const Int& p = P.prime();

    if (d == 0) return {P, DiffOp::one(p, P.gauge()), Val::zero(), 0};
    if (d == n) return {DiffOp::one(p, P.gauge()), P, Val::zero(), 0};

    // Laurent window
    long span = 0;
    {
        long lo = 0, hi = 0;
        bool any = false;
        for (const auto& c : P.coeffs())
            for (const auto& [e, s] : c.terms()) {
                (void)s;
                if (!any) {
                    lo = hi = e;
                    any = true;
                } else {
                    lo = std::min(lo, e);
                    hi = std::max(hi, e);
                }
            }
        span = any ? hi - lo : 0;
    }
    long W = precision + n * std::max<long>(span, 1);
    // a modest quasi-inverse keeps the fixed-point contraction; the exact
    // residual certificate below is what guarantees the result
    Rational inv_extra(6);

    // Initial monic lower factor: normalized lower half of P.
    LaurentPoly gd_inv = truncated_inverse(P.coeffs()[static_cast<size_t>(d)], rho, W, inv_extra);
    std::vector<LaurentPoly> r0(static_cast<size_t>(d) + 1, LaurentPoly(p));
    for (long i = 0; i < d; ++i) r0[static_cast<size_t>(i)] = window_truncate(P.coeffs()[static_cast<size_t>(i)] * gd_inv, W);
    r0[static_cast<size_t>(d)] = LaurentPoly(p, Scalar(p, Rational(1)));
    DiffOp R(p, P.gauge(), std::move(r0));

    Val pnorm = P.sup_norm(rho);
    Val tol = pnorm * Val::from_exponent(Rational(precision));
    long max_iter = 64 * precision;

    LaurentPoly u(p);
    bool have_u = false;
    int stall = 0, refreshes = 0;
    Val prev_resid = Val::one();
    bool have_prev = false;
    for (long it = 0; it <= max_iter; ++it) {
        auto [q, e] = right_divmod(P, R);
        Val resid = e.sup_norm(rho);
        if (resid.abs_le(tol)) return {q, R, resid, it};
        if (have_prev && !resid.abs_lt(prev_resid)) {
            if (++stall >= 3) {
                if (++refreshes > 8) fail("NoConvergence", "residual stopped contracting");
                have_u = false;
                stall = 0;
            }
        } else {
            stall = 0;
        }
        prev_resid = resid;
        have_prev = true;
        if (!have_u) {
            u = truncated_inverse(q.coeffs()[0], rho, W, inv_extra);
            have_u = true;
        }
        DiffOp u_op(p, P.gauge(), {u});
        R = window_truncate(R + u_op * e, W);
        if (!R.is_monic() || R.degree() != d) fail("NoConvergence", "correction degenerated the candidate factor");
    }
    fail("NoConvergence", "no convergence after " + std::to_string(max_iter) + " iterations");
}

} // namespace padspec
