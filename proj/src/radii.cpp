#include "padspec/radii.hpp"

#include "padspec/error.hpp"

#include <algorithm>

namespace padspec {

namespace {

Rational omega_exp(const Int& p) { return Rational(1, p - 1); }

RadiusFlag classify(const Rational& q, const Int& p, const Rational& rho, const std::optional<unsigned>& level) {
    // solvable: R = r (true) <-> q_scale = -l; boundary: R = omega r <-> q_scale = omega_q - l
    Rational q_solv = level ? Rational(-static_cast<long>(*level)) : rho;
    Rational q_bnd = level ? omega_exp(p) - Rational(static_cast<long>(*level)) : omega_exp(p) + rho;
    if (q == q_solv) return RadiusFlag::Solvable;
    if (q == q_bnd) return RadiusFlag::Boundary;
    if (q > q_bnd) return RadiusFlag::Small;
    return RadiusFlag::Intermediate;
}

void sort_and_flag(RadiiReport& rep) {
    std::sort(rep.radii.begin(), rep.radii.end(), [](const RadiusEntry& a, const RadiusEntry& b) {
        if (a.value.is_zero() || b.value.is_zero()) return b.value.is_zero() ? false : a.value.is_zero();
        return a.value.exponent() > b.value.exponent();
    });
    for (auto& e : rep.radii) {
        if (e.value.is_zero()) fail("PreconditionViolated", "a radius of convergence cannot be zero");
        e.flag = classify(e.value.exponent(), rep.p, rep.point_rho, rep.gauge_level);
    }
}

} // namespace

std::string flag_to_string(RadiusFlag f) {
    switch (f) {
        case RadiusFlag::Small: return "small";
        case RadiusFlag::Boundary: return "boundary";
        case RadiusFlag::Intermediate: return "intermediate";
        case RadiusFlag::Solvable: return "solvable";
    }
    return "?";
}

bool RadiiReport::pure() const {
    for (const auto& e : radii)
        if (e.value != radii.front().value) return false;
    return true;
}

RadiiReport radii_from_polygon(const DiffOp& P, const Rational& point_rho) {
    if (!P.is_monic()) fail("NotMonic", "radii need a monic operator");
    RadiiReport rep;
    rep.p = P.prime();
    rep.point_rho = point_rho;
    switch (P.gauge().kind) {
        case Gauge::Kind::DdS: rep.gauge_level.reset(); break;
        case Gauge::Kind::SdS: rep.gauge_level = 0u; break;
        case Gauge::Kind::PlSdS: rep.gauge_level = P.gauge().l; break;
    }
    Val dn = derivation_norm(P.gauge(), point_rho);
    Val om = omega(P.prime());
    for (const auto& z : P.commutative_polygon(point_rho).root_norms()) {
        Val denom = z.abs_gt(dn) ? z : dn;
        rep.radii.push_back({om / denom, RadiusFlag::Small});
    }
    sort_and_flag(rep);
    return rep;
}

RadiiReport radii_young(const DiffOp& P, const Rational& point_rho) {
    if (P.gauge() != Gauge::dS()) fail("GaugeMismatch", "radii_young expects a d/dS operator");
    return radii_from_polygon(P, point_rho);
}

RadiiReport radii_gauge_rescale(const RadiiReport& report, unsigned l, RescaleDirection dir) {
    RadiiReport rep = report;
    Rational shift = Rational(l) + report.point_rho;
    if (dir == RescaleDirection::ToDdS) {
        if (report.is_true_scale() || *report.gauge_level != l)
            fail("GaugeMismatch", "report is not in the p^l S d/dS scale for this l");
        rep.gauge_level.reset();
        for (auto& e : rep.radii) e.value = e.value * Val::from_exponent(shift);
    } else {
        if (!report.is_true_scale()) fail("GaugeMismatch", "report is not in the true scale");
        rep.gauge_level = l;
        for (auto& e : rep.radii) e.value = e.value / Val::from_exponent(shift);
    }
    sort_and_flag(rep);
    return rep;
}

RadiiReport radii_frobenius_push(const RadiiReport& report) {
    if (!report.is_true_scale()) fail("GaugeMismatch", "push-forward expects true-scale radii");
    const Int& p = report.p;
    Rational om = omega_exp(p);
    Rational rho = report.point_rho;
    RadiiReport out;
    out.p = p;
    out.point_rho = rho * Rational(p);
    out.gauge_level.reset();
    long copies = static_cast<long>(p);
    for (const auto& e : report.radii) {
        Rational q = e.value.exponent();
        if (q == om + rho) out.boundary_ambiguity = true;
        if (q < om + rho) {
            // R > omega r: {R^p} + (p-1) copies of omega^p r^p
            out.radii.push_back({Val::from_exponent(q * Rational(p)), RadiusFlag::Small});
            Rational qb = om * Rational(p) + rho * Rational(p);
            for (long k = 0; k + 1 < copies; ++k) out.radii.push_back({Val::from_exponent(qb), RadiusFlag::Small});
        } else {
            // R <= omega r: p copies of |p| r^{p-1} R
            Rational qb = Rational(1) + rho * Rational(p - 1) + q;
            for (long k = 0; k < copies; ++k) out.radii.push_back({Val::from_exponent(qb), RadiusFlag::Small});
        }
    }
    sort_and_flag(out);
    return out;
}

RadiiReport radii_frobenius_push_iter(const RadiiReport& report, unsigned l) {
    if (!report.is_true_scale()) fail("GaugeMismatch", "push-forward expects true-scale radii");
    if (l == 0) fail("PreconditionViolated", "push iteration level must be positive");
    if (!report.pure()) fail("PurityViolated", "input radii are not pure");
    const Int& p = report.p;
    Rational om = omega_exp(p);
    Rational rho = report.point_rho;
    Rational q1 = report.radii.front().value.exponent();
    Rational pl_minus = rat_pow(Rational(p), static_cast<long>(l) - 1);
    Rational pl = pl_minus * Rational(p);
    // omega^{1/p^{l-1}} r <= R_1 <= omega^{1/p^l} r
    if (!(q1 <= om / pl_minus + rho && q1 >= om / pl + rho))
        fail("PurityViolated", "R_1 outside the omega bracket for level " + std::to_string(l));
    long n = report.rank();
    RadiiReport out;
    out.p = p;
    out.point_rho = rho * pl;
    out.gauge_level.reset();
    Rational base = om + rho * pl;
    for (unsigned i = 2; i <= l; ++i) {
        long count = n * static_cast<long>(p - 1) * static_cast<long>(int_pow(p, i - 1));
        Rational q = Rational(i) + base;
        for (long k = 0; k < count; ++k) out.radii.push_back({Val::from_exponent(q), RadiusFlag::Small});
    }
    for (long k = 0; k < n * static_cast<long>(p - 1); ++k)
        out.radii.push_back({Val::from_exponent(Rational(1) + base), RadiusFlag::Small});
    for (long k = 0; k < n; ++k) out.radii.push_back({Val::from_exponent(q1 * pl), RadiusFlag::Small});
    sort_and_flag(out);
    return out;
}

Val rank_one_radius(const Scalar& a, const Rational& point_rho) {
    const Int& p = a.prime();
    Val d = a.delta();
    if (d.is_zero()) return Val::from_exponent(point_rho); // a in Z_p: solvable
    Rational qd = d.exponent();
    Int lfloor = rat_floor(qd) + 1;
    long l = lfloor > 0 ? static_cast<long>(lfloor) : 0;
    Rational pl = rat_pow(Rational(p), l);
    Rational q = (Rational(l) + omega_exp(p) + pl * point_rho - qd) / pl;
    return Val::from_exponent(q);
}

SpectralNormBound spectral_norm_from_radius(const RadiiReport& report, const Gauge& gauge) {
    if (report.radii.empty()) fail("PreconditionViolated", "empty radii report");
    // R_1 in the gauge scale
    Rational q1 = report.radii.front().value.exponent();
    if (report.is_true_scale()) {
        if (gauge.kind != Gauge::Kind::DdS) q1 = q1 - Rational(gauge.level()) - report.point_rho;
    } else {
        if (gauge.kind == Gauge::Kind::DdS)
            q1 = q1 + Rational(*report.gauge_level) + report.point_rho;
        else if (*report.gauge_level != gauge.level())
            fail("GaugeMismatch", "report scale does not match the requested gauge");
    }
    Val nsp = omega(report.p) / Val::from_exponent(q1);
    Val dn = derivation_norm(gauge, report.point_rho);
    if (nsp.abs_gt(dn)) return {true, nsp};
    return {false, dn};
}

} // namespace padspec
