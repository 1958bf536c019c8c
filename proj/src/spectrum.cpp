#include "padspec/spectrum.hpp"

#include "padspec/error.hpp"

#include <algorithm>
#include <numeric>

namespace padspec {

namespace {

Rational omega_exp(const Int& p) { return Rational(1, p - 1); }

int scalar_cmp(const Scalar& a, const Scalar& b) {
    Scalar x = a.reduced(), y = b.reduced();
    if (x.m() != y.m()) return x.m() < y.m() ? -1 : 1;
    for (unsigned j = 0; j < x.m(); ++j) {
        if (x.coeffs()[j] != y.coeffs()[j]) return x.coeffs()[j] < y.coeffs()[j] ? -1 : 1;
    }
    return 0;
}

/// eq-(50)/(70) radius from delta(T(z) - a) at x_{0,p^{-rho}}.
std::pair<long, Val> eq70_radius(const Int& p, const Rational& rho, const Val& delta) {
    if (delta.is_zero()) return {0, Val::from_exponent(rho)};
    Rational qd = delta.exponent();
    Int lf = rat_floor(qd) + 1;
    long l = lf > 0 ? static_cast<long>(lf) : 0;
    Rational pl = rat_pow(Rational(p), l);
    Rational q = (Rational(l) + omega_exp(p) + pl * rho - qd) / pl;
    return {l, Val::from_exponent(q)};
}

} // namespace

SpectrumComponent SpectrumComponent::zp_translate(const PointDescriptor& z) {
    SpectrumComponent c;
    c.kind = Kind::ZpTranslate;
    c.z = z;
    c.z.center = zp_translate_canonical_center(z.center, z.type1, z.rho);
    c.base = Scalar(z.center.prime(), Rational(0));
    c.count = 1;
    return c;
}

SpectrumComponent SpectrumComponent::disk_train(const Scalar& base, const Rational& disk_rho) {
    SpectrumComponent c;
    c.kind = Kind::DiskTrain;
    c.base = zp_translate_canonical_center(base, false, disk_rho);
    c.disk_rho = disk_rho;
    Int K = rat_ceil(disk_rho);
    c.count = K > 0 ? int_pow(base.prime(), static_cast<unsigned long>(K)) : Int(1);
    c.z = PointDescriptor::of_type1(Scalar(base.prime(), Rational(0)));
    return c;
}

bool SpectrumComponent::operator==(const SpectrumComponent& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::ZpTranslate) {
        if (z.type1 != o.z.type1) return false;
        if (!z.type1 && z.rho != o.z.rho) return false;
        return z.center == o.z.center; // canonical forms
    }
    return disk_rho == o.disk_rho && base == o.base;
}

std::string SpectrumComponent::to_string() const {
    if (kind == Kind::ZpTranslate) return "{" + z.to_string() + "}+Zp";
    return "train(" + base.to_string() + ", count=" + count.str() + ", disk_rho=" + rat_to_string(disk_rho) + ")";
}

bool component_less(const SpectrumComponent& a, const SpectrumComponent& b) {
    if (a.kind != b.kind) return a.kind == SpectrumComponent::Kind::ZpTranslate;
    if (a.kind == SpectrumComponent::Kind::ZpTranslate) {
        if (a.z.type1 != b.z.type1) return !a.z.type1; // finite radius first
        if (!a.z.type1 && a.z.rho != b.z.rho) return a.z.rho < b.z.rho;
        return scalar_cmp(a.z.center, b.z.center) < 0;
    }
    if (a.disk_rho != b.disk_rho) return a.disk_rho < b.disk_rho;
    return scalar_cmp(a.base, b.base) < 0;
}

std::vector<Scalar> default_probes(const Int& p, unsigned level, const std::vector<Scalar>& extra) {
    std::vector<Scalar> probes;
    Int bound = int_pow(p, level);
    for (Int i = 0; i < bound; ++i) probes.emplace_back(p, Rational(i));
    for (const auto& s : extra) probes.push_back(s);
    std::sort(probes.begin(), probes.end(), [](const Scalar& a, const Scalar& b) { return scalar_cmp(a, b) < 0; });
    probes.erase(std::unique(probes.begin(), probes.end(), [](const Scalar& a, const Scalar& b) { return a == b; }),
                 probes.end());
    return probes;
}

namespace {

void sort_report(SpectrumReport& rep) {
    std::vector<std::size_t> idx(rep.components.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return component_less(rep.components[i], rep.components[j]); });
    std::vector<SpectrumComponent> comps;
    std::vector<long> masses;
    std::vector<std::size_t> inv(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        comps.push_back(rep.components[idx[k]]);
        masses.push_back(rep.masses[idx[k]]);
        inv[idx[k]] = k;
    }
    rep.components = std::move(comps);
    rep.masses = std::move(masses);
    for (auto& e : rep.radii_table) e.component = inv[e.component];
    std::sort(rep.radii_table.begin(), rep.radii_table.end(), [](const RadiiTableEntry& a, const RadiiTableEntry& b) {
        if (a.component != b.component) return a.component < b.component;
        return scalar_cmp(a.a, b.a) < 0;
    });
}

void fill_radii_table(SpectrumReport& rep, const std::vector<Scalar>& probes) {
    rep.radii_table.clear();
    for (std::size_t i = 0; i < rep.components.size(); ++i) {
        const auto& comp = rep.components[i];
        if (comp.kind != SpectrumComponent::Kind::ZpTranslate) continue;
        for (const auto& a : probes) {
            Val d = delta_point(comp.z.translated(-a));
            auto [l, R1] = eq70_radius(rep.p, rep.point_rho, d);
            rep.radii_table.push_back({i, a, d, l, R1});
        }
    }
}

/// Step-(6) cross-check: wherever the twisted polygon certifies small radii
/// (all comparisons strict), the eq-(70) predictions must reproduce them.
void verify_radii_table(const DiffOp& P, const SpectrumReport& rep, const std::vector<Scalar>& probes) {
    Rational om = omega_exp(rep.p);
    for (const auto& a : probes) {
        // exponent of r*omega/|mu| = om + rho - q_mu for each certified root
        std::vector<Rational> young;
        for (const auto& mu : P.twisted(a).commutative_polygon(rep.point_rho).root_norms())
            if (mu.abs_gt(Val::one())) young.push_back(om + rep.point_rho - mu.exponent());
        std::vector<Rational> predicted;
        for (const auto& e : rep.radii_table) {
            if (!(e.a == a)) continue;
            if (e.delta.abs_gt(Val::one()))
                for (long k = 0; k < rep.masses[e.component]; ++k) predicted.push_back(e.R1.exponent());
        }
        std::sort(young.begin(), young.end());
        std::sort(predicted.begin(), predicted.end());
        if (young != predicted)
            fail("RadiiMismatch", "eq-(70) prediction disagrees with the twisted polygon at probe " + a.to_string());
    }
}

} // namespace

SpectrumReport spectrum_SdS(const Int& p, const Rational& point_rho, const SpectrumOptions& opts) {
    SpectrumReport rep;
    rep.p = p;
    rep.point_rho = point_rho;
    rep.components.push_back(SpectrumComponent::zp_translate(PointDescriptor::of_type1(Scalar(p, Rational(0)))));
    rep.masses.push_back(1);
    fill_radii_table(rep, default_probes(p, opts.probe_level, opts.extra_probes));
    sort_report(rep);
    return rep;
}

SpectrumReport spectrum_regular_singular(const PointDescriptor& x, const std::vector<Scalar>& eigenvalues,
                                         const SpectrumOptions& opts) {
    if (x.type1) fail("UnsupportedPoint", "the working point must not be of type 1");
    if (eigenvalues.empty()) fail("PreconditionViolated", "at least one eigenvalue is required");
    const Int& p = eigenvalues.front().prime();
    SpectrumReport rep;
    rep.p = p;
    rep.point_rho = x.rho;

    Val vc = x.center.valuation();
    bool center_form = vc.is_zero() || !Val::from_exponent(x.rho).abs_lt(vc);
    auto add = [&](const SpectrumComponent& c) {
        for (std::size_t i = 0; i < rep.components.size(); ++i)
            if (rep.components[i] == c) {
                rep.masses[i] += 1;
                return;
            }
        rep.components.push_back(c);
        rep.masses.push_back(1);
    };

    if (center_form) {
        for (const auto& a : eigenvalues) add(SpectrumComponent::zp_translate(PointDescriptor::of_type1(a)));
        fill_radii_table(rep, default_probes(p, opts.probe_level, opts.extra_probes));
    } else {
        // x inside D(c,|c|)^- with c the descriptor's center
        Rational rho_rel = x.rho - vc.exponent();
        Rational phi = log_radius(p, rho_rel);
        Rational disk_rho = omega_exp(p) - phi;
        for (const auto& a : eigenvalues) add(SpectrumComponent::disk_train(a, disk_rho));
    }
    sort_report(rep);
    return rep;
}

ProjectedRoots project_roots(const DiffOp& P, const Rational& point_rho, const std::vector<Scalar>& probes) {
    if (!P.is_monic()) fail("NotMonic", "project_roots expects a monic polynomial");
    if (probes.empty()) fail("InsufficientProbes", "empty probe set");

    // per-probe multiset of |z - a|
    std::vector<std::vector<Val>> dist(probes.size());
    Val min_distance = Val::one(); // overwritten below
    bool first = true;
    for (std::size_t k = 0; k < probes.size(); ++k) {
        dist[k] = P.twisted(probes[k]).commutative_polygon(point_rho).root_norms();
        for (const auto& v : dist[k])
            if (first || v.abs_lt(min_distance)) {
                min_distance = v;
                first = false;
            }
    }

    auto erase_one = [](std::vector<Val>& vec, const Val& v) -> bool {
        for (auto it = vec.begin(); it != vec.end(); ++it)
            if (*it == v) {
                vec.erase(it);
                return true;
            }
        return false;
    };

    ProjectedRoots out;
    out.min_distance = min_distance;
    while (!dist[0].empty()) {
        // smallest remaining distance, first probe on ties
        std::size_t best_k = 0;
        Val best;
        bool have = false;
        for (std::size_t k = 0; k < probes.size(); ++k)
            for (const auto& v : dist[k])
                if (!have || v.abs_lt(best)) {
                    best = v;
                    best_k = k;
                    have = true;
                }
        long mult = static_cast<long>(std::count(dist[best_k].begin(), dist[best_k].end(), best));
        PointDescriptor z = best.is_zero() ? PointDescriptor::of_type1(probes[best_k])
                                           : PointDescriptor::of_type2(probes[best_k], best.exponent());
        for (std::size_t k = 0; k < probes.size(); ++k) {
            Val expected = best;
            if (k != best_k) {
                Val gap = (probes[best_k] - probes[k]).valuation();
                expected = gap.abs_gt(best) ? gap : best;
            }
            for (long c = 0; c < mult; ++c)
                if (!erase_one(dist[k], expected))
                    fail("InsufficientProbes",
                         "grouping inconsistent at probes " + probes[best_k].to_string() + " / " + probes[k].to_string());
        }
        out.groups.emplace_back(z, mult);
    }
    return out;
}

unsigned descent_level(const DiffOp& P, unsigned l_max) {
    unsigned best = l_max;
    for (const auto& c : P.coeffs())
        for (const auto& [e, s] : c.terms()) {
            (void)s;
            if (e == 0) continue;
            unsigned v = 0;
            Int n = e < 0 ? Int(-e) : Int(e);
            const Int& p = P.prime();
            while (v < best && n % p == 0) {
                n /= p;
                ++v;
            }
            best = std::min(best, v);
            if (best == 0) return 0;
        }
    return best;
}

namespace {

DiffOp descend_operator(const DiffOp& P, unsigned l) {
    const Int& p = P.prime();
    Int plI = int_pow(p, l);
    long pl = static_cast<long>(plI);
    std::vector<LaurentPoly> out;
    out.reserve(P.coeffs().size());
    for (const auto& c : P.coeffs()) {
        LaurentPoly f(p);
        for (const auto& [e, s] : c.terms()) {
            if (e % pl != 0) fail("HypothesisNotCertified", "coefficient exponents not divisible by p^l");
            f.set_term(e / pl, s);
        }
        out.push_back(f);
    }
    return DiffOp(p, Gauge::plSdS(l), std::move(out));
}

SpectrumReport report_from_groups(const Int& p, const Rational& point_rho, const ProjectedRoots& pr) {
    SpectrumReport rep;
    rep.p = p;
    rep.point_rho = point_rho;
    for (const auto& [z, mult] : pr.groups) {
        SpectrumComponent c = SpectrumComponent::zp_translate(z);
        bool merged = false;
        for (std::size_t i = 0; i < rep.components.size(); ++i)
            if (rep.components[i] == c) {
                rep.masses[i] += mult;
                merged = true;
                break;
            }
        if (!merged) {
            rep.components.push_back(c);
            rep.masses.push_back(mult);
        }
    }
    return rep;
}

} // namespace

SpectrumReport spectrum_small(const DiffOp& P, const Rational& point_rho, const SpectrumOptions& opts) {
    if (P.degree() < 1) fail("PreconditionViolated", "the operator must have positive degree");
    if (!P.is_monic()) fail("NotMonic", "spectrum_small expects a monic operator");
    if (P.has_constant_coeffs())
        fail("HypothesisNotCertified",
             "all commutative roots are constants, so min r_k(pi(z)) = 0 <= ||d||; use the regular-singular interface");
    auto probes = default_probes(P.prime(), opts.probe_level, opts.extra_probes);
    ProjectedRoots pr = project_roots(P, point_rho, probes);
    Val dn = derivation_norm(P.gauge(), point_rho);
    if (!pr.min_distance.abs_gt(dn))
        fail("HypothesisNotCertified", "probe proxy failed: min |z - a| = " + pr.min_distance.to_string() +
                                           " is not above ||d|| = " + dn.to_string());
    SpectrumReport rep = report_from_groups(P.prime(), point_rho, pr);
    if (P.gauge() == Gauge::SdS()) fill_radii_table(rep, probes);
    sort_report(rep);
    return rep;
}

SpectrumReport spectrum_general(const DiffOp& P, const Rational& point_rho, const SpectrumOptions& opts) {
    if (P.gauge() != Gauge::SdS()) fail("GaugeMismatch", "spectrum_general expects the S d/dS gauge");
    if (P.degree() < 1) fail("PreconditionViolated", "the operator must have positive degree");
    if (!P.is_monic()) fail("NotMonic", "spectrum_general expects a monic operator");
    const Int& p = P.prime();
    auto probes = default_probes(p, opts.probe_level, opts.extra_probes);

    // rank-one constant: delta is exact, eq-(50) closes the case
    if (P.degree() == 1 && P.coeffs()[0].is_constant()) {
        Scalar root = -P.coeffs()[0].constant_value();
        SpectrumReport rep;
        rep.p = p;
        rep.point_rho = point_rho;
        rep.components.push_back(SpectrumComponent::zp_translate(PointDescriptor::of_type1(root)));
        rep.masses.push_back(1);
        fill_radii_table(rep, probes);
        sort_report(rep);
        verify_radii_table(P, rep, probes);
        return rep;
    }
    if (P.has_constant_coeffs())
        fail("HypothesisNotCertified",
             "constant-coefficient operator of rank >= 2: roots are constants (min r_k(pi(z)) = 0); "
             "use the regular-singular interface with its eigenvalues");

    auto norms = P.commutative_polygon(point_rho).root_norms();
    long n_small = 0;
    for (const auto& z : norms)
        if (z.abs_gt(Val::one())) ++n_small;
    SpectrumReport rep;
    if (n_small == static_cast<long>(norms.size())) {
        rep = spectrum_small(P, point_rho, opts);
    } else if (n_small > 0) {
        fail("SolvableMixedWithNonSolvable", "operator mixes certified-small slopes with the rest; factor first");
    } else {
        unsigned l = descent_level(P, opts.l_max);
        DiffOp N = descend_operator(P, l);
        Rational rho_y = point_rho * rat_pow(Rational(p), l);
        SpectrumReport below = spectrum_small(N, rho_y, opts);
        // lift: union over i < p^l of (components + i) collapses to the same
        // canonical Z_p-translates at the original point
        rep.p = p;
        rep.point_rho = point_rho;
        rep.components = below.components;
        rep.masses = below.masses;
        fill_radii_table(rep, probes);
        sort_report(rep);
    }
    verify_radii_table(P, rep, probes);
    return rep;
}

SpectrumReport spectrum_union(const SpectrumReport& a, const SpectrumReport& b) {
    if (a.p != b.p || a.point_rho != b.point_rho) fail("PointMismatch", "union requires a common working point");
    SpectrumReport rep;
    rep.p = a.p;
    rep.point_rho = a.point_rho;
    auto add = [&](const SpectrumComponent& c, long mass) {
        for (std::size_t i = 0; i < rep.components.size(); ++i)
            if (rep.components[i] == c) {
                rep.masses[i] += mass;
                return;
            }
        rep.components.push_back(c);
        rep.masses.push_back(mass);
    };
    for (std::size_t i = 0; i < a.components.size(); ++i) add(a.components[i], a.masses[i]);
    for (std::size_t i = 0; i < b.components.size(); ++i) add(b.components[i], b.masses[i]);
    // rebuild the table over the union of the probe shifts seen on either side
    std::vector<Scalar> probes;
    for (const auto& e : a.radii_table) probes.push_back(e.a);
    for (const auto& e : b.radii_table) probes.push_back(e.a);
    std::sort(probes.begin(), probes.end(), [](const Scalar& x, const Scalar& y) { return scalar_cmp(x, y) < 0; });
    probes.erase(std::unique(probes.begin(), probes.end(), [](const Scalar& x, const Scalar& y) { return x == y; }),
                 probes.end());
    fill_radii_table(rep, probes);
    sort_report(rep);
    return rep;
}

SpectrumReport spectrum_full(const DiffOp& P, const Rational& point_rho, const SpectrumOptions& opts) {
    if (P.gauge() != Gauge::SdS()) fail("GaugeMismatch", "the spectrum front-end expects the S d/dS gauge");
    if (!P.is_monic()) fail("NotMonic", "the spectrum front-end expects a monic operator");
    if (P.degree() < 1) fail("PreconditionViolated", "the operator must have positive degree");
    auto norms = P.commutative_polygon(point_rho).root_norms();
    bool any_small = false, any_rest = false;
    Rational max_upper_q;
    bool have_upper = false;
    for (const auto& z : norms) {
        if (z.abs_gt(Val::one())) {
            any_small = true;
            if (!have_upper || z.exponent() > max_upper_q) {
                max_upper_q = z.exponent();
                have_upper = true;
            }
        } else {
            any_rest = true;
        }
    }
    if (any_small && any_rest && P.degree() >= 2) {
        Val threshold = Val::from_exponent(max_upper_q / Rational(2));
        SlopeFactorResult f = slope_factor(P, threshold, opts.precision, point_rho);
        SpectrumReport upper = spectrum_full(f.Q, point_rho, opts);
        SpectrumReport lower = spectrum_full(f.R, point_rho, opts);
        return spectrum_union(upper, lower);
    }
    return spectrum_general(P, point_rho, opts);
}

} // namespace padspec
