#include "padspec/json_io.hpp"

#include "padspec/error.hpp"

#include <algorithm>
#include <limits>

namespace padspec {

namespace {

[[noreturn]] void parse_fail(const std::string& detail) { fail("ParseError", detail); }

Rational rational_or_fail(const std::string& s, const std::string& what) {
    auto r = rat_from_string(s);
    if (!r) parse_fail("malformed rational in " + what + ": '" + s + "'");
    return *r;
}

bool is_prime_int(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
    if (j.is_string()) return rational_or_fail(j.get<std::string>(), "rational");
    parse_fail("expected a rational (string or integer)");
}

Scalar parse_scalar(const json& j, const Int& p) {
    if (j.is_number_integer()) return Scalar(p, Rational(Int(j.get<long long>())));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto star = s.find("*p^(");
        std::string upart, epart;
        if (star != std::string::npos) {
            upart = s.substr(0, star);
            epart = s.substr(star + 4);
        } else if (s.rfind("p^(", 0) == 0) {
            upart = "1";
            epart = s.substr(3);
        } else {
            return Scalar(p, rational_or_fail(s, "scalar"));
        }
        if (epart.empty() || epart.back() != ')') parse_fail("malformed scalar shorthand: '" + s + "'");
        epart.pop_back();
        Rational u = (upart == "u") ? Rational(1) : rational_or_fail(upart, "scalar unit");
        Rational e = rational_or_fail(epart, "scalar exponent");
        return Scalar::ramified(p, u, e);
    }
    if (j.is_object()) {
        if (!j.contains("m") || !j.contains("coeffs")) parse_fail("scalar object needs 'm' and 'coeffs'");
        unsigned m = j.at("m").get<unsigned>();
        if (m == 0 || m > 64) parse_fail("scalar ramification index out of range");
        std::vector<Rational> c;
        for (const auto& e : j.at("coeffs")) c.push_back(parse_rational(e));
        if (c.size() > m) parse_fail("scalar has more coefficients than its ramification index");
        return Scalar(p, m, std::move(c));
    }
    parse_fail("expected a scalar");
}

LaurentPoly parse_laurent(const json& j, const Int& p) {
    if (!j.is_array()) {
        // allow a bare scalar meaning a constant
        return LaurentPoly(p, parse_scalar(j, p));
    }
    LaurentPoly f(p);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) parse_fail("laurent term must be [exponent, scalar]");
        Rational e = parse_rational(term[0]);
        if (!is_integer(e)) parse_fail("laurent exponent must be an integer");
        long ei = static_cast<long>(rat_num(e));
        f.set_term(ei, f.coeff(ei) + parse_scalar(term[1], p));
    }
    return f;
}

Gauge parse_gauge(const json& j) {
    if (!j.is_object() || !j.contains("type")) parse_fail("gauge needs a 'type'");
    std::string t = j.at("type").get<std::string>();
    if (t == "dS") return Gauge::dS();
    if (t == "SdS") return Gauge::SdS();
    if (t == "plSdS") {
        if (!j.contains("l")) parse_fail("plSdS gauge needs 'l'");
        return Gauge::plSdS(j.at("l").get<unsigned>());
    }
    parse_fail("unknown gauge type '" + t + "'");
}

DiffOp parse_operator(const json& j, const Int& p) {
    if (!j.is_object() || !j.contains("gauge") || !j.contains("coeffs")) parse_fail("operator needs 'gauge' and 'coeffs'");
    Gauge g = parse_gauge(j.at("gauge"));
    std::vector<LaurentPoly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_laurent(c, p));
    if (coeffs.empty()) parse_fail("operator needs at least one coefficient");
    return DiffOp(p, g, std::move(coeffs));
}

PointDescriptor parse_point(const json& j, const Int& p) {
    if (!j.is_object() || !j.contains("center") || !j.contains("rho")) parse_fail("point needs 'center' and 'rho'");
    Scalar c = parse_scalar(j.at("center"), p);
    const json& r = j.at("rho");
    if (r.is_string() && r.get<std::string>() == "inf") return PointDescriptor::of_type1(c);
    return PointDescriptor::of_type2(c, parse_rational(r));
}

Val parse_val(const json& j, const Int& p) {
    (void)p;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "0") return Val::zero();
        if (s.rfind("p^(", 0) == 0 && s.back() == ')')
            return Val::from_exponent(-rational_or_fail(s.substr(3, s.size() - 4), "value exponent"));
        // plain rational: interpret as the exponent q
        return Val::from_exponent(rational_or_fail(s, "value exponent"));
    }
    if (j.is_number_integer()) return Val::from_exponent(Rational(Int(j.get<long long>())));
    parse_fail("expected an absolute value");
}

json val_to_json(const Val& v) { return v.to_string(); }

json scalar_to_json(const Scalar& s) {
    Scalar r = s.reduced();
    if (r.is_rational()) return rat_to_string(r.rational_part());
    // single ramified term: shorthand
    unsigned nonzero = 0, jpos = 0;
    for (unsigned j = 0; j < r.m(); ++j)
        if (r.coeffs()[j] != 0) {
            ++nonzero;
            jpos = j;
        }
    if (nonzero == 1)
        return rat_to_string(r.coeffs()[jpos]) + "*p^(" + rat_to_string(Rational(jpos, r.m())) + ")";
    json out = json::object();
    out["m"] = r.m();
    json arr = json::array();
    for (const auto& c : r.coeffs()) arr.push_back(rat_to_string(c));
    out["coeffs"] = arr;
    return out;
}

json laurent_to_json(const LaurentPoly& f) {
    json arr = json::array();
    for (const auto& [e, c] : f.terms()) arr.push_back(json::array({rat_to_string(Rational(e)), scalar_to_json(c)}));
    return arr;
}

json gauge_to_json(const Gauge& g) {
    json out = json::object();
    switch (g.kind) {
        case Gauge::Kind::DdS: out["type"] = "dS"; break;
        case Gauge::Kind::SdS: out["type"] = "SdS"; break;
        case Gauge::Kind::PlSdS:
            out["type"] = "plSdS";
            out["l"] = g.l;
            break;
    }
    return out;
}

json operator_to_json(const DiffOp& P) {
    json out = json::object();
    out["gauge"] = gauge_to_json(P.gauge());
    json arr = json::array();
    for (const auto& c : P.coeffs()) arr.push_back(laurent_to_json(c));
    out["coeffs"] = arr;
    return out;
}

json point_to_json(const PointDescriptor& x) {
    json out = json::object();
    out["center"] = scalar_to_json(x.center);
    out["rho"] = x.type1 ? json("inf") : json(rat_to_string(x.rho));
    return out;
}

json radii_report_to_json(const RadiiReport& rep) {
    json out = json::object();
    out["rho"] = rat_to_string(rep.point_rho);
    out["scale"] = rep.is_true_scale() ? json("dS") : json("plSdS:" + std::to_string(*rep.gauge_level));
    json arr = json::array();
    for (const auto& e : rep.radii) {
        json item = json::object();
        item["q"] = e.value.is_zero() ? "inf" : rat_to_string(e.value.exponent());
        item["flag"] = flag_to_string(e.flag);
        arr.push_back(item);
    }
    out["radii"] = arr;
    out["boundary_ambiguity"] = rep.boundary_ambiguity;
    return out;
}

json spectrum_report_to_json(const SpectrumReport& rep) {
    json out = json::object();
    out["rho"] = rat_to_string(rep.point_rho);
    json comps = json::array();
    for (const auto& c : rep.components) {
        json item = json::object();
        if (c.kind == SpectrumComponent::Kind::ZpTranslate) {
            item["type"] = "zp_translate";
            item["z"] = point_to_json(c.z);
        } else {
            item["type"] = "disk_train";
            item["base"] = scalar_to_json(c.base);
            if (c.count > Int(std::numeric_limits<long long>::max()))
                fail("PreconditionViolated", "disk count too large to report");
            item["count"] = static_cast<long long>(c.count);
            item["disk_rho"] = rat_to_string(c.disk_rho);
        }
        comps.push_back(item);
    }
    out["components"] = comps;
    json dec = json::array();
    for (std::size_t i = 0; i < rep.masses.size(); ++i) {
        json item = json::object();
        item["component"] = i;
        item["mass"] = rep.masses[i];
        dec.push_back(item);
    }
    out["decomposition"] = dec;
    json table = json::array();
    for (const auto& e : rep.radii_table) {
        json item = json::object();
        item["component"] = e.component;
        item["a"] = scalar_to_json(e.a);
        item["delta"] = val_to_json(e.delta);
        item["l"] = e.l;
        item["R1"] = val_to_json(e.R1);
        table.push_back(item);
    }
    out["radii_table"] = table;
    return out;
}

namespace {

SpectrumOptions parse_options(const json& job, const Int& p) {
    SpectrumOptions opts;
    if (job.contains("options")) {
        const json& o = job.at("options");
        if (!o.is_object()) parse_fail("'options' must be an object");
        if (o.contains("probe_level")) opts.probe_level = o.at("probe_level").get<unsigned>();
        if (o.contains("precision")) opts.precision = o.at("precision").get<long>();
        if (o.contains("lmax")) opts.l_max = o.at("lmax").get<unsigned>();
        if (o.contains("probes"))
            for (const auto& s : o.at("probes")) opts.extra_probes.push_back(parse_scalar(s, p));
        if (opts.probe_level > 12) parse_fail("probe_level out of range");
        if (opts.precision < 1 || opts.precision > 4096) parse_fail("precision out of range");
        if (opts.l_max > 24) parse_fail("lmax out of range");
    }
    return opts;
}

PointDescriptor required_point(const json& job, const Int& p) {
    if (!job.contains("point")) parse_fail("this command needs a 'point'");
    return parse_point(job.at("point"), p);
}

Rational working_rho(const PointDescriptor& x) {
    if (x.type1) fail("UnsupportedPoint", "the working point must not be of type 1");
    // the library works at x_{0,r}; off-center descriptors are only for regsing
    if (!x.center.is_zero() && x.center.valuation().abs_gt(x.radius()))
        fail("UnsupportedPoint", "working point must be of the form x_{0,r}; substitute S -> S + c first");
    return x.rho;
}

json cmd_delta(const json& job, const Int& p) {
    const json& payload = job.at("payload");
    if (!payload.contains("a")) parse_fail("delta needs payload.a");
    Scalar a = parse_scalar(payload.at("a"), p);
    json out = json::object();
    out["delta"] = val_to_json(a.delta());
    return out;
}

json cmd_map(const json& job, const Int& p) {
    const json& payload = job.at("payload");
    if (!payload.contains("map")) parse_fail("map needs payload.map");
    std::string kind = payload.at("map").get<std::string>();
    json out = json::object();
    if (kind == "frobenius" || kind == "power") {
        PointDescriptor x = payload.contains("point") ? parse_point(payload.at("point"), p) : required_point(job, p);
        MapImage img = kind == "frobenius" ? frobenius_image(x) : tame_power_image(x, payload.at("n").get<long>());
        out["point"] = point_to_json(img.point);
        if (img.degree > Int(std::numeric_limits<long long>::max())) fail("PreconditionViolated", "degree too large");
        out["degree"] = static_cast<long long>(img.degree);
        return out;
    }
    if (kind == "log_radius") {
        Rational rr = parse_rational(payload.at("rho_rel"));
        out["exponent"] = rat_to_string(log_radius(p, rr));
        LogDegree d = log_degree(p, rr);
        if (d.degree > Int(std::numeric_limits<long long>::max())) fail("PreconditionViolated", "degree too large");
        out["degree"] = static_cast<long long>(d.degree);
        return out;
    }
    parse_fail("unknown map '" + kind + "'");
}

json cmd_radii(const json& job, const Int& p) {
    const json& payload = job.at("payload");
    DiffOp P = parse_operator(payload.at("operator"), p);
    PointDescriptor x = required_point(job, p);
    Rational rho = working_rho(x);
    RadiiReport rep = radii_from_polygon(P, rho);
    if (!rep.is_true_scale()) rep = radii_gauge_rescale(rep, *rep.gauge_level, RescaleDirection::ToDdS);
    if (payload.contains("push_iterations")) {
        long k = payload.at("push_iterations").get<long>();
        if (k < 0 || k > 16) parse_fail("push_iterations out of range");
        for (long i = 0; i < k; ++i) rep = radii_frobenius_push(rep);
    }
    return radii_report_to_json(rep);
}

json cmd_factor(const json& job, const Int& p) {
    const json& payload = job.at("payload");
    DiffOp P = parse_operator(payload.at("operator"), p);
    PointDescriptor x = required_point(job, p);
    Rational rho = working_rho(x);
    if (!payload.contains("threshold")) parse_fail("factor needs payload.threshold");
    Val threshold = parse_val(payload.at("threshold"), p);
    SpectrumOptions opts = parse_options(job, p);
    SlopeFactorResult res = slope_factor(P, threshold, opts.precision, rho);
    json out = json::object();
    out["Q"] = operator_to_json(res.Q);
    out["R"] = operator_to_json(res.R);
    out["residual"] = val_to_json(res.residual);
    out["iterations"] = res.iterations;
    return out;
}

json cmd_regsing(const json& job, const Int& p) {
    const json& payload = job.at("payload");
    if (!payload.contains("eigenvalues")) parse_fail("regsing needs payload.eigenvalues");
    std::vector<Scalar> eigen;
    for (const auto& e : payload.at("eigenvalues")) eigen.push_back(parse_scalar(e, p));
    PointDescriptor x = required_point(job, p);
    SpectrumOptions opts = parse_options(job, p);
    return spectrum_report_to_json(spectrum_regular_singular(x, eigen, opts));
}

json cmd_spectrum(const json& job, const Int& p) {
    const json& payload = job.at("payload");
    DiffOp P = parse_operator(payload.at("operator"), p);
    PointDescriptor x = required_point(job, p);
    Rational rho = working_rho(x);
    SpectrumOptions opts = parse_options(job, p);
    return spectrum_report_to_json(spectrum_full(P, rho, opts));
}

json cmd_oracle(const json& job, const Int& p) {
    const json& payload = job.at("payload");
    if (!payload.contains("roots")) parse_fail("oracle needs payload.roots");
    PointDescriptor x = required_point(job, p);
    Rational rho = working_rho(x);
    LaurentPoly one(p, Scalar(p, Rational(1)));
    std::vector<LaurentPoly> prod{one};
    std::vector<Rational> expected;
    for (const auto& r : payload.at("roots")) {
        Scalar c = parse_scalar(r.at("coeff"), p);
        Rational e = parse_rational(r.at("exponent"));
        if (!is_integer(e)) parse_fail("root exponent must be an integer");
        long ei = static_cast<long>(rat_num(e));
        LaurentPoly root = LaurentPoly::monomial(c, ei);
        if (root.is_zero()) parse_fail("oracle roots must be nonzero monomials");
        Val nv = root.gauss_norm(rho);
        expected.push_back(nv.exponent());
        // multiply (T - root) into prod
        std::vector<LaurentPoly> next(prod.size() + 1, LaurentPoly(p));
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] = next[i + 1] + prod[i];
            next[i] = next[i] - prod[i] * root;
        }
        prod = std::move(next);
    }
    std::vector<std::pair<long, Val>> vals;
    for (std::size_t i = 0; i < prod.size(); ++i) vals.emplace_back(static_cast<long>(i), prod[i].gauss_norm(rho));
    auto norms = NewtonPolygon::build(vals).root_norms();
    // report root-norm exponents, largest exponent (smallest root) first
    std::vector<Rational> recovered;
    for (const auto& v : norms) recovered.push_back(v.exponent());
    std::sort(expected.begin(), expected.end(), std::greater<Rational>());
    std::sort(recovered.begin(), recovered.end(), std::greater<Rational>());
    json out = json::object();
    json je = json::array(), jr = json::array();
    for (const auto& q : expected) je.push_back(rat_to_string(q));
    for (const auto& q : recovered) jr.push_back(rat_to_string(q));
    out["expected"] = je;
    out["recovered"] = jr;
    out["match"] = (expected == recovered);
    return out;
}

} // namespace

json run_job(const json& job) {
    if (!job.is_object()) parse_fail("job must be an object");
    if (!job.contains("p")) parse_fail("job needs 'p'");
    Int p;
    if (job.at("p").is_number_integer())
        p = Int(job.at("p").get<long long>());
    else if (job.at("p").is_string())
        p = Int(job.at("p").get<std::string>());
    else
        parse_fail("'p' must be an integer");
    if (!is_prime_int(p)) parse_fail("'p' must be prime");
    if (!job.contains("command")) parse_fail("job needs 'command'");
    std::string cmd = job.at("command").get<std::string>();
    if (!job.contains("payload")) parse_fail("job needs 'payload'");

    if (cmd == "delta") return cmd_delta(job, p);
    if (cmd == "map") return cmd_map(job, p);
    if (cmd == "radii") return cmd_radii(job, p);
    if (cmd == "factor") return cmd_factor(job, p);
    if (cmd == "regsing") return cmd_regsing(job, p);
    if (cmd == "spectrum") return cmd_spectrum(job, p);
    if (cmd == "oracle") return cmd_oracle(job, p);
    parse_fail("unknown command '" + cmd + "'");
}

std::string run_job_string(const std::string& input, bool pretty, int& exit_code) {
    json out;
    try {
        json job = json::parse(input);
        out = run_job(job);
        exit_code = 0;
    } catch (const json::exception& e) {
        out = json::object();
        out["error"] = {{"kind", "ParseError"}, {"detail", e.what()}};
        exit_code = 2;
    } catch (const Error& e) {
        out = json::object();
        out["error"] = {{"kind", e.kind()}, {"detail", e.what()}};
        if (e.kind() == "ParseError")
            exit_code = 2;
        else if (e.kind() == "HypothesisNotCertified")
            exit_code = 4;
        else
            exit_code = 3;
    } catch (const std::exception& e) {
        out = json::object();
        out["error"] = {{"kind", "InternalError"}, {"detail", e.what()}};
        exit_code = 3;
    }
    return pretty ? out.dump(2) + "\n" : out.dump() + "\n";
}

} // namespace padspec
