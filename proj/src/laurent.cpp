#include "padspec/laurent.hpp"

#include "padspec/error.hpp"

namespace padspec {

std::string Gauge::to_string() const {
    switch (kind) {
        case Kind::DdS: return "d/dS";
        case Kind::SdS: return "S d/dS";
        case Kind::PlSdS: return "p^" + std::to_string(l) + " S d/dS";
    }
    return "?";
}

Val derivation_norm(const Gauge& g, const Rational& rho) {
    switch (g.kind) {
        case Gauge::Kind::DdS: return Val::from_exponent(-rho);
        case Gauge::Kind::SdS: return Val::one();
        case Gauge::Kind::PlSdS: return Val::from_exponent(Rational(g.l));
    }
    return Val::one();
}

LaurentPoly::LaurentPoly(const Int& p, const Scalar& constant) : p_(p) {
    set_term(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, long exponent) {
    LaurentPoly f(c.prime());
    f.set_term(exponent, c);
    return f;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Scalar LaurentPoly::constant_value() const { return coeff(0); }

void LaurentPoly::set_term(long exponent, const Scalar& c) {
    if (c.is_zero())
        terms_.erase(exponent);
    else
        terms_[exponent] = c.reduced();
}

Scalar LaurentPoly::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) return Scalar(p_, Rational(0));
    return it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.set_term(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(p_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(p_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.set_term(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    LaurentPoly r(p_);
    for (const auto& [e, v] : terms_) r.set_term(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long dexp) const {
    LaurentPoly r(p_);
    for (const auto& [e, v] : terms_) r.terms_[e + dexp] = v;
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [e, c] : terms_) {
        auto it = o.terms_.find(e);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

Val LaurentPoly::gauss_norm(const Rational& rho) const {
    Val best = Val::zero();
    for (const auto& [e, c] : terms_) {
        Val t = c.valuation() * Val::from_exponent(Rational(e) * rho);
        if (t.abs_gt(best)) best = t;
    }
    return best;
}

LaurentPoly LaurentPoly::derived(const Gauge& g) const {
    LaurentPoly r(p_);
    for (const auto& [e, c] : terms_) {
        if (e == 0) continue;
        Scalar ic = c * Scalar(p_, Rational(e));
        switch (g.kind) {
            case Gauge::Kind::DdS: r.set_term(e - 1, r.coeff(e - 1) + ic); break;
            case Gauge::Kind::SdS: r.set_term(e, r.coeff(e) + ic); break;
            case Gauge::Kind::PlSdS:
                r.set_term(e, r.coeff(e) + ic * Scalar(p_, rat_pow(Rational(p_), g.l)));
                break;
        }
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")";
        if (e != 0) s += "*S^" + std::to_string(e);
    }
    return s;
}

} // namespace padspec
