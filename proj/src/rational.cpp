#include "padspec/rational.hpp"

#include <stdexcept>

namespace padspec {

Int int_pow(const Int& base, unsigned long e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational rat_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
        return Rational(1) / rat_pow(base, -e);
    }
    Rational r = 1, b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

long vp_int(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("vp_int: zero");
    if (n < 0) n = -n;
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

long vp_rat(const Rational& q, const Int& p) {
    if (q == 0) throw std::domain_error("vp_rat: zero");
    return vp_int(rat_num(q), p) - vp_int(rat_den(q), p);
}

std::string rat_to_string(const Rational& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

std::optional<Rational> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rational(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace padspec
