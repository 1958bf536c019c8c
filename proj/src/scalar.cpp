#include "padspec/scalar.hpp"

#include "padspec/error.hpp"

#include <numeric>

namespace padspec {

namespace {

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

} // namespace

Scalar::Scalar(const Int& p, unsigned m, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    if (m == 0) fail("BadRamification", "ramification index must be positive");
    coeffs_.resize(m, Rational(0));
}

Scalar Scalar::ramified(const Int& p, const Rational& u, const Rational& exponent) {
    Int den = rat_den(exponent);
    if (den > 64) fail("BadRamification", "ramification index too large: " + den.str());
    unsigned m = static_cast<unsigned>(den);
    // exponent = a/m; split a = q*m + j with 0 <= j < m, fold p^q into u.
    Int a = rat_num(exponent);
    Int q = rat_floor(Rational(a, Int(m)));
    Int j = a - q * Int(m);
    Rational unit = u * rat_pow(Rational(p), static_cast<long>(q));
    std::vector<Rational> c(m, Rational(0));
    c[static_cast<unsigned>(j)] = unit;
    return Scalar(p, m, std::move(c));
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (unsigned j = 1; j < m(); ++j)
        if (coeffs_[j] != 0) return false;
    return true;
}

Scalar Scalar::promoted(unsigned m_prime) const {
    if (m_prime % m() != 0) fail("BadRamification", "promotion target must be a multiple of m");
    unsigned k = m_prime / m();
    std::vector<Rational> c(m_prime, Rational(0));
    for (unsigned j = 0; j < m(); ++j) c[j * k] = coeffs_[j];
    return Scalar(p_, m_prime, std::move(c));
}

Scalar Scalar::reduced() const {
    unsigned g = m();
    for (unsigned j = 1; j < m(); ++j)
        if (coeffs_[j] != 0) g = std::gcd(g, j);
    unsigned m_new = m() / g;
    std::vector<Rational> c(m_new, Rational(0));
    for (unsigned j = 0; j < m(); ++j)
        if (coeffs_[j] != 0) c[j / g] = coeffs_[j];
    return Scalar(p_, m_new, std::move(c));
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (p_ != o.p_) fail("PrimeMismatch", "scalars over different primes");
    unsigned M = lcm_u(m(), o.m());
    Scalar a = promoted(M), b = o.promoted(M);
    for (unsigned j = 0; j < M; ++j) a.coeffs_[j] += b.coeffs_[j];
    return a.reduced();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (p_ != o.p_) fail("PrimeMismatch", "scalars over different primes");
    unsigned M = lcm_u(m(), o.m());
    Scalar a = promoted(M), b = o.promoted(M);
    std::vector<Rational> c(M, Rational(0));
    for (unsigned i = 0; i < M; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < M; ++j) {
            if (b.coeffs_[j] == 0) continue;
            unsigned k = i + j;
            if (k < M)
                c[k] += a.coeffs_[i] * b.coeffs_[j];
            else
                c[k - M] += a.coeffs_[i] * b.coeffs_[j] * Rational(p_); // p^{m/m} relation
        }
    }
    return Scalar(p_, M, std::move(c)).reduced();
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail("InversionOfZero", "inverse of zero scalar");
    unsigned M = m();
    if (M == 1) return Scalar(p_, Rational(1) / coeffs_[0]);
    // Solve (this) * x = 1 over the Q-basis: column j of the system matrix is
    // the coordinate vector of (this) * p^{j/M}.
    std::vector<std::vector<Rational>> A(M, std::vector<Rational>(M + 1, Rational(0)));
    for (unsigned j = 0; j < M; ++j) {
        for (unsigned i = 0; i < M; ++i) {
            if (coeffs_[i] == 0) continue;
            unsigned k = i + j;
            if (k < M)
                A[k][j] += coeffs_[i];
            else
                A[k - M][j] += coeffs_[i] * Rational(p_);
        }
    }
    A[0][M] = 1;
    // Gaussian elimination, exact.
    for (unsigned col = 0, row = 0; col < M && row < M; ++col) {
        unsigned piv = row;
        while (piv < M && A[piv][col] == 0) ++piv;
        if (piv == M) fail("InversionOfZero", "singular multiplication matrix"); // cannot happen in a field
        std::swap(A[piv], A[row]);
        Rational d = A[row][col];
        for (unsigned j2 = col; j2 <= M; ++j2) A[row][j2] /= d;
        for (unsigned r2 = 0; r2 < M; ++r2) {
            if (r2 == row || A[r2][col] == 0) continue;
            Rational f = A[r2][col];
            for (unsigned j2 = col; j2 <= M; ++j2) A[r2][j2] -= f * A[row][j2];
        }
        ++row;
    }
    std::vector<Rational> x(M);
    for (unsigned j = 0; j < M; ++j) x[j] = A[j][M];
    return Scalar(p_, M, std::move(x)).reduced();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(p_, Rational(1)), b = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    unsigned M = lcm_u(m(), o.m());
    Scalar a = promoted(M), b = o.promoted(M);
    return a.coeffs_ == b.coeffs_;
}

Val Scalar::valuation() const {
    bool found = false;
    Rational best;
    for (unsigned j = 0; j < m(); ++j) {
        if (coeffs_[j] == 0) continue;
        Rational v = Rational(vp_rat(coeffs_[j], p_)) + Rational(j, m());
        if (!found || v < best) {
            best = v;
            found = true;
        }
    }
    if (!found) return Val::zero();
    return Val::from_exponent(best);
}

Val Scalar::delta() const {
    // delta of the rational part.
    Val d0 = Val::zero();
    if (coeffs_[0] != 0 && vp_rat(coeffs_[0], p_) < 0)
        d0 = Val::from_exponent(Rational(vp_rat(coeffs_[0], p_)));
    // Norm of the ramified rest.
    bool found = false;
    Rational best;
    for (unsigned j = 1; j < m(); ++j) {
        if (coeffs_[j] == 0) continue;
        Rational v = Rational(vp_rat(coeffs_[j], p_)) + Rational(j, m());
        if (!found || v < best) {
            best = v;
            found = true;
        }
    }
    Val rest = found ? Val::from_exponent(best) : Val::zero();
    // max in absolute-value order
    return d0.abs_ge(rest) ? d0 : rest;
}

std::string Scalar::to_string() const {
    Scalar r = reduced();
    if (r.is_zero()) return "0";
    std::string s;
    for (unsigned j = 0; j < r.m(); ++j) {
        if (r.coeffs_[j] == 0) continue;
        if (!s.empty()) s += " + ";
        s += rat_to_string(r.coeffs_[j]);
        if (j > 0) s += "*p^(" + rat_to_string(Rational(j, r.m())) + ")";
    }
    return s;
}

} // namespace padspec
