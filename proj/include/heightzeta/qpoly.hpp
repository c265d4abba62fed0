#ifndef HEIGHTZETA_QPOLY_HPP
#define HEIGHTZETA_QPOLY_HPP

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hz::qs {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" or "p"; never a decimal point.
std::string to_string(const Rational& r);
/// Inverse of to_string; accepts "p/q" and integers. Throws ValidationError.
Rational parse_rational(const std::string& s);

/// Univariate polynomial over Q, ascending coefficients, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(std::initializer_list<Rational> coeffs) : QPoly(std::vector<Rational>(coeffs)) {}
    static QPoly constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }
    /// c * x^k
    static QPoly monomial(const Rational& c, unsigned k);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
    unsigned low_degree() const;
    const Rational& lead() const { return c_.back(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    QPoly& operator+=(const QPoly& b);
    QPoly& operator-=(const QPoly& b);
    QPoly& operator*=(const QPoly& b);
    QPoly& operator*=(const Rational& s);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
    friend QPoly operator*(const Rational& s, QPoly a) { return a *= s; }
    QPoly operator-() const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const;
    std::complex<double> eval(std::complex<double> x) const;
    QPoly derivative() const;
    /// p(x^k)
    QPoly inflate(unsigned k) const;
    /// p(x^(1/k)); requires every exponent divisible by k.
    QPoly deflate(unsigned k) const;
    QPoly monic() const;
    QPoly pow(unsigned n) const;

    /// Content-free integer coefficients (sign kept) and the rational content
    /// with p = content * primitive.
    std::pair<Rational, std::vector<Integer>> primitive_part() const;

    std::string to_string(const std::string& var = "w") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
inline QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }
inline QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }
/// Monic gcd.
QPoly gcd(const QPoly& a, const QPoly& b);
/// (g, s, t) with s*a + t*b = g monic.
struct QExtGcd {
    QPoly g, s, t;
};
QExtGcd ext_gcd(const QPoly& a, const QPoly& b);

QPoly from_integers(const std::vector<Integer>& z);

/// Numeric complex roots (companion matrix eigenvalues). Advisory only.
std::vector<std::complex<double>> numeric_roots(const QPoly& p);

} // namespace hz::qs

#endif
