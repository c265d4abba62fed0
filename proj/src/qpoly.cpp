#include "heightzeta/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "heightzeta/error.hpp"

namespace hz::qs {

std::string to_string(const Rational& r)
{
    return r.get_str();
}

Rational parse_rational(const std::string& s)
{
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw ValidationError("not a rational: \"" + s + "\"");
    if (r.get_den() == 0)
        throw ValidationError("zero denominator in \"" + s + "\"");
    r.canonicalize();
    return r;
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

QPoly QPoly::monomial(const Rational& c, unsigned k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return QPoly(std::move(v));
}

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

unsigned QPoly::low_degree() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<unsigned>(i);
    return 0;
}

QPoly& QPoly::operator+=(const QPoly& b)
{
    if (b.c_.size() > c_.size())
        c_.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c_[i] += b.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& b)
{
    if (b.c_.size() > c_.size())
        c_.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c_[i] -= b.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& b)
{
    if (is_zero() || b.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += c_[i] * b.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= s;
    return *this;
}

QPoly QPoly::operator-() const
{
    QPoly r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

Rational QPoly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

std::complex<double> QPoly::eval(std::complex<double> x) const
{
    std::complex<double> acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i].get_d();
    return acc;
}

QPoly QPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return QPoly(std::move(d));
}

QPoly QPoly::inflate(unsigned k) const
{
    if (is_zero() || k == 1)
        return *this;
    std::vector<Rational> v((c_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i * k] = c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::deflate(unsigned k) const
{
    if (is_zero() || k == 1)
        return *this;
    std::vector<Rational> v((c_.size() - 1) / k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        if (i % k != 0)
            throw std::logic_error("deflate: exponent not divisible");
        v[i / k] = c_[i];
    }
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * Rational(1 / lead());
}

QPoly QPoly::pow(unsigned n) const
{
    QPoly result = constant(1);
    QPoly base = *this;
    while (n) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

std::pair<Rational, std::vector<Integer>> QPoly::primitive_part() const
{
    if (is_zero())
        return {Rational(0), {}};
    Integer den_lcm = 1;
    for (const auto& x : c_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> z(c_.size());
    Integer g = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Rational scaled = c_[i] * den_lcm;
        z[i] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    for (auto& x : z)
        x /= g;
    Rational content(g, den_lcm);
    content.canonicalize();
    return {content, std::move(z)};
}

std::string QPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0)
                out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0 || mag != 1)
            out += qs::to_string(mag);
        if (k >= 1) {
            if (mag != 1)
                out += "*";
            out += var;
        }
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {QPoly{}, a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(a.coeffs().size() - b.coeffs().size() + 1);
    const std::size_t db = b.coeffs().size() - 1;
    const Rational lead_inv = 1 / b.lead();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational coef = r[k + db] * lead_inv;
        q[k] = coef;
        if (coef == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            r[k + j] -= coef * b.coeffs()[j];
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(const QPoly& a, const QPoly& b)
{
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = x % y;
        x = std::move(y);
        // keep coefficients small; scaling does not change the gcd
        y = r.monic();
    }
    return x.monic();
}

QExtGcd ext_gcd(const QPoly& a, const QPoly& b)
{
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1;
    QPoly t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [qt, r2] = divmod(r0, r1);
        QPoly s2 = s0 - qt * s1;
        QPoly t2 = t0 - qt * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    Rational li = 1 / r0.lead();
    return {r0 * li, s0 * li, t0 * li};
}

QPoly from_integers(const std::vector<Integer>& z)
{
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& x : z)
        c.emplace_back(x);
    return QPoly(std::move(c));
}

std::vector<std::complex<double>> numeric_roots(const QPoly& p)
{
    const int n = p.degree();
    if (n < 1)
        return {};
    if (n == 1)
        return {std::complex<double>(Rational(-p.coeff(0) / p.coeff(1)).get_d(), 0.0)};
    QPoly m = p.monic();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        companion(i, n - 1) = -m.coeff(static_cast<std::size_t>(i)).get_d();
    Eigen::ComplexEigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<std::complex<double>> roots;
    const QPoly dp = p.derivative();
    for (int i = 0; i < n; ++i) {
        // Newton polish against the exact coefficients
        std::complex<double> z = solver.eigenvalues()[i];
        for (int it = 0; it < 3; ++it) {
            std::complex<double> d = dp.eval(z);
            if (std::abs(d) == 0.0)
                break;
            z -= p.eval(z) / d;
        }
        roots.push_back(z);
    }
    return roots;
}

} // namespace hz::qs
