#include "heightzeta/qratfunc.hpp"

#include <stdexcept>

namespace hz::qs {

namespace {
void check_tags(const QRatFunc& a, const QRatFunc& b)
{
    if (!(a.tag() == b.tag()))
        throw std::invalid_argument("incompatible rational-function variables");
}
} // namespace

QRatFunc::QRatFunc(QPoly num, QPoly den, VarTag tag) : num_(std::move(num)), den_(std::move(den)), tag_(std::move(tag))
{
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

void QRatFunc::canonicalize()
{
    if (num_.is_zero()) {
        den_ = QPoly::constant(1);
        return;
    }
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Rational scale = 1 / den_.coeff(den_.low_degree());
    num_ *= scale;
    den_ *= scale;
}

QRatFunc operator+(const QRatFunc& a, const QRatFunc& b)
{
    check_tags(a, b);
    if (a.den_ == b.den_)
        return QRatFunc(a.num_ + b.num_, a.den_, a.tag_);
    return QRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.tag_);
}

QRatFunc operator-(const QRatFunc& a, const QRatFunc& b)
{
    return a + (-b);
}

QRatFunc operator*(const QRatFunc& a, const QRatFunc& b)
{
    check_tags(a, b);
    return QRatFunc(a.num_ * b.num_, a.den_ * b.den_, a.tag_);
}

QRatFunc operator/(const QRatFunc& a, const QRatFunc& b)
{
    check_tags(a, b);
    if (b.is_zero())
        throw std::domain_error("division by the zero function");
    return QRatFunc(a.num_ * b.den_, a.den_ * b.num_, a.tag_);
}

QRatFunc operator*(const Rational& s, const QRatFunc& a)
{
    return QRatFunc(a.num_ * s, a.den_, a.tag_);
}

QRatFunc QRatFunc::pow(unsigned n) const
{
    return QRatFunc(num_.pow(n), den_.pow(n), tag_);
}

QRatFunc QRatFunc::substitute_power(unsigned k, VarTag new_tag) const
{
    return QRatFunc(num_.inflate(k), den_.inflate(k), std::move(new_tag));
}

std::vector<Rational> QRatFunc::series(unsigned M) const
{
    if (den_.coeff(0) == 0)
        throw std::domain_error("series: denominator vanishes at w = 0");
    std::vector<Rational> a(M + 1);
    const Rational d0_inv = 1 / den_.coeff(0);
    const auto& dc = den_.coeffs();
    for (unsigned m = 0; m <= M; ++m) {
        Rational acc = num_.coeff(m);
        for (std::size_t j = 1; j < dc.size() && j <= m; ++j)
            acc -= dc[j] * a[m - j];
        a[m] = acc * d0_inv;
    }
    return a;
}

std::string QRatFunc::to_string(const std::string& var) const
{
    if (den_.degree() == 0)
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace hz::qs
