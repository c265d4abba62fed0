#include "heightzeta/number_field.hpp"

#include <stdexcept>

namespace hz::qs {

NumberField::NumberField(QPoly min_poly) : min_poly_(std::move(min_poly)), monic_(min_poly_.monic())
{
    if (min_poly_.degree() < 1)
        throw std::invalid_argument("number field needs a polynomial of degree >= 1");
    // Newton: s_k = -(k a_{n-k} + sum_{i=1}^{k-1} a_{n-i} s_{k-i}) for monic p
    const int n = monic_.degree();
    power_sums_.assign(static_cast<std::size_t>(n), Rational(0));
    power_sums_[0] = n;
    for (int k = 1; k < n; ++k) {
        Rational s = Rational(k) * monic_.coeff(static_cast<std::size_t>(n - k));
        for (int i = 1; i < k; ++i)
            s += monic_.coeff(static_cast<std::size_t>(n - i)) * power_sums_[static_cast<std::size_t>(k - i)];
        power_sums_[static_cast<std::size_t>(k)] = -s;
    }
}

NumberFieldElem NumberField::inv(const NumberFieldElem& a) const
{
    if (a.rep.is_zero())
        throw std::domain_error("zero divisor");
    auto eg = ext_gcd(a.rep, monic_);
    if (eg.g.degree() != 0)
        throw std::domain_error("element not invertible: modulus is reducible");
    return from_poly(eg.s);
}

NumberFieldElem NumberField::pow(const NumberFieldElem& a, long long n) const
{
    NumberFieldElem base = n < 0 ? inv(a) : a;
    unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    NumberFieldElem result = from_rational(1);
    while (e) {
        if (e & 1)
            result = mul(result, base);
        e >>= 1;
        if (e)
            base = mul(base, base);
    }
    return result;
}

Rational NumberField::trace(const NumberFieldElem& a) const
{
    Rational t = 0;
    const auto& c = a.rep.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        t += c[k] * power_sums_[k];
    return t;
}

} // namespace hz::qs
