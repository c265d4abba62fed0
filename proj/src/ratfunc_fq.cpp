#include "heightzeta/ratfunc_fq.hpp"

#include <stdexcept>

namespace hz::gf {

RatFuncFq RatFuncField::canonical(const PolyFq& num, const PolyFq& den) const
{
    if (den.is_zero())
        throw std::domain_error("rational function with zero denominator");
    if (num.is_zero())
        return zero();
    PolyFq g = ring_.gcd(num, den);
    PolyFq n = ring_.quo(num, g);
    PolyFq d = ring_.quo(den, g);
    Fq li = field().inv(d.lead());
    return {ring_.scale(n, li), ring_.scale(d, li)};
}

RatFuncFq RatFuncField::add(const RatFuncFq& a, const RatFuncFq& b) const
{
    return canonical(ring_.add(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)), ring_.mul(a.den, b.den));
}

RatFuncFq RatFuncField::sub(const RatFuncFq& a, const RatFuncFq& b) const
{
    return canonical(ring_.sub(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)), ring_.mul(a.den, b.den));
}

RatFuncFq RatFuncField::mul(const RatFuncFq& a, const RatFuncFq& b) const
{
    return canonical(ring_.mul(a.num, b.num), ring_.mul(a.den, b.den));
}

RatFuncFq RatFuncField::inv(const RatFuncFq& a) const
{
    if (a.is_zero())
        throw std::domain_error("zero divisor");
    return canonical(a.den, a.num);
}

RatFuncFq RatFuncField::div(const RatFuncFq& a, const RatFuncFq& b) const
{
    return mul(a, inv(b));
}

RatFuncFq RatFuncField::pow(const RatFuncFq& a, unsigned n) const
{
    // already coprime, so powers stay coprime; only the unit needs fixing
    return canonical(ring_.pow(a.num, n), ring_.pow(a.den, n));
}

RatFuncFq RatFuncField::compose(const RatFuncFq& outer, const RatFuncFq& inner) const
{
    auto eval_poly = [&](const PolyFq& p) {
        RatFuncFq acc = zero();
        for (std::size_t i = p.c.size(); i-- > 0;)
            acc = add(mul(acc, inner), from_poly(ring_.constant(p.c[i])));
        return acc;
    };
    return div(eval_poly(outer.num), eval_poly(outer.den));
}

RatFuncFq RatFuncField::apply_phi(const RatFuncFq& x, unsigned d, const PolyFq& f) const
{
    return add(pow(x, d), canonical(ring_.constant(field().one()), f));
}

std::string RatFuncField::to_string(const RatFuncFq& x) const
{
    std::string n = ring_.to_string(x.num);
    if (x.den.degree() == 0)
        return n;
    return "(" + n + ")/(" + ring_.to_string(x.den) + ")";
}

} // namespace hz::gf
