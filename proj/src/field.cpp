#include "heightzeta/field.hpp"

#include <stdexcept>
#include <string>

#include "heightzeta/error.hpp"
#include "heightzeta/poly_fq.hpp"

namespace hz::gf {

namespace {
constexpr std::uint64_t kMaxQ = 1u << 20;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field::Field(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus))
{
    for (unsigned i = 0; i < e_; ++i)
        q_ *= p_;
}

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p) || p > kMaxQ)
        throw ValidationError("characteristic must be a prime <= 2^20, got " + std::to_string(p));
    return Field(p, 1, {0, 1});
}

Field Field::extension(std::uint32_t p, std::vector<std::uint32_t> modulus)
{
    Field base = prime(p);
    while (!modulus.empty() && modulus.back() % p == 0)
        modulus.pop_back();
    if (modulus.size() < 2)
        throw ValidationError("field modulus must have degree >= 1");
    for (auto& c : modulus)
        c %= p;
    if (modulus.back() != 1)
        throw ValidationError("field modulus must be monic");
    const unsigned e = static_cast<unsigned>(modulus.size() - 1);
    if (e == 1)
        return base;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxQ)
            throw ValidationError("field size exceeds 2^20");
    }
    PolyRing ring(base);
    std::vector<Fq> coeffs;
    for (auto c : modulus)
        coeffs.push_back(Fq{c});
    if (!ring.is_irreducible(PolyFq(coeffs)))
        throw ValidationError("field modulus " + ring.to_string(PolyFq(coeffs), 'y') + " is not irreducible over F_"
                              + std::to_string(p));
    return Field(p, e, std::move(modulus));
}

Fq Field::from_int(long long n) const
{
    long long r = n % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return {static_cast<std::uint32_t>(r)};
}

Fq Field::generator() const
{
    if (e_ == 1)
        return zero();
    return {p_};
}

std::vector<std::uint32_t> Field::digits(Fq a) const
{
    std::vector<std::uint32_t> d(e_);
    std::uint32_t v = a.v;
    for (unsigned i = 0; i < e_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

Fq Field::from_digits(const std::vector<std::uint32_t>& d) const
{
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        v = v * p_ + d[i] % p_;
    return {v};
}

Fq Field::add_slow(Fq a, Fq b) const
{
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < e_; ++i) {
        std::uint32_t s = a.v % p_ + b.v % p_;
        if (s >= p_)
            s -= p_;
        out += s * place;
        place *= p_;
        a.v /= p_;
        b.v /= p_;
    }
    return {out};
}

Fq Field::neg_slow(Fq a) const
{
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < e_; ++i) {
        std::uint32_t d = a.v % p_;
        out += (d == 0 ? 0 : p_ - d) * place;
        place *= p_;
        a.v /= p_;
    }
    return {out};
}

Fq Field::mul_slow(Fq a, Fq b) const
{
    auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_;
    // reduce with the monic modulus: y^e = -sum_{i<e} m_i y^i
    for (std::size_t k = prod.size(); k-- > e_;) {
        std::uint64_t c = prod[k];
        if (c == 0)
            continue;
        prod[k] = 0;
        for (unsigned i = 0; i < e_; ++i)
            prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - modulus_[i]) * c) % p_;
    }
    std::vector<std::uint32_t> out(e_);
    for (unsigned i = 0; i < e_; ++i)
        out[i] = static_cast<std::uint32_t>(prod[i]);
    return from_digits(out);
}

Fq Field::pow(Fq a, std::uint64_t n) const
{
    Fq result = one();
    while (n) {
        if (n & 1)
            result = mul(result, a);
        a = mul(a, a);
        n >>= 1;
    }
    return result;
}

Fq Field::inv(Fq a) const
{
    if (a.v == 0)
        throw std::domain_error("zero divisor");
    if (e_ == 1) {
        // extended Euclid on integers
        long long r0 = p_, r1 = a.v, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long long qt = r0 / r1;
            long long r2 = r0 - qt * r1;
            r0 = r1;
            r1 = r2;
            long long s2 = s0 - qt * s1;
            s0 = s1;
            s1 = s2;
        }
        return from_int(s0);
    }
    return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

std::string Field::to_string(Fq a) const
{
    if (e_ == 1 || in_prime_field(a))
        return std::to_string(a.v);
    auto d = digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0)
            continue;
        if (!out.empty())
            out += '+';
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1)
            out += std::to_string(d[i]);
        out += 'y';
        if (i > 1)
            out += '^' + std::to_string(i);
    }
    return "(" + out + ")";
}

} // namespace hz::gf
