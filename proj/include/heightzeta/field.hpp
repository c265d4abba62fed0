#ifndef HEIGHTZETA_FIELD_HPP
#define HEIGHTZETA_FIELD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hz::gf {

/// An element of F_q, packed as the base-p digits of its coordinate vector
/// over F_p (digit i is the coefficient of y^i in F_p[y]/(modulus)).
struct Fq {
    std::uint32_t v = 0;

    friend constexpr bool operator==(Fq, Fq) = default;
    friend constexpr auto operator<=>(Fq, Fq) = default;
};

/// Finite field F_q with q = p^e. For e > 1 the field is F_p[y]/(modulus)
/// with an explicitly supplied monic irreducible modulus.
class Field {
public:
    /// F_p. Throws ValidationError unless p is a prime with p <= 2^20.
    static Field prime(std::uint32_t p);

    /// F_p[y]/(modulus). `modulus` is ascending over F_p, monic of degree e.
    /// Throws ValidationError if it is not irreducible or q exceeds 2^20.
    static Field extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fq zero() const { return {0}; }
    Fq one() const { return {1}; }
    Fq from_int(long long n) const;
    /// The element with packed index i, 0 <= i < q. Enumeration order.
    Fq element(std::uint32_t i) const { return {i}; }
    /// The class of y (a generator of F_q over F_p). Equals from_int(0) when e = 1.
    Fq generator() const;

    bool is_zero(Fq a) const { return a.v == 0; }
    bool in_prime_field(Fq a) const { return a.v < p_; }

    Fq add(Fq a, Fq b) const
    {
        if (e_ == 1) {
            std::uint32_t s = a.v + b.v;
            return {s >= p_ ? s - p_ : s};
        }
        return add_slow(a, b);
    }
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq neg(Fq a) const
    {
        if (e_ == 1)
            return {a.v == 0 ? 0 : p_ - a.v};
        return neg_slow(a);
    }
    Fq mul(Fq a, Fq b) const
    {
        if (e_ == 1)
            return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
        return mul_slow(a, b);
    }
    /// Throws std::domain_error("zero divisor") on a = 0.
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, std::uint64_t n) const;

    std::vector<std::uint32_t> digits(Fq a) const;
    Fq from_digits(const std::vector<std::uint32_t>& d) const;

    /// Integers for prime-field elements, otherwise a parenthesised
    /// polynomial in y, e.g. "(y+2)".
    std::string to_string(Fq a) const;

    friend bool operator==(const Field& a, const Field& b)
    {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
    }

private:
    Field(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus);

    Fq add_slow(Fq a, Fq b) const;
    Fq neg_slow(Fq a) const;
    Fq mul_slow(Fq a, Fq b) const;

    std::uint32_t p_;
    unsigned e_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_; // ascending, monic, size e+1; {0,1} when e = 1
};

bool is_prime(std::uint64_t n);

} // namespace hz::gf

#endif
