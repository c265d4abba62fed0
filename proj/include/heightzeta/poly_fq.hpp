#ifndef HEIGHTZETA_POLY_FQ_HPP
#define HEIGHTZETA_POLY_FQ_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "heightzeta/field.hpp"

namespace hz::gf {

/// Polynomial in t over F_q; ascending coefficients with trailing zeros
/// stripped. The zero polynomial has no coefficients.
struct PolyFq {
    std::vector<Fq> c;

    PolyFq() = default;
    explicit PolyFq(std::vector<Fq> coeffs) : c(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Fq lead() const { return c.empty() ? Fq{0} : c.back(); }
    Fq coeff(std::size_t i) const { return i < c.size() ? c[i] : Fq{0}; }
    void trim()
    {
        while (!c.empty() && c.back().v == 0)
            c.pop_back();
    }

    friend bool operator==(const PolyFq&, const PolyFq&) = default;
    friend auto operator<=>(const PolyFq& a, const PolyFq& b)
    {
        if (a.c.size() != b.c.size())
            return a.c.size() <=> b.c.size();
        return std::lexicographical_compare_three_way(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
    }
};

struct FactorEntry {
    PolyFq factor; // monic irreducible
    unsigned multiplicity;

    friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct Factorization {
    Fq unit;
    std::vector<FactorEntry> factors; // sorted by (degree, coefficients)
};

enum class SquareClass { zero, square, nonsquare };

/// Polynomial arithmetic over a fixed field. Everything is pure; a ring can be
/// shared across threads.
class PolyRing {
public:
    explicit PolyRing(Field field) : field_(std::move(field)) {}

    const Field& field() const { return field_; }

    PolyFq constant(Fq a) const { return PolyFq({a}); }
    PolyFq constant(long long n) const { return constant(field_.from_int(n)); }
    PolyFq monomial(Fq a, unsigned k) const;
    PolyFq t() const { return monomial(field_.one(), 1); }

    PolyFq add(const PolyFq& a, const PolyFq& b) const;
    PolyFq sub(const PolyFq& a, const PolyFq& b) const;
    PolyFq neg(const PolyFq& a) const;
    PolyFq mul(const PolyFq& a, const PolyFq& b) const;
    PolyFq scale(const PolyFq& a, Fq s) const;
    PolyFq pow(const PolyFq& a, unsigned n) const;

    /// Quotient and remainder. Throws std::domain_error on b = 0.
    std::pair<PolyFq, PolyFq> divmod(const PolyFq& a, const PolyFq& b) const;
    PolyFq mod(const PolyFq& a, const PolyFq& b) const { return divmod(a, b).second; }
    PolyFq quo(const PolyFq& a, const PolyFq& b) const { return divmod(a, b).first; }
    bool divides(const PolyFq& d, const PolyFq& a) const { return mod(a, d).is_zero(); }

    PolyFq monic(const PolyFq& a) const;
    /// Monic gcd; gcd(0, 0) = 0.
    PolyFq gcd(const PolyFq& a, const PolyFq& b) const;
    /// Returns (g, s, u) with s*a + u*b = g monic.
    struct ExtGcd {
        PolyFq g, s, u;
    };
    ExtGcd ext_gcd(const PolyFq& a, const PolyFq& b) const;

    PolyFq derivative(const PolyFq& a) const;
    Fq eval(const PolyFq& a, Fq x) const;
    PolyFq mulmod(const PolyFq& a, const PolyFq& b, const PolyFq& m) const { return mod(mul(a, b), m); }
    PolyFq powmod(const PolyFq& a, const mpz_class& n, const PolyFq& m) const;
    PolyFq powmod(const PolyFq& a, std::uint64_t n, const PolyFq& m) const { return powmod(a, mpz_class(static_cast<unsigned long>(n)), m); }

    /// Multiplicity of the irreducible pi in a (a != 0).
    unsigned order(const PolyFq& a, const PolyFq& pi) const;

    /// Squarefree, distinct-degree and equal-degree factorisation.
    /// Throws std::domain_error on zero input.
    Factorization factor(const PolyFq& f) const;
    PolyFq expand(const Factorization& fac) const;
    bool is_irreducible(const PolyFq& f) const;

    /// All monic irreducibles of degree 1..n, ordered by degree then coefficients.
    std::vector<PolyFq> irreducibles_up_to(unsigned n) const;

    /// Class of h in F_q[t]/(pi) by Euler's criterion. Requires odd p.
    SquareClass residue_square_class(const PolyFq& h, const PolyFq& pi) const;

    /// Text format in variable `var`: "t^3+3", "2t^2+t+4", coefficients in
    /// F_p given as integers (reduced mod p, may be negative), and for e > 1
    /// optional parenthesised coefficients in y such as "(y+1)t".
    PolyFq parse(std::string_view text, char var = 't') const;
    std::string to_string(const PolyFq& a, char var = 't') const;

private:
    std::vector<std::pair<PolyFq, unsigned>> squarefree(const PolyFq& f) const;
    std::vector<std::pair<PolyFq, unsigned>> distinct_degree(const PolyFq& f) const;
    void equal_degree(const PolyFq& f, unsigned d, std::vector<PolyFq>& out, std::uint64_t& seed) const;
    PolyFq pth_root(const PolyFq& f) const;

    Field field_;
};

/// Necklace count of monic irreducibles of exact degree k over F_q.
mpz_class necklace_count(std::uint64_t q, unsigned k);

} // namespace hz::gf

#endif
