#ifndef HEIGHTZETA_NUMBER_FIELD_HPP
#define HEIGHTZETA_NUMBER_FIELD_HPP

#include <complex>
#include <vector>

#include "heightzeta/qpoly.hpp"

namespace hz::qs {

/// Element of Q[u]/(p): a polynomial of degree < deg p.
struct NumberFieldElem {
    QPoly rep;
    friend bool operator==(const NumberFieldElem&, const NumberFieldElem&) = default;
};

/// The field Q[u]/(p) for an irreducible p over Q.
class NumberField {
public:
    /// p must be irreducible of degree >= 1 (not re-checked here; see
    /// qs::is_irreducible).
    explicit NumberField(QPoly min_poly);

    const QPoly& min_poly() const { return min_poly_; }
    unsigned degree() const { return static_cast<unsigned>(min_poly_.degree()); }

    NumberFieldElem from_rational(const Rational& r) const { return {QPoly::constant(r)}; }
    NumberFieldElem from_poly(const QPoly& a) const { return {a % monic_}; }
    /// The class of u.
    NumberFieldElem generator() const { return from_poly(QPoly{0, 1}); }

    NumberFieldElem add(const NumberFieldElem& a, const NumberFieldElem& b) const { return {a.rep + b.rep}; }
    NumberFieldElem sub(const NumberFieldElem& a, const NumberFieldElem& b) const { return {a.rep - b.rep}; }
    NumberFieldElem mul(const NumberFieldElem& a, const NumberFieldElem& b) const { return {(a.rep * b.rep) % monic_}; }
    NumberFieldElem scale(const NumberFieldElem& a, const Rational& s) const { return {a.rep * s}; }
    /// Throws std::domain_error on zero.
    NumberFieldElem inv(const NumberFieldElem& a) const;
    NumberFieldElem div(const NumberFieldElem& a, const NumberFieldElem& b) const { return mul(a, inv(b)); }
    /// Negative exponents invert first.
    NumberFieldElem pow(const NumberFieldElem& a, long long n) const;

    /// Trace to Q: sum over the conjugate embeddings, via Newton power sums.
    Rational trace(const NumberFieldElem& a) const;

    /// Value of a under the embedding u -> root.
    static std::complex<double> embed(const NumberFieldElem& a, std::complex<double> root) { return a.rep.eval(root); }

private:
    QPoly min_poly_;
    QPoly monic_;
    std::vector<Rational> power_sums_; // Tr(u^k), k < deg
};

} // namespace hz::qs

#endif
