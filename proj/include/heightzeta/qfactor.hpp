#ifndef HEIGHTZETA_QFACTOR_HPP
#define HEIGHTZETA_QFACTOR_HPP

#include <vector>

#include "heightzeta/qpoly.hpp"

namespace hz::qs {

struct QFactor {
    /// Primitive integer polynomial, irreducible over Q. Sign fixed so the
    /// constant term is positive (or the leading coefficient, for x itself).
    QPoly factor;
    unsigned multiplicity;

    friend bool operator==(const QFactor&, const QFactor&) = default;
};

struct QFactorization {
    Rational unit;
    std::vector<QFactor> factors; // sorted by degree, then coefficients
};

/// Exact factorisation over Q. Throws std::domain_error on p = 0.
QFactorization qpoly_factor(const QPoly& p);

QPoly expand(const QFactorization& f);

/// No factor of degree <= deg/2 exists (re-derived by an independent
/// modular certificate: factor degrees mod several primes are incompatible
/// with any proper split, or Zassenhaus finds nothing).
bool is_irreducible(const QPoly& p);

} // namespace hz::qs

#endif
