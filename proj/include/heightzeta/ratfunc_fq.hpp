#ifndef HEIGHTZETA_RATFUNC_FQ_HPP
#define HEIGHTZETA_RATFUNC_FQ_HPP

#include <string>

#include "heightzeta/poly_fq.hpp"

namespace hz::gf {

/// Element of F_q(t) in canonical form: den monic, gcd(num, den) = 1,
/// zero is 0/1. Equality is structural.
struct RatFuncFq {
    PolyFq num;
    PolyFq den;

    bool is_zero() const { return num.is_zero(); }
    friend bool operator==(const RatFuncFq&, const RatFuncFq&) = default;
};

class RatFuncField {
public:
    explicit RatFuncField(PolyRing ring) : ring_(std::move(ring)) {}
    explicit RatFuncField(Field field) : ring_(std::move(field)) {}

    const PolyRing& ring() const { return ring_; }
    const Field& field() const { return ring_.field(); }

    /// Throws std::domain_error on den = 0.
    RatFuncFq canonical(const PolyFq& num, const PolyFq& den) const;
    RatFuncFq from_poly(const PolyFq& p) const { return {p, ring_.constant(field().one())}; }
    RatFuncFq zero() const { return from_poly({}); }
    RatFuncFq one() const { return from_poly(ring_.constant(field().one())); }

    RatFuncFq add(const RatFuncFq& a, const RatFuncFq& b) const;
    RatFuncFq sub(const RatFuncFq& a, const RatFuncFq& b) const;
    RatFuncFq mul(const RatFuncFq& a, const RatFuncFq& b) const;
    RatFuncFq div(const RatFuncFq& a, const RatFuncFq& b) const;
    RatFuncFq inv(const RatFuncFq& a) const;
    RatFuncFq pow(const RatFuncFq& a, unsigned n) const;

    /// outer(inner): substitute inner for t in outer.
    RatFuncFq compose(const RatFuncFq& outer, const RatFuncFq& inner) const;

    /// phi(x) = x^d + 1/f.
    RatFuncFq apply_phi(const RatFuncFq& x, unsigned d, const PolyFq& f) const;

    std::string to_string(const RatFuncFq& x) const;

private:
    PolyRing ring_;
};

} // namespace hz::gf

#endif
