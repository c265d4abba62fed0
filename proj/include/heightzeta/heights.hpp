#ifndef HEIGHTZETA_HEIGHTS_HPP
#define HEIGHTZETA_HEIGHTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "heightzeta/ratfunc_fq.hpp"

namespace hz::heights {

/// A place of F_q(t): a monic irreducible pi, or the degree valuation at infinity.
struct Place {
    enum class Kind { finite, infinite };

    Kind kind = Kind::infinite;
    gf::PolyFq pi; // empty for the infinite place

    static Place finite(gf::PolyFq pi) { return {Kind::finite, std::move(pi)}; }
    static Place infinity() { return {Kind::infinite, {}}; }

    /// Residue degree: deg pi, or 1 at infinity.
    unsigned residue_degree() const { return kind == Kind::finite ? static_cast<unsigned>(pi.degree()) : 1u; }

    friend bool operator==(const Place&, const Place&) = default;
};

/// v(x); std::nullopt stands for +infinity (x = 0).
using Valuation = std::optional<long>;

struct BadPlace {
    Place place;
    unsigned f_v;
    unsigned vf; // v(f), 0 < vf < d
};

/// phi(z) = z^d + 1/f over F_q(t).
struct PhiSpec {
    unsigned d = 2;
    gf::PolyFq f;
    std::vector<BadPlace> bad_places;
};

/// Canonical height as an integer exponent: H^(x) = q^(m/d).
struct HeightExponent {
    std::uint64_t m = 0;
    friend bool operator==(HeightExponent, HeightExponent) = default;
};

Valuation valuation(const gf::PolyRing& ring, const gf::RatFuncFq& x, const Place& v);

/// h with H_K(x) = q^h, i.e. max(deg num, deg den).
unsigned standard_height_exp(const gf::RatFuncFq& x);

/// Factors f and records its irreducible factors as the bad places.
/// Throws ValidationError on d < 2, f = 0, or a multiplicity >= d.
PhiSpec validate_phi(const gf::PolyRing& ring, const gf::PolyFq& f, unsigned d);

/// f_v * v(f) when v(x) >= 0 (x = 0 included), else 0.
unsigned local_correction_num(const Valuation& vx, const BadPlace& bp);
unsigned local_correction_num(const gf::PolyRing& ring, const gf::RatFuncFq& x, const BadPlace& bp);

/// m = d * h + sum of local corrections, from precomputed valuations at the
/// bad places (same order as spec.bad_places).
HeightExponent canonical_height_exp(const PhiSpec& spec, unsigned standard_height, const std::vector<Valuation>& bad_valuations);
HeightExponent canonical_height_exp(const gf::PolyRing& ring, const gf::RatFuncFq& x, const PhiSpec& spec);

} // namespace hz::heights

#endif
