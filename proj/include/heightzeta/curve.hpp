#ifndef HEIGHTZETA_CURVE_HPP
#define HEIGHTZETA_CURVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "heightzeta/poly_fq.hpp"
#include "heightzeta/zeta.hpp"

namespace hz::curve {

/// #{(x, y) in F_q^2 : y^2 = h(x)} for a cubic h, odd characteristic.
std::uint64_t affine_point_count(const gf::Field& field, const gf::PolyFq& h);

/// a = q + 1 - #E(F_q) with one point at infinity. Throws ValidationError
/// when |a| > 2 sqrt(q).
long frobenius_trace(std::uint32_t q, std::uint64_t affine_count);

/// Cubic with no repeated root (nonzero discriminant).
bool is_smooth_cubic(const gf::PolyRing& ring, const gf::PolyFq& h);

enum class Splitting { split, inert, ramified };

struct UpstairsPlace {
    unsigned f_v; // residue degree over F_q
    unsigned e;   // ramification index
};

struct SplittingResult {
    Splitting kind;
    std::vector<UpstairsPlace> places;
};

std::string to_string(Splitting s);

/// How the place pi of F_q(t) behaves in F_q(t)(sqrt h).
SplittingResult splitting_type(const gf::PolyRing& ring, const gf::PolyFq& h, const gf::PolyFq& pi);

/// Genus-1 spec for z^d + 1/f over F_q(t)(sqrt h): bad places above the
/// factors of f with v(f) = e * k, trace from the point count.
zeta::ProblemSpec build_genus1_spec(const gf::Field& field, const gf::PolyFq& h, const gf::PolyFq& f, unsigned d);

} // namespace hz::curve

#endif
