#ifndef HEIGHTZETA_SERIALIZE_HPP
#define HEIGHTZETA_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "heightzeta/poles.hpp"
#include "heightzeta/zeta.hpp"

namespace hz::io {

using nlohmann::json;

/// Field for q = p^e. For e > 1 `base_modulus` is a monic irreducible in y
/// over F_p ("y^2+y+1"); when empty the least such polynomial is used.
gf::Field make_field(std::uint32_t q, const std::string& base_modulus = {});

/// Parses and validates a problem spec (see README for the schema).
/// Throws ValidationError.
zeta::ProblemSpec spec_from_json(const json& j);
json spec_to_json(const zeta::ProblemSpec& spec);

/// Rationals travel as "p/q" strings ("5" for integers).
json rational_to_json(const qs::Rational& r);
qs::Rational rational_from_json(const json& j);

json qpoly_to_json(const qs::QPoly& p);
qs::QPoly qpoly_from_json(const json& j);

/// {"num": [...], "den": [...], "base": "q", "d": d}; ascending powers of w.
json qratfunc_to_json(const qs::QRatFunc& f);
qs::QRatFunc qratfunc_from_json(const json& j);

/// {"min_poly": [ints], "coeffs": ["p/q", ...]}
json algebraic_to_json(const qs::QPoly& min_poly, const qs::NumberFieldElem& a);

json pole_record_to_json(const qs::PoleRecord& rec, unsigned d);

/// Advisory float with 12 significant digits; |x| < 1e-12 becomes 0.
double round12(double x);

} // namespace hz::io

#endif
