#ifndef HEIGHTZETA_ZETA_HPP
#define HEIGHTZETA_ZETA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heightzeta/heights.hpp"
#include "heightzeta/qratfunc.hpp"

namespace hz::zeta {

using qs::QRatFunc;
using qs::Rational;

/// Residue degree and v(f) of one bad place.
struct BadPlaceData {
    unsigned f_v = 1;
    unsigned vf = 1;
    friend bool operator==(const BadPlaceData&, const BadPlaceData&) = default;
};

/// Genus-0 specs built from a polynomial f keep it for the oracle.
struct GenusZeroSource {
    gf::Field field;
    heights::PhiSpec phi;
};

struct ProblemSpec {
    std::uint32_t q = 2;
    unsigned genus = 0;
    long frobenius_trace = 0; // genus 1 only; #E(F_q) = q + 1 - trace
    unsigned d = 2;
    std::vector<BadPlaceData> bad_places;
    std::optional<GenusZeroSource> source;
};

/// Subsets of the bad set, bit i standing for bad_places[i].
using PlaceSubset = std::uint32_t;

/// Throws ValidationError on g outside {0,1}, a Hasse violation, d < 2,
/// or any vf outside (0, d).
void validate(const ProblemSpec& spec);

/// Genus-0 spec from f over the given field; bad places from its factorisation.
ProblemSpec genus0_spec(const gf::Field& field, const gf::PolyFq& f, unsigned d);

/// Dedekind zeta of F_q(t) (g = 0) or of an elliptic function field (g = 1),
/// in x = q^(-s): numerator 1 - trace*x + q*x^2 for g = 1.
QRatFunc dedekind_zeta(unsigned genus, std::uint32_t q, long frobenius_trace = 0);

/// (u^vf + (q_v - 1)u^d - q_v u^(d+vf)) / (1 - u^d) in u = q_v^(-s/d).
QRatFunc local_bad_factor(const qs::Integer& q_v, unsigned vf, unsigned d);

/// q^(1-g) zeta(s-1)/zeta(s) times the local bad factors, in w = q^(-s/d).
QRatFunc adelic_integral(const ProblemSpec& spec);

struct ZetaClosedForm {
    QRatFunc main_term;
    QRatFunc correction_term;
    QRatFunc combined;
};

/// The dynamical height zeta function of z^d + 1/f in w = q^(-s/d).
ZetaClosedForm assemble_zeta(const ProblemSpec& spec);

/// Standard-height zeta of D(U) = {x : v(x) >= 0 for v in U}, in x = q^(-s).
QRatFunc partial_zeta_DU(const ProblemSpec& spec, PlaceSubset U);

/// Standard-height zeta of D_T (v(x) >= 0 on T, v(x) < 0 on S \ T), by
/// inclusion-exclusion over partial_zeta_DU. In x = q^(-s).
QRatFunc partial_zeta_DT(const ProblemSpec& spec, PlaceSubset T);

struct CheckResult {
    bool ok = false;
    std::string detail;
};

/// Z == sum over T of w^(sum_{v in T} f_v vf) * W(D_T)(x = w^d), exactly.
CheckResult decomposition_check(const ProblemSpec& spec);

} // namespace hz::zeta

#endif
