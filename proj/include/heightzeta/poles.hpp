#ifndef HEIGHTZETA_POLES_HPP
#define HEIGHTZETA_POLES_HPP

#include <complex>
#include <vector>

#include "heightzeta/number_field.hpp"
#include "heightzeta/qratfunc.hpp"

namespace hz::qs {

/// Z rewritten in w~ = w^e. The tag of `reduced` is (q^e, d), so
/// alpha = q^(e/d) = base^(1/d).
struct ExponentNormalized {
    unsigned e = 1;
    QRatFunc reduced;
};

/// e = gcd of all exponents carrying a nonzero coefficient in num and den
/// (e = 1 for constants).
ExponentNormalized exponent_gcd_normalize(const QRatFunc& Z);

/// ln(alpha) for a function whose tag is (base, d).
double log_alpha(const VarTag& tag);

struct PoleLocation {
    double re = 0;
    double im = 0;
};

/// One irreducible denominator factor p(u) and the strip poles above it.
/// u stands for alpha^(-s); a root u_0 is alpha^(-a).
struct PoleRecord {
    QPoly factor;                       // primitive integer, irreducible
    unsigned order = 0;                 // N_a, the multiplicity in the denominator
    double modulus = 0;                 // common |u_0|
    std::vector<NumberFieldElem> laurent; // c_1..c_N in Q[u]/(factor)
    unsigned alpha_exponent = 1;        // e with alpha = q^(e/d)
    std::vector<std::complex<double>> roots;   // numeric u_0, one per pole
    std::vector<PoleLocation> numeric_poles;   // a, normalised to the strip
};

/// Poles with Re(a) >= 0, one record per irreducible denominator factor with
/// |u_0| <= 1. Laurent data left empty. Throws MixedModulusError when the
/// roots of an irreducible factor do not share one modulus. `alpha_exponent`
/// is the e that produced Zt and is only recorded.
std::vector<PoleRecord> unit_disk_poles(const QRatFunc& Zt, unsigned alpha_exponent = 1);

/// c_1..c_N at the poles of rec: coefficients of tau^(-n) in the Laurent
/// expansion of Zt(u_0 exp(-tau)), tau = (s - a) log alpha, computed over
/// Q[u]/(rec.factor).
std::vector<NumberFieldElem> laurent_at_pole(const QRatFunc& Zt, const PoleRecord& rec);

/// c_n rescaled to an expansion in powers of (s - a) log q instead of
/// (s - a) log alpha: c_n (d/e)^n.
std::vector<NumberFieldElem> laurent_log_q(const PoleRecord& rec, unsigned d);

/// Tr_{F/Q}(u^(-m) * sum_n c_n m^(n-1)/(n-1)!): the exact sum of
/// alpha^(a m)(...) over the strip poles of this factor.
Rational orbit_contribution(const PoleRecord& rec, long long m);

struct PrincipalSplit {
    QRatFunc principal; // A/P, P = product of retained factors^order, deg A < deg P
    QRatFunc remainder; // G = Zt - principal
};

/// Split Zt into the strip principal parts and a remainder whose
/// denominator is coprime to every retained factor.
PrincipalSplit principal_part_split(const QRatFunc& Zt, const std::vector<PoleRecord>& recs);
inline QRatFunc principal_part_remainder(const QRatFunc& Zt, const std::vector<PoleRecord>& recs)
{
    return principal_part_split(Zt, recs).remainder;
}

} // namespace hz::qs

#endif
