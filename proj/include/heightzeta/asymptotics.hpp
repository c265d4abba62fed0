#ifndef HEIGHTZETA_ASYMPTOTICS_HPP
#define HEIGHTZETA_ASYMPTOTICS_HPP

#include <optional>
#include <vector>

#include "heightzeta/poles.hpp"

namespace hz::asym {

using qs::Integer;
using qs::QRatFunc;
using qs::Rational;

/// Stirling number of the second kind, 0 <= k <= n <= 64.
Integer stirling2(unsigned n, unsigned k);

/// B_n from x/(e^x - 1), so B_1 = -1/2. n <= 64.
Rational bernoulli(unsigned n);

struct IdentityResult {
    bool ok = true;
    std::optional<int> first_mismatch; // exponent of x where the sides differ
};

/// Expands both sides of the Stirling/Bernoulli identity for
/// sum_k (-1)^(n+k) (k-1)!/(n-1)! S(n,k) / (1 - e^(-x))^k
/// as Laurent series in x and compares them up to x^M.
IdentityResult stirling_bernoulli_check(unsigned n, unsigned M);

/// x^n = sum_k (-1)^(n-k) S(n,k) (x)_k with rising factorials, x = 0..xmax.
bool stirling_pochhammer_check(unsigned n, unsigned xmax);

struct AsymptoticReport {
    unsigned alpha_exponent = 1;  // e: Z is a function of w^e, alpha = q^(e/d)
    QRatFunc reduced;             // Z in w~ = w^e
    std::vector<qs::PoleRecord> pole_records;
    QRatFunc principal;           // sum of the strip principal parts
    QRatFunc remainder;           // G = reduced - principal
    double decay_base = 0;        // r < 1 bounding the growth of G's coefficients
};

/// Normalises the exponent, locates the strip poles, computes their Laurent
/// data and splits off the remainder. Throws MixedModulusError.
AsymptoticReport build_report(const QRatFunc& Z);

/// p_m, the exact contribution of all strip poles to the m-th coefficient
/// of the reduced series.
Rational predicted_coefficient(const AsymptoticReport& report, long long m);

/// Sum of p_m over alpha^m <= q^(k/d), i.e. m <= floor(k/e).
Rational main_term(const AsymptoticReport& report, long long k);

struct RemainderResult {
    bool ok = false;
    std::vector<Rational> differences; // a_m - p_m for m = 0..M
    double max_abs = 0;
    double envelope_constant = 0;      // C with |a_m - p_m| <= C rho^m
    double envelope_ratio = 0;         // rho
};

/// Checks a_m - p_m against the series of G exactly and certifies
/// geometric decay of the differences for m <= M (M <= 200).
RemainderResult remainder_check(const AsymptoticReport& report, unsigned M);

} // namespace hz::asym

#endif
