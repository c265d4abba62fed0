#include "heightzeta/poles.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "heightzeta/error.hpp"
#include "heightzeta/qfactor.hpp"

namespace hz::qs {

namespace {

constexpr double kModulusTolerance = 1e-9;

unsigned exponent_gcd(const QPoly& p, unsigned g)
{
    const auto& c = p.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0)
            g = std::gcd(g, static_cast<unsigned>(i));
    return g;
}

Rational factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// Coefficients 0..order of P(u exp(-tau)) in tau, as elements of F.
std::vector<NumberFieldElem> shifted_series(const QPoly& P, const NumberField& F, unsigned count)
{
    std::vector<NumberFieldElem> out;
    out.reserve(count);
    const auto& c = P.coeffs();
    for (unsigned i = 0; i < count; ++i) {
        std::vector<Rational> coeffs(c.size());
        const Rational inv_fact = 1 / factorial(i);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0)
                continue;
            Integer pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(j), i);
            if (i % 2 == 1)
                pw = -pw;
            coeffs[j] = c[j] * pw * inv_fact;
        }
        out.push_back(F.from_poly(QPoly(std::move(coeffs))));
    }
    return out;
}

} // namespace

ExponentNormalized exponent_gcd_normalize(const QRatFunc& Z)
{
    unsigned e = exponent_gcd(Z.den(), exponent_gcd(Z.num(), 0));
    if (e == 0)
        e = 1;
    Integer base;
    mpz_pow_ui(base.get_mpz_t(), Z.tag().base.get_mpz_t(), e);
    VarTag tag{base, Z.tag().d};
    return {e, QRatFunc(Z.num().deflate(e), Z.den().deflate(e), tag)};
}

double log_alpha(const VarTag& tag)
{
    // ln(base) / d without overflowing for large bases
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, tag.base.get_mpz_t());
    return (std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2) / tag.d;
}

std::vector<PoleRecord> unit_disk_poles(const QRatFunc& Zt, unsigned alpha_exponent)
{
    std::vector<PoleRecord> out;
    if (Zt.den().degree() < 1)
        return out;
    const double ln_alpha = log_alpha(Zt.tag());
    for (const auto& [factor, mult] : qpoly_factor(Zt.den()).factors) {
        const Rational c0 = factor.coeff(0);
        if (c0 == 0)
            throw std::invalid_argument("denominator vanishes at w = 0");
        const int k = factor.degree();
        const Rational ratio = abs(c0 / factor.lead());
        if (ratio > 1)
            continue; // |u_0| > 1, Re(a) < 0
        const double rho = std::pow(ratio.get_d(), 1.0 / k);
        PoleRecord rec;
        rec.factor = factor;
        rec.order = mult;
        rec.modulus = rho;
        rec.alpha_exponent = alpha_exponent;
        rec.roots = numeric_roots(factor);
        for (const auto& r : rec.roots) {
            if (std::abs(std::abs(r) - rho) > kModulusTolerance * std::max(1.0, rho))
                throw MixedModulusError("mixed-modulus factor: exact orbit summation unavailable (" + factor.to_string("u")
                                        + ")");
            double theta = std::arg(r);
            if (theta > 0)
                theta -= 2 * std::numbers::pi;
            rec.numeric_poles.push_back({-std::log(std::abs(r)) / ln_alpha, -theta / ln_alpha});
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<NumberFieldElem> laurent_at_pole(const QRatFunc& Zt, const PoleRecord& rec)
{
    const NumberField F(rec.factor);
    const unsigned N = rec.order;
    auto num = shifted_series(Zt.num(), F, N);
    auto den = shifted_series(Zt.den(), F, 2 * N);
    for (unsigned i = 0; i < N; ++i)
        if (!den[i].rep.is_zero())
            throw IdentityError("laurent_at_pole: inconsistent multiplicity for " + rec.factor.to_string("u"));
    if (den[N].rep.is_zero())
        throw IdentityError("laurent_at_pole: pole order exceeds the recorded multiplicity");
    // quotient series q = num / (den / tau^N), first N terms
    const NumberFieldElem lead_inv = F.inv(den[N]);
    std::vector<NumberFieldElem> q(N);
    for (unsigned i = 0; i < N; ++i) {
        NumberFieldElem acc = num[i];
        for (unsigned j = 1; j <= i; ++j)
            acc = F.sub(acc, F.mul(den[N + j], q[i - j]));
        q[i] = F.mul(acc, lead_inv);
    }
    // c_n is the coefficient of tau^(-n) = q[N - n]
    std::vector<NumberFieldElem> c(N);
    for (unsigned n = 1; n <= N; ++n)
        c[n - 1] = q[N - n];
    return c;
}

std::vector<NumberFieldElem> laurent_log_q(const PoleRecord& rec, unsigned d)
{
    const NumberField F(rec.factor);
    Rational ratio(d, rec.alpha_exponent);
    ratio.canonicalize();
    std::vector<NumberFieldElem> out;
    Rational scale = 1;
    for (const auto& c : rec.laurent) {
        scale *= ratio;
        out.push_back(F.scale(c, scale));
    }
    return out;
}

Rational orbit_contribution(const PoleRecord& rec, long long m)
{
    if (rec.factor.coeff(0) == 0)
        throw std::domain_error("orbit_contribution: u is not invertible");
    const NumberField F(rec.factor);
    NumberFieldElem sum = F.from_rational(0);
    Rational mpow = 1; // m^(n-1)
    for (std::size_t n = 1; n <= rec.laurent.size(); ++n) {
        sum = F.add(sum, F.scale(rec.laurent[n - 1], mpow / factorial(static_cast<unsigned>(n - 1))));
        mpow *= Rational(Integer(static_cast<long>(m)));
    }
    return F.trace(F.mul(F.pow(F.generator(), -m), sum));
}

PrincipalSplit principal_part_split(const QRatFunc& Zt, const std::vector<PoleRecord>& recs)
{
    const VarTag& tag = Zt.tag();
    if (recs.empty())
        return {QRatFunc::constant(0, tag), Zt};
    QPoly P = QPoly::constant(1);
    for (const auto& r : recs)
        P *= r.factor.pow(r.order);
    auto [R, rem] = divmod(Zt.den(), P);
    if (!rem.is_zero())
        throw IdentityError("principal_part_split: retained factors do not divide the denominator");
    auto eg = ext_gcd(R, P);
    if (eg.g.degree() != 0)
        throw IdentityError("principal_part_split: retained factors not coprime to the rest");
    QPoly A = (Zt.num() * eg.s) % P;
    auto [B, brem] = divmod(Zt.num() - A * R, P);
    if (!brem.is_zero())
        throw IdentityError("principal_part_split: inexact division");
    return {QRatFunc(A, P, tag), QRatFunc(B, R, tag)};
}

} // namespace hz::qs
