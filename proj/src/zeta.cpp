#include "heightzeta/zeta.hpp"

#include <bit>
#include <string>

#include "heightzeta/error.hpp"

namespace hz::zeta {

using qs::Integer;
using qs::QPoly;
using qs::VarTag;

namespace {

VarTag x_tag(std::uint32_t q)
{
    return {Integer(q), 1};
}

VarTag w_tag(const ProblemSpec& spec)
{
    return {Integer(spec.q), spec.d};
}

Integer ipow(std::uint32_t q, unsigned k)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, k);
    return r;
}

// p(x) -> p(c x)
QPoly scale_variable(const QPoly& p, const Rational& c)
{
    std::vector<Rational> out(p.coeffs().size());
    Rational pw = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coeffs()[i] * pw;
        pw *= c;
    }
    return QPoly(std::move(out));
}

// zeta(s-1)/zeta(s) * q^(1-g), in x
QRatFunc shifted_ratio(const ProblemSpec& spec)
{
    const QRatFunc z = dedekind_zeta(spec.genus, spec.q, spec.frobenius_trace);
    const Rational q(spec.q);
    const QRatFunc z_shift(scale_variable(z.num(), q), scale_variable(z.den(), q), z.tag());
    const Rational lead = spec.genus == 0 ? q : Rational(1);
    return lead * (z_shift / z);
}

Rational c_of_genus(const ProblemSpec& spec)
{
    return spec.genus == 1 ? Rational(spec.q - 1) : Rational(0);
}

// 1 - c x^k
QPoly one_minus(const Rational& c, unsigned k)
{
    return QPoly::constant(1) - QPoly::monomial(c, k);
}

} // namespace

void validate(const ProblemSpec& spec)
{
    if (spec.genus > 1)
        throw ValidationError("genus must be 0 or 1, got " + std::to_string(spec.genus));
    if (spec.d < 2)
        throw ValidationError("map degree d must be >= 2, got " + std::to_string(spec.d));
    if (spec.q < 2 || !gf::is_prime(spec.q)) {
        // q = p^e: find p and check it is a prime power
        std::uint32_t p = 2;
        while (p <= spec.q && spec.q % p != 0)
            ++p;
        std::uint32_t r = spec.q;
        while (r % p == 0)
            r /= p;
        if (spec.q < 2 || r != 1)
            throw ValidationError("q must be a prime power, got " + std::to_string(spec.q));
    }
    if (spec.genus == 1) {
        const long double a = static_cast<long double>(spec.frobenius_trace);
        if (a * a > 4.0L * spec.q)
            throw ValidationError("Frobenius trace " + std::to_string(spec.frobenius_trace) + " violates the Hasse bound for q = "
                                  + std::to_string(spec.q));
    }
    if (spec.bad_places.size() > 20)
        throw ValidationError("too many bad places");
    for (const auto& bp : spec.bad_places) {
        if (bp.f_v == 0)
            throw ValidationError("residue degree f_v must be >= 1");
        if (bp.vf == 0 || bp.vf >= spec.d)
            throw ValidationError("v(f) < d violated: vf = " + std::to_string(bp.vf) + ", d = " + std::to_string(spec.d));
    }
}

ProblemSpec genus0_spec(const gf::Field& field, const gf::PolyFq& f, unsigned d)
{
    gf::PolyRing ring(field);
    heights::PhiSpec phi = heights::validate_phi(ring, f, d);
    ProblemSpec spec;
    spec.q = field.q();
    spec.genus = 0;
    spec.d = d;
    for (const auto& bp : phi.bad_places)
        spec.bad_places.push_back({bp.f_v, bp.vf});
    spec.source = GenusZeroSource{field, std::move(phi)};
    validate(spec);
    return spec;
}

QRatFunc dedekind_zeta(unsigned genus, std::uint32_t q, long frobenius_trace)
{
    if (genus > 1)
        throw ValidationError("dedekind_zeta: genus must be 0 or 1");
    const QPoly den = one_minus(1, 1) * one_minus(q, 1);
    QPoly num = QPoly::constant(1);
    if (genus == 1)
        num = QPoly{Rational(1), Rational(-frobenius_trace), Rational(q)};
    return QRatFunc(num, den, x_tag(q));
}

QRatFunc local_bad_factor(const Integer& q_v, unsigned vf, unsigned d)
{
    if (vf == 0 || vf >= d)
        throw ValidationError("local_bad_factor: need 0 < vf < d");
    const Rational qv(q_v);
    QPoly num = QPoly::monomial(1, vf) + QPoly::monomial(qv - 1, d) - QPoly::monomial(qv, d + vf);
    return QRatFunc(num, one_minus(1, d), VarTag{q_v, d});
}

QRatFunc adelic_integral(const ProblemSpec& spec)
{
    validate(spec);
    const VarTag tag = w_tag(spec);
    QRatFunc result = shifted_ratio(spec).substitute_power(spec.d, tag);
    for (const auto& bp : spec.bad_places) {
        const QRatFunc local = local_bad_factor(ipow(spec.q, bp.f_v), bp.vf, spec.d);
        result = result * local.substitute_power(bp.f_v, tag);
    }
    return result;
}

ZetaClosedForm assemble_zeta(const ProblemSpec& spec)
{
    const VarTag tag = w_tag(spec);
    QRatFunc main = adelic_integral(spec);
    QRatFunc correction = QRatFunc::constant(0, tag);
    const Rational c = c_of_genus(spec);
    if (c != 0) {
        const QRatFunc z = dedekind_zeta(spec.genus, spec.q, spec.frobenius_trace);
        correction = c * (QRatFunc::constant(1, tag) / z.substitute_power(spec.d, tag));
        for (const auto& bp : spec.bad_places) {
            // (u^vf - u^d)/(1 - u^d), u = w^f_v
            QPoly num = QPoly::monomial(1, bp.vf) - QPoly::monomial(1, spec.d);
            QRatFunc local(num, one_minus(1, spec.d), tag);
            correction = correction * local.substitute_power(bp.f_v, tag);
        }
    }
    QRatFunc combined = main + correction;
    return {std::move(main), std::move(correction), std::move(combined)};
}

QRatFunc partial_zeta_DU(const ProblemSpec& spec, PlaceSubset U)
{
    validate(spec);
    const VarTag tag = x_tag(spec.q);
    QRatFunc integral = shifted_ratio(spec);
    QPoly local_den = QPoly::constant(1);
    for (std::size_t i = 0; i < spec.bad_places.size(); ++i) {
        if (!(U >> i & 1u))
            continue;
        const auto& bp = spec.bad_places[i];
        const Rational qv(ipow(spec.q, bp.f_v));
        // (1 - q_v^(1-s)) / (1 - q_v^(-s))
        integral = integral * QRatFunc(one_minus(qv, bp.f_v), one_minus(1, bp.f_v), tag);
        local_den *= one_minus(1, bp.f_v);
    }
    const Rational c = c_of_genus(spec);
    if (c == 0)
        return integral;
    const QRatFunc z = dedekind_zeta(spec.genus, spec.q, spec.frobenius_trace);
    const QRatFunc correction = c * (QRatFunc::constant(1, tag) / (z * QRatFunc::poly(local_den, tag)));
    return integral + correction;
}

QRatFunc partial_zeta_DT(const ProblemSpec& spec, PlaceSubset T)
{
    const PlaceSubset all = spec.bad_places.size() >= 32 ? ~PlaceSubset{0}
                                                          : static_cast<PlaceSubset>((1ull << spec.bad_places.size()) - 1);
    const PlaceSubset rest = all & ~T;
    QRatFunc total = QRatFunc::constant(0, x_tag(spec.q));
    // enumerate U within S \ T
    PlaceSubset U = 0;
    while (true) {
        const QRatFunc term = partial_zeta_DU(spec, T | U);
        total = (std::popcount(U) % 2 == 0) ? total + term : total - term;
        if (U == rest)
            break;
        U = (U - rest) & rest;
    }
    return total;
}

CheckResult decomposition_check(const ProblemSpec& spec)
{
    const VarTag tag = w_tag(spec);
    const ZetaClosedForm z = assemble_zeta(spec);
    const std::size_t n = spec.bad_places.size();
    QRatFunc sum = QRatFunc::constant(0, tag);
    for (PlaceSubset T = 0; T < (PlaceSubset{1} << n); ++T) {
        unsigned shift = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (T >> i & 1u)
                shift += spec.bad_places[i].f_v * spec.bad_places[i].vf;
        const QRatFunc region = partial_zeta_DT(spec, T).substitute_power(spec.d, tag);
        sum = sum + QRatFunc::poly(QPoly::monomial(1, shift), tag) * region;
    }
    if (sum == z.combined)
        return {true, ""};
    return {false, "sum over regions = " + sum.to_string() + " but Z = " + z.combined.to_string()};
}

} // namespace hz::zeta
