#include "heightzeta/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heightzeta/error.hpp"

namespace hz::asym {

using qs::QPoly;

namespace {

constexpr unsigned kTableMax = 64;

using Series = std::vector<Rational>;

Rational factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Series series_mul(const Series& a, const Series& b, std::size_t len)
{
    Series out(len, Rational(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

Series series_inv(const Series& a, std::size_t len)
{
    if (a.empty() || a[0] == 0)
        throw std::domain_error("series_inv: zero constant term");
    Series out(len, Rational(0));
    const Rational inv0 = 1 / a[0];
    for (std::size_t n = 0; n < len; ++n) {
        Rational acc = n == 0 ? Rational(1) : Rational(0);
        for (std::size_t j = 1; j <= n && j < a.size(); ++j)
            acc -= a[j] * out[n - j];
        out[n] = acc * inv0;
    }
    return out;
}

struct Tables {
    std::vector<std::vector<Integer>> stirling;
    std::vector<Rational> bernoulli;
};

const Tables& tables()
{
    static const Tables t = [] {
        Tables r;
        r.stirling.assign(kTableMax + 1, std::vector<Integer>(kTableMax + 1, Integer(0)));
        r.stirling[0][0] = 1;
        for (unsigned n = 1; n <= kTableMax; ++n)
            for (unsigned k = 1; k <= n; ++k)
                r.stirling[n][k] = Integer(k) * r.stirling[n - 1][k] + r.stirling[n - 1][k - 1];
        // (e^x - 1)/x = sum x^j/(j+1)!
        Series g(kTableMax + 1);
        for (unsigned j = 0; j <= kTableMax; ++j)
            g[j] = 1 / factorial(j + 1);
        const Series inv = series_inv(g, kTableMax + 1);
        r.bernoulli.resize(kTableMax + 1);
        for (unsigned n = 0; n <= kTableMax; ++n)
            r.bernoulli[n] = inv[n] * factorial(n);
        return r;
    }();
    return t;
}

} // namespace

Integer stirling2(unsigned n, unsigned k)
{
    if (n > kTableMax || k > n)
        throw std::out_of_range("stirling2: need 0 <= k <= n <= 64");
    return tables().stirling[n][k];
}

Rational bernoulli(unsigned n)
{
    if (n > kTableMax)
        throw std::out_of_range("bernoulli: n <= 64");
    return tables().bernoulli[n];
}

IdentityResult stirling_bernoulli_check(unsigned n, unsigned M)
{
    if (n < 1 || M > 40)
        throw std::out_of_range("stirling_bernoulli_check: need n >= 1 and M <= 40");
    // Both sides times x^n are power series; compare through x^(n+M).
    const std::size_t len = n + M + 1;
    // h = (1 - e^(-x))/x, so 1/(1 - e^(-x))^k = x^(-k) h^(-k)
    Series h(len);
    for (std::size_t j = 0; j < len; ++j)
        h[j] = (j % 2 ? Rational(-1) : Rational(1)) / factorial(static_cast<unsigned>(j + 1));
    const Series hinv = series_inv(h, len);
    const Rational nfact = factorial(n - 1);

    Series lhs(len, Rational(0));
    Series hpow(len, Rational(0));
    hpow[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        hpow = series_mul(hpow, hinv, len);
        Rational coef = factorial(k - 1) / nfact * Rational(stirling2(n, k));
        if ((n + k) % 2)
            coef = -coef;
        for (std::size_t j = 0; j + (n - k) < len; ++j)
            lhs[j + n - k] += coef * hpow[j];
    }

    Series rhs(len, Rational(0));
    rhs[0] = 1;
    for (unsigned m = 0; m + n < len; ++m) {
        Rational term = bernoulli(m + n) / Rational(m + n) / factorial(m) / nfact;
        if (m % 2)
            term = -term;
        rhs[m + n] -= term;
    }

    for (std::size_t j = 0; j < len; ++j)
        if (lhs[j] != rhs[j])
            return {false, static_cast<int>(j) - static_cast<int>(n)};
    return {true, std::nullopt};
}

bool stirling_pochhammer_check(unsigned n, unsigned xmax)
{
    if (n < 1 || n > 12)
        throw std::out_of_range("stirling_pochhammer_check: need 1 <= n <= 12");
    for (unsigned x = 0; x <= xmax; ++x) {
        Integer lhs;
        mpz_ui_pow_ui(lhs.get_mpz_t(), x, n);
        Integer rhs = 0;
        Integer rising = 1;
        for (unsigned k = 1; k <= n; ++k) {
            rising *= x + k - 1;
            const Integer term = stirling2(n, k) * rising;
            rhs += (n - k) % 2 ? Integer(-term) : term;
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

AsymptoticReport build_report(const QRatFunc& Z)
{
    if (Z.den().coeff(0) == 0)
        throw ValidationError("zeta function has a pole at w = 0");
    AsymptoticReport r;
    auto norm = qs::exponent_gcd_normalize(Z);
    r.alpha_exponent = norm.e;
    r.reduced = std::move(norm.reduced);
    r.pole_records = qs::unit_disk_poles(r.reduced, r.alpha_exponent);
    for (auto& rec : r.pole_records)
        rec.laurent = qs::laurent_at_pole(r.reduced, rec);
    auto split = qs::principal_part_split(r.reduced, r.pole_records);
    r.principal = std::move(split.principal);
    r.remainder = std::move(split.remainder);

    r.decay_base = 0;
    if (r.remainder.den().degree() > 0) {
        double min_mod = INFINITY;
        for (const auto& z : qs::numeric_roots(r.remainder.den()))
            min_mod = std::min(min_mod, std::abs(z));
        if (!(min_mod > 1))
            throw IdentityError("remainder has a pole in the closed unit disk");
        r.decay_base = 1 / min_mod;
    }
    return r;
}

Rational predicted_coefficient(const AsymptoticReport& report, long long m)
{
    Rational p = 0;
    for (const auto& rec : report.pole_records)
        p += qs::orbit_contribution(rec, m);
    return p;
}

Rational main_term(const AsymptoticReport& report, long long k)
{
    if (k < 0)
        throw ValidationError("main_term: bound exponent must be >= 0");
    const long long top = k / report.alpha_exponent;
    Rational total = 0;
    for (long long m = 0; m <= top; ++m)
        total += predicted_coefficient(report, m);
    return total;
}

RemainderResult remainder_check(const AsymptoticReport& report, unsigned M)
{
    if (M > 200)
        throw std::out_of_range("remainder_check: M <= 200");
    RemainderResult res;
    const auto a = report.reduced.series(M);
    const auto g = report.remainder.series(M);
    res.differences.resize(M + 1);
    bool exact = true;
    for (unsigned m = 0; m <= M; ++m) {
        res.differences[m] = a[m] - predicted_coefficient(report, m);
        if (res.differences[m] != g[m])
            exact = false;
        res.max_abs = std::max(res.max_abs, std::abs(res.differences[m].get_d()));
    }

    bool decays = true;
    if (report.remainder.den().degree() < 1) {
        // polynomial remainder: differences vanish past its degree
        const int deg = report.remainder.num().degree();
        for (unsigned m = 0; m <= M; ++m)
            if (static_cast<int>(m) > deg && res.differences[m] != 0)
                decays = false;
        // any ratio works for a finite sequence
        const double rho = report.decay_base > 0 ? std::sqrt(report.decay_base) : 0.5;
        res.envelope_ratio = rho;
        for (unsigned m = 0; m <= M && static_cast<int>(m) <= deg; ++m)
            res.envelope_constant = std::max(res.envelope_constant, std::abs(res.differences[m].get_d()) / std::pow(rho, m));
    } else {
        const double rho = std::sqrt(report.decay_base);
        res.envelope_ratio = rho;
        double C = 0;
        for (unsigned m = 0; m <= M / 2; ++m)
            C = std::max(C, std::abs(res.differences[m].get_d()) / std::pow(rho, m));
        res.envelope_constant = C;
        for (unsigned m = 0; m <= M; ++m)
            if (std::abs(res.differences[m].get_d()) > C * std::pow(rho, m) * (1 + 1e-12))
                decays = false;
    }
    res.ok = exact && decays && report.decay_base < 1;
    return res;
}

} // namespace hz::asym
