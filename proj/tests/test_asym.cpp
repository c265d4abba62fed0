#include "doctest.h"

#include <cmath>

#include "heightzeta/asymptotics.hpp"
#include "heightzeta/error.hpp"
#include "support.hpp"

using namespace hz;
using namespace hz::asym;
using qs::QPoly;
using qs::VarTag;
using test::QP;
using test::R;

namespace {

Integer binom(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer ipow(long b, unsigned e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(b).get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& b, unsigned e)
{
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= b;
    return r;
}

// S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n
Integer stirling_explicit(unsigned n, unsigned k)
{
    Integer s = 0;
    for (unsigned j = 0; j <= k; ++j) {
        const Integer t = binom(k, j) * ipow(static_cast<long>(k - j), n);
        s += (j % 2 ? -t : t);
    }
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return s / f;
}

AsymptoticReport report_for(const zeta::ProblemSpec& s)
{
    return build_report(zeta::assemble_zeta(s).combined);
}

} // namespace

TEST_CASE("Stirling numbers of the second kind")
{
    for (unsigned n = 0; n <= 10; ++n)
        CHECK(stirling2(n, n) == 1);
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(stirling2(n, 0) == 0);
    CHECK(stirling2(4, 2) == 7);
    for (unsigned n = 1; n <= 30; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(stirling2(n, k) == stirling_explicit(n, k));
    CHECK_THROWS(stirling2(65, 1));
    CHECK_THROWS(stirling2(3, 4));
}

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == R("-1/2"));
    CHECK(bernoulli(2) == R("1/6"));
    CHECK(bernoulli(12) == R("-691/2730"));
    for (unsigned n = 3; n <= 63; n += 2)
        CHECK(bernoulli(n) == 0);
    for (unsigned n = 1; n <= 63; ++n) {
        Rational s = 0;
        for (unsigned k = 0; k <= n; ++k)
            s += Rational(binom(n + 1, k)) * bernoulli(k);
        CHECK(s == 0);
    }
}

TEST_CASE("Stirling-Bernoulli identity")
{
    CHECK(stirling_bernoulli_check(1, 6).ok);
    CHECK(stirling_bernoulli_check(2, 10).ok);
    CHECK(stirling_bernoulli_check(5, 20).ok);
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(stirling_bernoulli_check(n, 20).ok);
}

TEST_CASE("Stirling expansion in rising factorials")
{
    CHECK(stirling_pochhammer_check(1, 5));
    CHECK(stirling_pochhammer_check(3, 2));
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(stirling_pochhammer_check(n, 20));
}

TEST_CASE("predicted coefficients")
{
    const auto g0 = report_for(test::genus0(5, "t", 2));
    for (unsigned m = 0; m <= 12; ++m)
        CHECK(predicted_coefficient(g0, m) == Rational(4) * rpow(5, m) / 5);

    const auto geo = build_report(qs::QRatFunc(QP({"1"}), QP({"1", "-1"}), VarTag{3, 2}));
    for (unsigned m = 0; m <= 5; ++m)
        CHECK(predicted_coefficient(geo, m) == 1);

    // inert example: the conjugate pair at Re 1/2 sums to 92/7 (-5)^j for
    // m = 2j and 60/7 (-5)^j for m = 2j + 1
    const auto inert = report_for(test::genus1(5, 0, 2, {{2, 1}}));
    CHECK(inert.alpha_exponent == 2);
    for (unsigned m = 0; m <= 30; ++m) {
        const Rational pair = (m % 2 == 0 ? R("92/7") : R("60/7")) * rpow(-5, m / 2);
        const Rational expected = R("8/91") * rpow(25, m) + pair + R("400/13") * (m % 2 ? -1 : 1);
        CHECK(predicted_coefficient(inert, m) == expected);
    }
}

TEST_CASE("main term")
{
    const auto g0 = report_for(test::genus0(5, "t", 2));
    // sum_{m <= 6} 4 * 5^(m-1)
    CHECK(main_term(g0, 6) == Rational(ipow(5, 7) - 1, 5));
    CHECK(main_term(g0, 0) == predicted_coefficient(g0, 0));
    CHECK_THROWS_AS(main_term(g0, -1), ValidationError);

    const auto inert = report_for(test::genus1(5, 0, 2, {{2, 1}}));
    // B = 5^j is k = 2j; leading behaviour 25/273 * 25^j
    const Rational ratio = main_term(inert, 40) / rpow(25, 20);
    CHECK(ratio.get_d() == doctest::Approx(25.0 / 273.0).epsilon(1e-9));
    // odd k adds nothing beyond k - 1 when e = 2
    CHECK(main_term(inert, 7) == main_term(inert, 6));
}

TEST_CASE("remainder check")
{
    const auto g0 = report_for(test::genus0(5, "t", 2));
    const auto r = remainder_check(g0, 20);
    CHECK(r.ok);
    CHECK(r.differences[0] == R("-4/5"));
    CHECK(r.differences[1] == 1);
    for (unsigned m = 2; m <= 20; ++m)
        CHECK(r.differences[m] == 0);
    CHECK(g0.remainder == qs::QRatFunc::poly(QP({"-4/5", "1"}), VarTag{5, 2}));

    const auto geo = build_report(qs::QRatFunc(QP({"1"}), QP({"1", "-1"}), VarTag{3, 2}));
    for (const auto& d : remainder_check(geo, 10).differences)
        CHECK(d == 0);

    for (const auto& s : {test::genus1(5, 0, 2, {{1, 1}, {1, 1}}), test::genus1(5, 0, 2, {{2, 1}}),
                          test::genus1(7, -3, 3, {{1, 2}, {2, 1}})}) {
        const auto rep = report_for(s);
        const auto rc = remainder_check(rep, 60);
        CHECK(rc.ok);
        CHECK(rep.decay_base < 1);
        // envelope really bounds every difference
        for (unsigned m = 0; m <= 60; ++m)
            CHECK(std::abs(rc.differences[m].get_d()) <= rc.envelope_constant * std::pow(rc.envelope_ratio, m) * (1 + 1e-9) + 1e-12);
    }
}

TEST_CASE("genus-0 matrix reports")
{
    for (const auto& m : test::genus0_matrix()) {
        const auto rep = report_for(test::genus0(m.q, m.f, m.d));
        CHECK(remainder_check(rep, 40).ok);
        // remainder denominator roots lie outside the closed unit disk
        if (rep.remainder.den().degree() > 0)
            for (auto z : qs::numeric_roots(rep.remainder.den()))
                CHECK(std::abs(z) > 1);
        // past deg G for polynomial G, predictions are exact
        if (rep.remainder.den().degree() == 0) {
            const auto a = rep.reduced.series(30);
            for (int k = std::max(0, rep.remainder.num().degree() + 1); k <= 30; ++k)
                CHECK(a[static_cast<std::size_t>(k)] == predicted_coefficient(rep, k));
        }
    }
}

TEST_CASE("report rejects functions with a pole at zero")
{
    CHECK_THROWS(build_report(qs::QRatFunc(QP({"1"}), QP({"0", "1"}), VarTag{5, 2})));
}
