#include "doctest.h"

#include "heightzeta/curve.hpp"
#include "heightzeta/error.hpp"
#include "support.hpp"

using namespace hz;
using namespace hz::zeta;
using qs::QPoly;
using qs::VarTag;
using test::QP;
using test::R;

namespace {

QRatFunc rf(QPoly num, QPoly den, VarTag tag)
{
    return QRatFunc(std::move(num), std::move(den), tag);
}

ProblemSpec inert_example()
{
    return test::genus1(5, 0, 2, {{2, 1}});
}

ProblemSpec split_example()
{
    return test::genus1(5, 0, 2, {{1, 1}, {1, 1}});
}

// Number of effective divisors of degree n on P^1 over F_q, by a knapsack
// over the places (finite irreducibles plus infinity).
std::vector<qs::Integer> effective_divisors(std::uint32_t q, unsigned n)
{
    const gf::PolyRing ring(gf::Field::prime(q));
    std::vector<unsigned> degs{1}; // infinity
    for (const auto& p : ring.irreducibles_up_to(n))
        degs.push_back(static_cast<unsigned>(p.degree()));
    std::vector<qs::Integer> ways(n + 1, 0);
    ways[0] = 1;
    for (unsigned dg : degs)
        for (unsigned k = dg; k <= n; ++k)
            ways[k] += ways[k - dg];
    return ways;
}

} // namespace

TEST_CASE("Dedekind zeta")
{
    const VarTag x5{5, 1};
    CHECK(dedekind_zeta(1, 5, 0) == rf(QP({"1", "0", "5"}), QP({"1", "-1"}) * QP({"1", "-5"}), x5));
    CHECK(dedekind_zeta(0, 5) == rf(QP({"1"}), QP({"1", "-1"}) * QP({"1", "-5"}), x5));
    const auto s = dedekind_zeta(0, 5).series(6);
    for (unsigned n = 0; n <= 6; ++n) {
        qs::Integer p5;
        mpz_pow_ui(p5.get_mpz_t(), qs::Integer(5).get_mpz_t(), n + 1);
        CHECK(s[n] == qs::Rational(qs::Integer((p5 - 1) / 4)));
    }
    CHECK(dedekind_zeta(0, 2).series(1)[1] == 3);
    CHECK_THROWS_AS(dedekind_zeta(2, 5), ValidationError);
}

TEST_CASE("Dedekind zeta counts effective divisors")
{
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const unsigned n = q == 5 ? 4 : 6;
        const auto ways = effective_divisors(q, n);
        const auto s = dedekind_zeta(0, q).series(n);
        for (unsigned k = 0; k <= n; ++k)
            CHECK(s[k] == qs::Rational(ways[k]));
    }
    // degree-1 places of an elliptic function field are the rational points
    const gf::Field F = gf::Field::prime(5);
    const gf::PolyRing ring(F);
    for (const char* h : {"t^3+3", "t^3+1", "t^3+t+1", "t^3+2t"}) {
        const auto poly = ring.parse(h);
        if (!curve::is_smooth_cubic(ring, poly))
            continue;
        const auto affine = curve::affine_point_count(F, poly);
        const long trace = curve::frobenius_trace(5, affine);
        const auto points = affine + 1;
        CHECK(dedekind_zeta(1, 5, trace).series(1)[1] == static_cast<long>(points));
    }
}

TEST_CASE("local bad factor")
{
    CHECK(local_bad_factor(5, 1, 2) == rf(QP({"0", "1", "5"}), QP({"1", "1"}), VarTag{5, 2}));
    CHECK(local_bad_factor(25, 1, 2) == rf(QP({"0", "1", "25"}), QP({"1", "1"}), VarTag{25, 2}));
    CHECK(local_bad_factor(2, 1, 2) == rf(QP({"0", "1", "2"}), QP({"1", "1"}), VarTag{2, 2}));
    CHECK_THROWS_AS(local_bad_factor(5, 2, 2), ValidationError);
    CHECK_THROWS_AS(local_bad_factor(5, 0, 2), ValidationError);
    // the displayed ratio for d = 3, vf = 2 without cancellation shortcuts
    const QPoly num = QP({"0", "0", "1", "4"}) - QPoly::monomial(5, 5);
    CHECK(local_bad_factor(5, 2, 3) == rf(num, QP({"1", "0", "0", "-1"}), VarTag{5, 3}));
}

TEST_CASE("adelic integral")
{
    ProblemSpec bare = test::genus0(5, "1", 2);
    REQUIRE(bare.bad_places.empty());
    const auto a = adelic_integral(bare);
    // in w: 5(1 - w^2)/(1 - 25 w^2)
    CHECK(a == rf(QP({"5", "0", "-5"}), QP({"1", "0", "-25"}), VarTag{5, 2}));
    CHECK(rf(QP({"5", "-5"}), QP({"1", "-25"}), VarTag{5, 1}).series(2) == test::Rs({"5", "120", "3000"}));

    // displayed first term of the inert example, x = 5^-s = w^2
    const VarTag w5{5, 2};
    const QPoly x = QP({"0", "0", "1"});
    const QPoly one = QP({"1"});
    const auto lhs = adelic_integral(inert_example());
    const auto rhs = rf(x * (one - x) * (one + Rational(25) * x) * (one + Rational(125) * x * x),
                        (one + x) * (one - Rational(25) * x) * (one + Rational(5) * x * x), w5);
    CHECK(lhs == rhs);
}

TEST_CASE("assembled zeta function")
{
    const auto g0 = assemble_zeta(test::genus0(5, "t", 2));
    CHECK(g0.combined == rf(QP({"0", "5", "-5"}), QP({"1", "-5"}), VarTag{5, 2}));
    CHECK(g0.correction_term.is_zero());

    const VarTag w5{5, 2};
    const QPoly u = QP({"0", "1"});
    const QPoly one = QP({"1"});
    const auto z_split = assemble_zeta(split_example());
    const auto main_split = rf(u * u * (one - u) * (one + Rational(5) * u) * (one + QPoly::monomial(125, 4)),
                           (one + u) * (one - Rational(5) * u) * (one + QPoly::monomial(5, 4)), w5);
    const auto corr_split = rf(Rational(4) * u * u * (one - u) * (one - QPoly::monomial(5, 2)),
                           (one + u) * (one + QPoly::monomial(5, 4)), w5);
    CHECK(z_split.main_term == main_split);
    CHECK(z_split.correction_term == corr_split);
    CHECK(z_split.combined == main_split + corr_split);

    // second term of the inert example with the substituted (1 - 5^(1-s))
    const QPoly x = QP({"0", "0", "1"});
    const auto z_inert = assemble_zeta(inert_example());
    CHECK(z_inert.correction_term
          == rf(Rational(4) * x * (one - x) * (one - Rational(5) * x), (one + x) * (one + Rational(5) * x * x), w5));
    CHECK(z_inert.combined == z_inert.main_term + z_inert.correction_term);
}

TEST_CASE("spec validation")
{
    CHECK_THROWS_AS(validate(test::genus1(5, 5, 2, {})), ValidationError); // |a| > 2 sqrt 5
    CHECK_THROWS_AS(validate(test::genus1(5, 0, 1, {})), ValidationError);
    CHECK_THROWS_AS(validate(test::genus1(5, 0, 2, {{1, 2}})), ValidationError);
    ProblemSpec g2 = test::genus1(5, 0, 2, {});
    g2.genus = 2;
    CHECK_THROWS_AS(validate(g2), ValidationError);
    CHECK_NOTHROW(validate(test::genus1(5, 4, 3, {{1, 2}})));
}

TEST_CASE("partial zeta functions")
{
    const auto s = test::genus0(5, "t", 2);
    const VarTag x5{5, 1};
    CHECK(partial_zeta_DU(s, 1) == rf(QP({"5", "-25"}), QP({"1", "-25"}), x5));
    CHECK(partial_zeta_DU(s, 1).series(1)[1] == 100);
    CHECK(partial_zeta_DU(s, 0) == rf(QP({"5", "-5"}), QP({"1", "-25"}), x5));
    CHECK(partial_zeta_DT(s, 0) == rf(QP({"0", "20"}), QP({"1", "-25"}), x5));
    CHECK(partial_zeta_DT(s, 0).series(2) == test::Rs({"0", "20", "500"}));
    CHECK(partial_zeta_DT(s, 1) == partial_zeta_DU(s, 1));

    // genus 1, U = {v} with q_v = 25: x = 5^-s, 25^-s = x^2
    const auto e = inert_example();
    const QPoly x = QP({"0", "1"});
    const QPoly one = QP({"1"});
    const auto ratio = rf((one + QPoly::monomial(125, 2)) * (one - x), (one - Rational(25) * x) * (one + QPoly::monomial(5, 2)), x5);
    const auto inv_zeta = rf((one - x) * (one - Rational(5) * x), one + QPoly::monomial(5, 2), x5);
    const auto expected = ratio * rf(one - QPoly::monomial(25, 2), one - QPoly::monomial(1, 2), x5)
                          + Rational(4) * inv_zeta * rf(one, one - QPoly::monomial(1, 2), x5);
    CHECK(partial_zeta_DU(e, 1) == expected);
}

TEST_CASE("regions partition the height zeta function")
{
    std::vector<ProblemSpec> specs{inert_example(), split_example(), test::genus1(3, 1, 3, {{1, 1}, {2, 2}, {1, 2}})};
    for (const auto& m : test::genus0_matrix())
        specs.push_back(test::genus0(m.q, m.f, m.d));
    for (const auto& s : specs) {
        QRatFunc sum = QRatFunc::constant(0, VarTag{s.q, 1});
        for (PlaceSubset T = 0; T < (PlaceSubset{1} << s.bad_places.size()); ++T)
            sum = sum + partial_zeta_DT(s, T);
        CHECK(sum == partial_zeta_DU(s, 0));
    }
}

TEST_CASE("decomposition identity")
{
    std::vector<ProblemSpec> specs{inert_example(), split_example(), test::genus0(5, "1", 2)};
    for (const auto& m : test::genus0_matrix())
        specs.push_back(test::genus0(m.q, m.f, m.d));
    std::mt19937_64 rng(41);
    for (int i = 0; i < 20; ++i) {
        const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 4, 5, 7, 9}[rng() % 6];
        const unsigned d = 2 + static_cast<unsigned>(rng() % 3);
        const long bound = static_cast<long>(std::floor(2 * std::sqrt(double(q))));
        const long trace = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
        std::vector<BadPlaceData> bad;
        for (unsigned k = static_cast<unsigned>(rng() % 4); k > 0; --k)
            bad.push_back({1 + static_cast<unsigned>(rng() % 3), 1 + static_cast<unsigned>(rng() % (d - 1))});
        specs.push_back(test::genus1(q, trace, d, bad));
    }
    for (const auto& s : specs) {
        const auto r = decomposition_check(s);
        CHECK_MESSAGE(r.ok, r.detail);
    }
}

TEST_CASE("constant term of the series")
{
    for (const auto& m : test::genus0_matrix())
        CHECK(assemble_zeta(test::genus0(m.q, m.f, m.d)).combined.series(0)[0] == 0);
    CHECK(assemble_zeta(test::genus0(5, "1", 2)).combined.series(0)[0] == 5);
    CHECK(assemble_zeta(test::genus0(3, "2", 3)).combined.series(0)[0] == 3);
    CHECK(assemble_zeta(test::genus1(5, 2, 2, {})).combined.series(0)[0] == 5);
    CHECK(assemble_zeta(inert_example()).combined.series(0)[0] == 0);
}
