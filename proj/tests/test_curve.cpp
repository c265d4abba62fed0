#include "doctest.h"

#include <cmath>

#include "heightzeta/curve.hpp"
#include "heightzeta/error.hpp"
#include "support.hpp"

using namespace hz;
using curve::Splitting;

namespace {

// #{(x, y)} by trying every pair.
std::uint64_t brute_points(const gf::Field& F, const gf::PolyRing& R, const gf::PolyFq& h)
{
    std::uint64_t c = 0;
    for (std::uint32_t x = 0; x < F.q(); ++x) {
        const auto hx = R.eval(h, F.element(x));
        for (std::uint32_t y = 0; y < F.q(); ++y)
            if (F.mul(F.element(y), F.element(y)) == hx)
                ++c;
    }
    return c;
}

// Is h a square modulo pi, searched exhaustively over F_q[t]/(pi)?
Splitting brute_splitting(const gf::Field& F, const gf::PolyRing& R, const gf::PolyFq& h, const gf::PolyFq& pi)
{
    const auto r = R.mod(h, pi);
    if (r.is_zero())
        return Splitting::ramified;
    const unsigned k = static_cast<unsigned>(pi.degree());
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i)
        total *= F.q();
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::vector<gf::Fq> c;
        for (std::uint64_t v = idx, i = 0; i < k; ++i, v /= F.q())
            c.push_back(F.element(static_cast<std::uint32_t>(v % F.q())));
        const gf::PolyFq z(c);
        if (R.mod(R.mul(z, z), pi) == r)
            return Splitting::split;
    }
    return Splitting::inert;
}

} // namespace

TEST_CASE("affine point counts")
{
    const auto F5 = gf::Field::prime(5);
    const gf::PolyRing R5(F5);
    CHECK(curve::affine_point_count(F5, R5.parse("t^3+3")) == 5);
    CHECK(curve::affine_point_count(F5, R5.parse("t^3+1")) == 5);
    const auto F3 = gf::Field::prime(3);
    CHECK(curve::affine_point_count(F3, gf::PolyRing(F3).parse("t^3+1")) == 3);
    const auto F2 = gf::Field::prime(2);
    CHECK_THROWS_AS(curve::affine_point_count(F2, gf::PolyRing(F2).parse("t^3+1")), ValidationError);
    CHECK_THROWS_AS(curve::affine_point_count(F5, R5.parse("t^2+1")), ValidationError);
}

TEST_CASE("Frobenius trace")
{
    CHECK(curve::frobenius_trace(5, 5) == 0);
    CHECK(curve::frobenius_trace(5, 9) == -4);
    CHECK_THROWS_AS(curve::frobenius_trace(5, 0), ValidationError);
}

TEST_CASE("point counts and Hasse bound over all cubics")
{
    for (const auto& F : {gf::Field::prime(3), gf::Field::prime(5), gf::Field::prime(7), gf::Field::extension(3, {1, 0, 1})}) {
        const gf::PolyRing R(F);
        std::uint64_t smooth = 0;
        for (std::uint32_t a = 0; a < F.q(); ++a)
            for (std::uint32_t b = 0; b < F.q(); ++b)
                for (std::uint32_t c = 0; c < F.q(); ++c) {
                    const gf::PolyFq h({F.element(c), F.element(b), F.element(a), F.one()});
                    const auto n = curve::affine_point_count(F, h);
                    CHECK(n == brute_points(F, R, h));
                    if (!curve::is_smooth_cubic(R, h))
                        continue;
                    ++smooth;
                    const long trace = curve::frobenius_trace(F.q(), n);
                    CHECK(static_cast<double>(trace * trace) <= 4.0 * F.q());
                }
        CHECK(smooth > 0);
    }
}

TEST_CASE("splitting types")
{
    const auto F5 = gf::Field::prime(5);
    const gf::PolyRing R(F5);
    const auto t = R.t();
    const auto inert = curve::splitting_type(R, R.parse("t^3+3"), t);
    CHECK(inert.kind == Splitting::inert);
    REQUIRE(inert.places.size() == 1);
    CHECK(inert.places[0].f_v == 2);
    CHECK(inert.places[0].e == 1);

    const auto split = curve::splitting_type(R, R.parse("t^3+1"), t);
    CHECK(split.kind == Splitting::split);
    REQUIRE(split.places.size() == 2);
    CHECK(split.places[0].f_v == 1);
    CHECK(split.places[1].f_v == 1);

    const auto ram = curve::splitting_type(R, R.parse("t^3+t"), t);
    CHECK(ram.kind == Splitting::ramified);
    REQUIRE(ram.places.size() == 1);
    CHECK(ram.places[0].e == 2);
    CHECK(curve::to_string(Splitting::inert) == "inert");

    CHECK_THROWS_AS(curve::splitting_type(R, R.parse("t^3+1"), R.parse("t^2")), ValidationError);
}

TEST_CASE("splitting agrees with exhaustive square search")
{
    for (const auto& F : {gf::Field::prime(3), gf::Field::prime(5), gf::Field::prime(7)}) {
        const gf::PolyRing R(F);
        for (const char* hs : {"t^3+1", "t^3+2t+1", "t^3+t^2+2"}) {
            const auto h = R.parse(hs);
            for (const auto& pi : R.irreducibles_up_to(2)) {
                const auto s = curve::splitting_type(R, h, pi);
                CHECK(s.kind == brute_splitting(F, R, h, pi));
                unsigned deg_sum = 0;
                for (const auto& p : s.places)
                    deg_sum += p.f_v * p.e;
                CHECK(deg_sum == 2 * static_cast<unsigned>(pi.degree()));
            }
        }
    }
}

TEST_CASE("linear places account for the affine points")
{
    for (const auto& F : {gf::Field::prime(3), gf::Field::prime(5), gf::Field::prime(7)}) {
        const gf::PolyRing R(F);
        for (const char* hs : {"t^3+1", "t^3+3", "t^3+t+1", "t^3+2t"}) {
            const auto h = R.parse(hs);
            std::uint64_t points = 0;
            for (std::uint32_t c = 0; c < F.q(); ++c) {
                const auto pi = R.sub(R.t(), gf::PolyFq({F.element(c)}));
                switch (curve::splitting_type(R, h, pi).kind) {
                case Splitting::split: points += 2; break;
                case Splitting::ramified: points += 1; break;
                case Splitting::inert: break;
                }
            }
            CHECK(points == curve::affine_point_count(F, h));
        }
    }
}

TEST_CASE("genus-1 specs from curve data")
{
    const auto F5 = gf::Field::prime(5);
    const gf::PolyRing R(F5);
    const auto s_inert = curve::build_genus1_spec(F5, R.parse("t^3+3"), R.t(), 2);
    CHECK(s_inert.genus == 1);
    CHECK(s_inert.frobenius_trace == 0);
    CHECK(s_inert.bad_places == std::vector<zeta::BadPlaceData>{{2, 1}});

    const auto s_split = curve::build_genus1_spec(F5, R.parse("t^3+1"), R.t(), 2);
    CHECK(s_split.bad_places == std::vector<zeta::BadPlaceData>{{1, 1}, {1, 1}});

    CHECK_THROWS_WITH_AS(curve::build_genus1_spec(F5, R.parse("t^3+t"), R.t(), 2),
                         "ramified place above t gives v(f) = 2, violating v(f) < d = 2", ValidationError);
    CHECK_NOTHROW(curve::build_genus1_spec(F5, R.parse("t^3+t"), R.t(), 3));
    CHECK_THROWS_AS(curve::build_genus1_spec(F5, R.parse("t^3"), R.t(), 2), ValidationError);
    CHECK_THROWS_AS(curve::build_genus1_spec(F5, R.parse("t^3+1"), R.parse("3"), 2), ValidationError);
}
