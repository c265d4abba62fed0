#include "heightzeta/curve.hpp"

#include <string>

#include "heightzeta/error.hpp"

namespace hz::curve {

namespace {

void require_odd(const gf::Field& field)
{
    if (field.p() == 2)
        throw ValidationError("characteristic 2 is not supported");
}

} // namespace

std::uint64_t affine_point_count(const gf::Field& field, const gf::PolyFq& h)
{
    require_odd(field);
    if (h.degree() != 3)
        throw ValidationError("curve polynomial must be a cubic");
    const gf::PolyRing ring(field);
    // roots[c] = #{y : y^2 = c}
    std::vector<std::uint32_t> roots(field.q(), 0);
    for (std::uint32_t i = 0; i < field.q(); ++i) {
        const gf::Fq y = field.element(i);
        ++roots[field.mul(y, y).v];
    }
    std::uint64_t count = 0;
    for (std::uint32_t i = 0; i < field.q(); ++i)
        count += roots[ring.eval(h, field.element(i)).v];
    return count;
}

long frobenius_trace(std::uint32_t q, std::uint64_t affine_count)
{
    const long a = static_cast<long>(q) - static_cast<long>(affine_count);
    if (static_cast<long double>(a) * a > 4.0L * q)
        throw ValidationError("Hasse bound violated: trace " + std::to_string(a) + " for q = " + std::to_string(q)
                              + " (singular curve or miscount)");
    return a;
}

bool is_smooth_cubic(const gf::PolyRing& ring, const gf::PolyFq& h)
{
    if (h.degree() != 3)
        return false;
    return ring.gcd(h, ring.derivative(h)).degree() == 0;
}

std::string to_string(Splitting s)
{
    switch (s) {
    case Splitting::split:
        return "split";
    case Splitting::inert:
        return "inert";
    case Splitting::ramified:
        return "ramified";
    }
    return "?";
}

SplittingResult splitting_type(const gf::PolyRing& ring, const gf::PolyFq& h, const gf::PolyFq& pi)
{
    require_odd(ring.field());
    if (pi.degree() < 1 || !ring.is_irreducible(pi))
        throw ValidationError("splitting_type: pi must be irreducible");
    const unsigned deg = static_cast<unsigned>(pi.degree());
    switch (ring.residue_square_class(h, pi)) {
    case gf::SquareClass::square:
        return {Splitting::split, {{deg, 1}, {deg, 1}}};
    case gf::SquareClass::nonsquare:
        return {Splitting::inert, {{2 * deg, 1}}};
    case gf::SquareClass::zero:
        break;
    }
    return {Splitting::ramified, {{deg, 2}}};
}

zeta::ProblemSpec build_genus1_spec(const gf::Field& field, const gf::PolyFq& h, const gf::PolyFq& f, unsigned d)
{
    require_odd(field);
    const gf::PolyRing ring(field);
    if (!is_smooth_cubic(ring, h))
        throw ValidationError("h = " + ring.to_string(h) + " does not define a smooth cubic");
    if (f.degree() < 1)
        throw ValidationError("f must be nonconstant");
    if (d < 2)
        throw ValidationError("map degree d must be >= 2, got " + std::to_string(d));

    zeta::ProblemSpec spec;
    spec.q = field.q();
    spec.genus = 1;
    spec.d = d;
    spec.frobenius_trace = frobenius_trace(field.q(), affine_point_count(field, h));
    for (const auto& entry : ring.factor(f).factors) {
        const SplittingResult s = splitting_type(ring, h, entry.factor);
        for (const auto& place : s.places) {
            const unsigned vf = place.e * entry.multiplicity;
            if (vf >= d)
                throw ValidationError(to_string(s.kind) + " place above " + ring.to_string(entry.factor)
                                      + " gives v(f) = " + std::to_string(vf) + ", violating v(f) < d = "
                                      + std::to_string(d));
            spec.bad_places.push_back({place.f_v, vf});
        }
    }
    zeta::validate(spec);
    return spec;
}

} // namespace hz::curve
