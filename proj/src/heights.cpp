#include "heightzeta/heights.hpp"

#include <algorithm>
#include <string>

#include "heightzeta/error.hpp"

namespace hz::heights {

Valuation valuation(const gf::PolyRing& ring, const gf::RatFuncFq& x, const Place& v)
{
    if (x.is_zero())
        return std::nullopt;
    if (v.kind == Place::Kind::infinite)
        return static_cast<long>(x.den.degree()) - x.num.degree();
    return static_cast<long>(ring.order(x.num, v.pi)) - static_cast<long>(ring.order(x.den, v.pi));
}

unsigned standard_height_exp(const gf::RatFuncFq& x)
{
    return static_cast<unsigned>(std::max({x.num.degree(), x.den.degree(), 0}));
}

PhiSpec validate_phi(const gf::PolyRing& ring, const gf::PolyFq& f, unsigned d)
{
    if (d < 2)
        throw ValidationError("map degree d must be >= 2, got " + std::to_string(d));
    if (f.is_zero())
        throw ValidationError("f must be nonzero");
    PhiSpec spec{d, f, {}};
    for (const auto& entry : ring.factor(f).factors) {
        if (entry.multiplicity >= d)
            throw ValidationError("v(f) < d violated at " + ring.to_string(entry.factor));
        spec.bad_places.push_back(
            {Place::finite(entry.factor), static_cast<unsigned>(entry.factor.degree()), entry.multiplicity});
    }
    return spec;
}

unsigned local_correction_num(const Valuation& vx, const BadPlace& bp)
{
    const bool integral = !vx.has_value() || *vx >= 0;
    return integral ? bp.f_v * bp.vf : 0u;
}

unsigned local_correction_num(const gf::PolyRing& ring, const gf::RatFuncFq& x, const BadPlace& bp)
{
    return local_correction_num(valuation(ring, x, bp.place), bp);
}

HeightExponent canonical_height_exp(const PhiSpec& spec, unsigned standard_height,
                                    const std::vector<Valuation>& bad_valuations)
{
    std::uint64_t m = static_cast<std::uint64_t>(spec.d) * standard_height;
    for (std::size_t i = 0; i < spec.bad_places.size(); ++i)
        m += local_correction_num(bad_valuations[i], spec.bad_places[i]);
    return {m};
}

HeightExponent canonical_height_exp(const gf::PolyRing& ring, const gf::RatFuncFq& x, const PhiSpec& spec)
{
    std::vector<Valuation> vals;
    vals.reserve(spec.bad_places.size());
    for (const auto& bp : spec.bad_places)
        vals.push_back(valuation(ring, x, bp.place));
    return canonical_height_exp(spec, standard_height_exp(x), vals);
}

} // namespace hz::heights
