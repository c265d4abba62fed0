#include "heightzeta/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "heightzeta/curve.hpp"
#include "heightzeta/error.hpp"

namespace hz::io {

using qs::Integer;
using qs::QPoly;
using qs::Rational;

namespace {

json integer_to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

long long get_int(const json& j, const char* key)
{
    const auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(std::string("missing field \"") + key + "\"");
    if (!it->is_number_integer())
        throw ValidationError(std::string("field \"") + key + "\" must be an integer");
    return it->get<long long>();
}

std::string get_string(const json& j, const char* key)
{
    const auto& v = j.at(key);
    if (!v.is_string())
        throw ValidationError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

unsigned to_unsigned(long long v, const char* what)
{
    if (v < 0 || v > 1'000'000)
        throw ValidationError(std::string(what) + " out of range: " + std::to_string(v));
    return static_cast<unsigned>(v);
}

} // namespace

gf::Field make_field(std::uint32_t q, const std::string& base_modulus)
{
    if (q < 2)
        throw ValidationError("q must be a prime power, got " + std::to_string(q));
    std::uint32_t p = 2;
    while (q % p != 0)
        ++p;
    unsigned e = 0;
    for (std::uint32_t r = q; r > 1; r /= p) {
        if (r % p != 0)
            throw ValidationError("q must be a prime power, got " + std::to_string(q));
        ++e;
    }
    if (e == 1) {
        if (!base_modulus.empty())
            throw ValidationError("base_modulus given for a prime q");
        return gf::Field::prime(p);
    }
    const gf::PolyRing base(gf::Field::prime(p));
    gf::PolyFq mod;
    if (base_modulus.empty()) {
        for (const auto& cand : base.irreducibles_up_to(e))
            if (cand.degree() == static_cast<int>(e)) {
                mod = cand;
                break;
            }
    } else {
        mod = base.parse(base_modulus, 'y');
        if (mod.degree() != static_cast<int>(e))
            throw ValidationError("base_modulus must have degree " + std::to_string(e));
    }
    std::vector<std::uint32_t> coeffs;
    for (const auto& c : mod.c)
        coeffs.push_back(c.v);
    return gf::Field::extension(p, std::move(coeffs));
}

zeta::ProblemSpec spec_from_json(const json& j)
{
    try {
        if (!j.is_object())
            throw ValidationError("spec must be a JSON object");
        static const std::set<std::string> known{"q", "genus", "frobenius_trace", "d", "f", "bad_places", "base_modulus", "h"};
        for (const auto& [key, value] : j.items())
            if (!known.count(key))
                throw ValidationError("unknown spec field \"" + key + "\"");

        const long long q_raw = get_int(j, "q");
        if (q_raw < 2 || q_raw > (1 << 20))
            throw ValidationError("q out of range: " + std::to_string(q_raw));
        const auto q = static_cast<std::uint32_t>(q_raw);
        const long long genus = get_int(j, "genus");
        if (genus != 0 && genus != 1)
            throw ValidationError("genus must be 0 or 1");
        const unsigned d = to_unsigned(get_int(j, "d"), "d");
        const bool has_f = j.contains("f");
        const bool has_bad = j.contains("bad_places");
        if (has_f == has_bad)
            throw ValidationError("exactly one of \"f\" and \"bad_places\" must be given");
        const std::string modulus = j.contains("base_modulus") ? get_string(j, "base_modulus") : std::string();

        if (has_f) {
            const gf::Field field = make_field(q, modulus);
            const gf::PolyRing ring(field);
            const gf::PolyFq f = ring.parse(get_string(j, "f"));
            if (genus == 0) {
                if (j.contains("h"))
                    throw ValidationError("\"h\" only applies to genus 1");
                if (j.contains("frobenius_trace"))
                    throw ValidationError("\"frobenius_trace\" only applies to genus 1");
                return zeta::genus0_spec(field, f, d);
            }
            if (!j.contains("h"))
                throw ValidationError("genus 1 with \"f\" needs the curve polynomial \"h\"");
            zeta::ProblemSpec spec = curve::build_genus1_spec(field, ring.parse(get_string(j, "h")), f, d);
            if (j.contains("frobenius_trace") && get_int(j, "frobenius_trace") != spec.frobenius_trace)
                throw ValidationError("frobenius_trace disagrees with the point count of h");
            return spec;
        }

        if (j.contains("h"))
            throw ValidationError("\"h\" needs \"f\"");
        zeta::ProblemSpec spec;
        spec.q = q;
        spec.genus = static_cast<unsigned>(genus);
        spec.d = d;
        if (genus == 1) {
            spec.frobenius_trace = static_cast<long>(get_int(j, "frobenius_trace"));
        } else if (j.contains("frobenius_trace")) {
            throw ValidationError("\"frobenius_trace\" only applies to genus 1");
        }
        const auto& bad = j.at("bad_places");
        if (!bad.is_array())
            throw ValidationError("\"bad_places\" must be an array");
        for (const auto& bp : bad) {
            if (!bp.is_object())
                throw ValidationError("each bad place must be an object {\"f_v\", \"vf\"}");
            spec.bad_places.push_back({to_unsigned(get_int(bp, "f_v"), "f_v"), to_unsigned(get_int(bp, "vf"), "vf")});
        }
        make_field(q, modulus); // prime-power check
        zeta::validate(spec);
        return spec;
    } catch (const json::exception& ex) {
        throw ValidationError(std::string("malformed spec: ") + ex.what());
    }
}

json spec_to_json(const zeta::ProblemSpec& spec)
{
    json j;
    j["q"] = spec.q;
    j["genus"] = spec.genus;
    j["d"] = spec.d;
    if (spec.source) {
        const gf::PolyRing ring(spec.source->field);
        j["f"] = ring.to_string(spec.source->phi.f);
        const auto& field = spec.source->field;
        if (field.e() > 1) {
            std::vector<gf::Fq> mod;
            for (auto c : field.modulus())
                mod.push_back({c});
            j["base_modulus"] = gf::PolyRing(gf::Field::prime(field.p())).to_string(gf::PolyFq(mod), 'y');
        }
        return j;
    }
    if (spec.genus == 1)
        j["frobenius_trace"] = spec.frobenius_trace;
    json bad = json::array();
    for (const auto& bp : spec.bad_places)
        bad.push_back({{"f_v", bp.f_v}, {"vf", bp.vf}});
    j["bad_places"] = bad;
    return j;
}

json rational_to_json(const Rational& r)
{
    return qs::to_string(r);
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string())
        return qs::parse_rational(j.get<std::string>());
    throw ValidationError("expected a rational as \"p/q\" or an integer");
}

json qpoly_to_json(const QPoly& p)
{
    json a = json::array();
    for (const auto& c : p.coeffs())
        a.push_back(rational_to_json(c));
    return a;
}

QPoly qpoly_from_json(const json& j)
{
    if (!j.is_array())
        throw ValidationError("expected a coefficient array");
    std::vector<Rational> c;
    for (const auto& x : j)
        c.push_back(rational_from_json(x));
    return QPoly(std::move(c));
}

json qratfunc_to_json(const qs::QRatFunc& f)
{
    return {{"num", qpoly_to_json(f.num())},
            {"den", qpoly_to_json(f.den())},
            {"base", f.tag().base.get_str()},
            {"d", f.tag().d}};
}

qs::QRatFunc qratfunc_from_json(const json& j)
{
    try {
        qs::VarTag tag{Integer(j.at("base").get<std::string>()), j.at("d").get<unsigned>()};
        return qs::QRatFunc(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")), tag);
    } catch (const json::exception& ex) {
        throw ValidationError(std::string("malformed rational function: ") + ex.what());
    }
}

json algebraic_to_json(const QPoly& min_poly, const qs::NumberFieldElem& a)
{
    json mp = json::array();
    const auto [content, ints] = min_poly.primitive_part();
    for (const auto& z : ints)
        mp.push_back(integer_to_json(z));
    json coeffs = json::array();
    for (int i = 0; i < min_poly.degree(); ++i)
        coeffs.push_back(rational_to_json(a.rep.coeff(static_cast<std::size_t>(i))));
    return {{"min_poly", mp}, {"coeffs", coeffs}};
}

json pole_record_to_json(const qs::PoleRecord& rec, unsigned d)
{
    json j;
    j["min_poly"] = algebraic_to_json(rec.factor, {}).at("min_poly");
    j["order"] = rec.order;
    j["modulus"] = round12(rec.modulus);
    j["alpha_exponent"] = rec.alpha_exponent;
    json poles = json::array();
    for (const auto& p : rec.numeric_poles)
        poles.push_back({{"re", round12(p.re)}, {"im", round12(p.im)}});
    j["poles"] = poles;
    json laurent = json::array();
    for (const auto& c : rec.laurent)
        laurent.push_back(algebraic_to_json(rec.factor, c));
    j["laurent"] = laurent;
    json log_q = json::array();
    for (const auto& c : qs::laurent_log_q(rec, d))
        log_q.push_back(algebraic_to_json(rec.factor, c));
    j["laurent_log_q"] = log_q;
    return j;
}

double round12(double x)
{
    if (!std::isfinite(x))
        return x;
    if (std::abs(x) < 1e-12)
        return 0.0; // roundoff around zero, e.g. Im a on the real axis
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r; // drop negative zero
}

} // namespace hz::io
