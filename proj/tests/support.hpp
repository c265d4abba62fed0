#ifndef HEIGHTZETA_TESTS_SUPPORT_HPP
#define HEIGHTZETA_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "heightzeta/poly_fq.hpp"
#include "heightzeta/qpoly.hpp"
#include "heightzeta/zeta.hpp"

namespace hz::test {

inline qs::Rational R(const std::string& s)
{
    return qs::parse_rational(s);
}

inline qs::QPoly QP(std::initializer_list<const char*> cs)
{
    std::vector<qs::Rational> v;
    for (const char* c : cs)
        v.push_back(R(c));
    return qs::QPoly(std::move(v));
}

inline std::vector<qs::Rational> Rs(std::initializer_list<const char*> cs)
{
    std::vector<qs::Rational> v;
    for (const char* c : cs)
        v.push_back(R(c));
    return v;
}

inline gf::PolyFq random_poly(const gf::Field& F, std::mt19937_64& rng, int max_deg)
{
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<std::uint32_t> coef(0, F.q() - 1);
    const int d = deg(rng);
    std::vector<gf::Fq> c;
    for (int i = 0; i <= d; ++i)
        c.push_back(F.element(coef(rng)));
    return gf::PolyFq(std::move(c));
}

inline zeta::ProblemSpec genus1(std::uint32_t q, long trace, unsigned d, std::vector<zeta::BadPlaceData> bad)
{
    zeta::ProblemSpec s;
    s.q = q;
    s.genus = 1;
    s.frobenius_trace = trace;
    s.d = d;
    s.bad_places = std::move(bad);
    return s;
}

inline zeta::ProblemSpec genus0(std::uint32_t p, const std::string& f, unsigned d)
{
    const auto F = gf::Field::prime(p);
    return zeta::genus0_spec(F, gf::PolyRing(F).parse(f), d);
}

struct MatrixEntry {
    std::uint32_t q;
    unsigned d;
    std::string f;
};

/// Genus-0 test matrix: q in {2,3,5}, d in {2,3}, f in {t, t+1, t^2, t(t+1),
/// t^2+1 (q=3), t^2+2 (q=5)}, keeping only v(f) < d.
inline std::vector<MatrixEntry> genus0_matrix()
{
    std::vector<MatrixEntry> out;
    for (std::uint32_t q : {2u, 3u, 5u})
        for (unsigned d : {2u, 3u}) {
            std::vector<std::string> fs{"t", "t+1", "t^2", "t^2+t"};
            if (q == 3)
                fs.push_back("t^2+1");
            if (q == 5)
                fs.push_back("t^2+2");
            for (const auto& f : fs) {
                if (f == "t^2" && d <= 2)
                    continue;
                out.push_back({q, d, f});
            }
        }
    return out;
}

} // namespace hz::test

#endif
