#include "heightzeta/qfactor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "heightzeta/field.hpp"
#include "heightzeta/poly_fq.hpp"

namespace hz::qs {

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    ztrim(out);
    return out;
}

void zreduce(ZPoly& a, const Integer& m)
{
    for (auto& x : a) {
        x %= m;
        if (x < 0)
            x += m;
    }
    ztrim(a);
}

void zsymmetric(ZPoly& a, const Integer& m)
{
    zreduce(a, m);
    const Integer half = m / 2;
    for (auto& x : a)
        if (x > half)
            x -= m;
    ztrim(a);
}

gf::PolyFq to_fp(const ZPoly& a, std::uint32_t p)
{
    std::vector<gf::Fq> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer r = a[i] % p;
        if (r < 0)
            r += p;
        c[i] = gf::Fq{static_cast<std::uint32_t>(r.get_ui())};
    }
    return gf::PolyFq(std::move(c));
}

ZPoly from_fp(const gf::PolyFq& a)
{
    ZPoly out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        out[i] = a.c[i].v;
    return out;
}

ZPoly primitive(const QPoly& p)
{
    auto [content, z] = p.primitive_part();
    if (!z.empty() && z.back() < 0)
        for (auto& x : z)
            x = -x;
    return z;
}

// Lift F = G*H mod p to mod p^k, F monic over Z (coefficients taken mod p^k).
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& F, const gf::PolyFq& g0, const gf::PolyFq& h0, const gf::PolyRing& ring,
                                    unsigned k)
{
    const std::uint32_t p = ring.field().p();
    auto eg = ring.ext_gcd(g0, h0); // s*g0 + u*h0 = 1
    ZPoly G = from_fp(g0), H = from_fp(h0);
    Integer pj = p;
    for (unsigned j = 1; j < k; ++j) {
        ZPoly E = F;
        ZPoly GH = zmul(G, H);
        if (E.size() < GH.size())
            E.resize(GH.size(), Integer(0));
        for (std::size_t i = 0; i < GH.size(); ++i)
            E[i] -= GH[i];
        for (auto& x : E) {
            // exact by the lifting invariant
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pj.get_mpz_t());
        }
        ztrim(E);
        gf::PolyFq e = to_fp(E, p);
        gf::PolyFq dG = ring.mod(ring.mul(eg.u, e), g0);
        gf::PolyFq dH = ring.mod(ring.mul(eg.s, e), h0);
        ZPoly zg = from_fp(dG), zh = from_fp(dH);
        if (G.size() < zg.size())
            G.resize(zg.size(), Integer(0));
        for (std::size_t i = 0; i < zg.size(); ++i)
            G[i] += pj * zg[i];
        if (H.size() < zh.size())
            H.resize(zh.size(), Integer(0));
        for (std::size_t i = 0; i < zh.size(); ++i)
            H[i] += pj * zh[i];
        pj *= p;
    }
    return {G, H};
}

std::uint32_t next_prime(std::uint32_t n)
{
    while (!gf::is_prime(++n)) {
    }
    return n;
}

struct ModularImage {
    std::uint32_t p;
    std::vector<gf::PolyFq> factors;
};

// Squarefree-mod-p images of a primitive squarefree integer polynomial.
std::vector<ModularImage> modular_images(const ZPoly& g, unsigned how_many)
{
    std::vector<ModularImage> out;
    std::uint32_t p = 2;
    const QPoly gq = from_integers(g);
    while (out.size() < how_many && p < 100000) {
        p = next_prime(p);
        if (g.back() % p == 0)
            continue;
        gf::PolyRing ring(gf::Field::prime(p));
        gf::PolyFq gp = to_fp(g, p);
        gf::PolyFq dp = ring.derivative(gp);
        if (ring.gcd(gp, dp).degree() != 0)
            continue;
        ModularImage img{p, {}};
        for (auto& fe : ring.factor(gp).factors)
            img.factors.push_back(fe.factor);
        out.push_back(std::move(img));
    }
    if (out.empty())
        throw std::runtime_error("no good reduction prime found");
    return out;
}

std::vector<ZPoly> zassenhaus(ZPoly g)
{
    const unsigned n = static_cast<unsigned>(g.size() - 1);
    if (n <= 1)
        return {g};
    auto images = modular_images(g, 6);
    auto best = std::min_element(images.begin(), images.end(), [](const ModularImage& a, const ModularImage& b) {
        return a.factors.size() < b.factors.size();
    });
    if (best->factors.size() == 1)
        return {g};
    const std::uint32_t p = best->p;
    gf::PolyRing ring(gf::Field::prime(p));

    // Coefficient bound for factors of g (Mignotte-style, generous).
    Integer maxc = 0;
    for (const auto& c : g)
        if (abs(c) > maxc)
            maxc = abs(c);
    Integer bound = (Integer(1) << n);
    Integer root = 1;
    mpz_sqrt(root.get_mpz_t(), Integer(n + 1).get_mpz_t());
    bound *= (root + 1) * maxc + 1;
    Integer lc = abs(g.back());
    Integer target = 2 * lc * bound;
    unsigned k = 1;
    Integer M = p;
    while (M <= target) {
        M *= p;
        ++k;
    }

    // monic image of g mod p^k
    Integer lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), Integer(g.back()).get_mpz_t(), M.get_mpz_t());
    ZPoly F = g;
    for (auto& c : F)
        c *= lc_inv;
    zreduce(F, M);

    std::vector<ZPoly> lifted;
    {
        std::vector<gf::PolyFq> u = best->factors;
        ZPoly current = F;
        for (std::size_t i = 0; i + 1 < u.size(); ++i) {
            gf::PolyFq rest = ring.constant(1);
            for (std::size_t j = i + 1; j < u.size(); ++j)
                rest = ring.mul(rest, u[j]);
            auto [G, H] = hensel_lift(current, u[i], rest, ring, k);
            zreduce(G, M);
            zreduce(H, M);
            lifted.push_back(std::move(G));
            current = std::move(H);
        }
        lifted.push_back(std::move(current));
    }

    std::vector<ZPoly> found;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool hit = false;
        std::vector<bool> mask(lifted.size(), false);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(s), true);
        do {
            ZPoly h{g.back()};
            for (std::size_t i = 0; i < lifted.size(); ++i) {
                if (!mask[i])
                    continue;
                h = zmul(h, lifted[i]);
                zreduce(h, M);
            }
            zsymmetric(h, M);
            if (h.size() < 2)
                continue;
            ZPoly hp = primitive(from_integers(h));
            auto [quo, rem] = divmod(from_integers(g), from_integers(hp));
            if (!rem.is_zero())
                continue;
            found.push_back(hp);
            g = primitive(quo);
            std::vector<ZPoly> keep;
            for (std::size_t i = 0; i < lifted.size(); ++i)
                if (!mask[i])
                    keep.push_back(std::move(lifted[i]));
            lifted = std::move(keep);
            hit = true;
            break;
        } while (std::prev_permutation(mask.begin(), mask.end()));
        if (!hit)
            ++s;
    }
    if (g.size() > 1)
        found.push_back(g);
    return found;
}

QPoly normalize_sign(QPoly f)
{
    const Rational key = f.coeff(0) != 0 ? f.coeff(0) : f.lead();
    return key < 0 ? -f : f;
}

bool factor_less(const QFactor& a, const QFactor& b)
{
    if (a.factor.degree() != b.factor.degree())
        return a.factor.degree() < b.factor.degree();
    const auto& x = a.factor.coeffs();
    const auto& y = b.factor.coeffs();
    if (x != y)
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    return a.multiplicity < b.multiplicity;
}

} // namespace

QFactorization qpoly_factor(const QPoly& p)
{
    if (p.is_zero())
        throw std::domain_error("cannot factor the zero polynomial");
    QFactorization out;
    const unsigned xk = p.low_degree();
    if (xk > 0)
        out.factors.push_back({QPoly{0, 1}, xk});
    QPoly rest = p;
    if (xk > 0) {
        std::vector<Rational> c(p.coeffs().begin() + xk, p.coeffs().end());
        rest = QPoly(std::move(c));
    }
    if (rest.degree() > 0) {
        // Yun's squarefree decomposition over Q
        QPoly f = rest.monic();
        QPoly df = f.derivative();
        QPoly a0 = gcd(f, df);
        QPoly b = f / a0;
        QPoly c = df / a0;
        QPoly d = c - b.derivative();
        unsigned i = 1;
        while (b.degree() > 0) {
            QPoly a = gcd(b, d);
            if (a.degree() > 0)
                for (auto& z : zassenhaus(primitive(a)))
                    out.factors.push_back({normalize_sign(from_integers(z)), i});
            b = b / a;
            c = d / a;
            d = c - b.derivative();
            ++i;
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    Rational lead_prod = 1;
    for (const auto& f : out.factors)
        for (unsigned j = 0; j < f.multiplicity; ++j)
            lead_prod *= f.factor.lead();
    out.unit = p.lead() / lead_prod;
    return out;
}

QPoly expand(const QFactorization& f)
{
    QPoly r = QPoly::constant(f.unit);
    for (const auto& e : f.factors)
        r *= e.factor.pow(e.multiplicity);
    return r;
}

bool is_irreducible(const QPoly& p)
{
    const int n = p.degree();
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    if (p.coeff(0) == 0)
        return false;
    if (gcd(p, p.derivative()).degree() > 0)
        return false;
    // Degree certificate: a proper factor must have a degree that is a
    // subset sum of modular factor degrees for every good prime.
    ZPoly g = primitive(p);
    std::set<int> possible;
    for (int k = 1; k < n; ++k)
        possible.insert(k);
    for (const auto& img : modular_images(g, 8)) {
        std::set<int> sums{0};
        for (const auto& f : img.factors) {
            std::set<int> next = sums;
            for (int s : sums)
                next.insert(s + f.degree());
            sums = std::move(next);
        }
        std::set<int> keep;
        for (int k : possible)
            if (sums.count(k))
                keep.insert(k);
        possible = std::move(keep);
        if (possible.empty())
            return true;
    }
    // Inconclusive degree pattern: fall back to a full search.
    auto fac = qpoly_factor(p);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

} // namespace hz::qs
