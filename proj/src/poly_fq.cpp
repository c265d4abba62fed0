#include "heightzeta/poly_fq.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "heightzeta/error.hpp"

namespace hz::gf {

PolyFq PolyRing::monomial(Fq a, unsigned k) const
{
    std::vector<Fq> c(k + 1, field_.zero());
    c[k] = a;
    return PolyFq(std::move(c));
}

PolyFq PolyRing::add(const PolyFq& a, const PolyFq& b) const
{
    std::vector<Fq> c(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = field_.add(a.coeff(i), b.coeff(i));
    return PolyFq(std::move(c));
}

PolyFq PolyRing::sub(const PolyFq& a, const PolyFq& b) const
{
    std::vector<Fq> c(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = field_.sub(a.coeff(i), b.coeff(i));
    return PolyFq(std::move(c));
}

PolyFq PolyRing::neg(const PolyFq& a) const
{
    PolyFq r = a;
    for (auto& x : r.c)
        x = field_.neg(x);
    return r;
}

PolyFq PolyRing::mul(const PolyFq& a, const PolyFq& b) const
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Fq> c(a.c.size() + b.c.size() - 1, field_.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].v == 0)
            continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = field_.add(c[i + j], field_.mul(a.c[i], b.c[j]));
    }
    return PolyFq(std::move(c));
}

PolyFq PolyRing::scale(const PolyFq& a, Fq s) const
{
    if (s.v == 0)
        return {};
    PolyFq r = a;
    for (auto& x : r.c)
        x = field_.mul(x, s);
    return r;
}

PolyFq PolyRing::pow(const PolyFq& a, unsigned n) const
{
    PolyFq result = constant(field_.one());
    PolyFq base = a;
    while (n) {
        if (n & 1)
            result = mul(result, base);
        n >>= 1;
        if (n)
            base = mul(base, base);
    }
    return result;
}

std::pair<PolyFq, PolyFq> PolyRing::divmod(const PolyFq& a, const PolyFq& b) const
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {PolyFq{}, a};
    std::vector<Fq> r = a.c;
    std::vector<Fq> q(a.c.size() - b.c.size() + 1, field_.zero());
    const Fq lead_inv = field_.inv(b.lead());
    const std::size_t db = b.c.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        Fq coef = field_.mul(r[k + db], lead_inv);
        q[k] = coef;
        if (coef.v == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            r[k + j] = field_.sub(r[k + j], field_.mul(coef, b.c[j]));
    }
    r.resize(db);
    return {PolyFq(std::move(q)), PolyFq(std::move(r))};
}

PolyFq PolyRing::monic(const PolyFq& a) const
{
    if (a.is_zero())
        return a;
    return scale(a, field_.inv(a.lead()));
}

PolyFq PolyRing::gcd(const PolyFq& a, const PolyFq& b) const
{
    PolyFq x = a, y = b;
    while (!y.is_zero()) {
        PolyFq r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

PolyRing::ExtGcd PolyRing::ext_gcd(const PolyFq& a, const PolyFq& b) const
{
    PolyFq r0 = a, r1 = b;
    PolyFq s0 = constant(field_.one()), s1;
    PolyFq u0, u1 = constant(field_.one());
    while (!r1.is_zero()) {
        auto [qt, r2] = divmod(r0, r1);
        PolyFq s2 = sub(s0, mul(qt, s1));
        PolyFq u2 = sub(u0, mul(qt, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero())
        return {r0, s0, u0};
    Fq li = field_.inv(r0.lead());
    return {scale(r0, li), scale(s0, li), scale(u0, li)};
}

PolyFq PolyRing::derivative(const PolyFq& a) const
{
    if (a.c.size() <= 1)
        return {};
    std::vector<Fq> c(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        c[i - 1] = field_.mul(a.c[i], field_.from_int(static_cast<long long>(i % field_.p())));
    return PolyFq(std::move(c));
}

Fq PolyRing::eval(const PolyFq& a, Fq x) const
{
    Fq acc = field_.zero();
    for (std::size_t i = a.c.size(); i-- > 0;)
        acc = field_.add(field_.mul(acc, x), a.c[i]);
    return acc;
}

PolyFq PolyRing::powmod(const PolyFq& a, const mpz_class& n, const PolyFq& m) const
{
    PolyFq result = mod(constant(field_.one()), m);
    PolyFq base = mod(a, m);
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (n == 0)
        return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(n.get_mpz_t(), i))
            result = mulmod(result, base, m);
    }
    return result;
}

unsigned PolyRing::order(const PolyFq& a, const PolyFq& pi) const
{
    if (a.is_zero())
        throw std::domain_error("order of the zero polynomial is infinite");
    unsigned k = 0;
    PolyFq x = a;
    while (true) {
        auto [qt, r] = divmod(x, pi);
        if (!r.is_zero())
            return k;
        x = std::move(qt);
        ++k;
    }
}

PolyFq PolyRing::pth_root(const PolyFq& f) const
{
    // f(t) = g(t^p); a^(1/p) = a^(p^(e-1)) in F_q.
    const std::uint32_t p = field_.p();
    std::uint64_t root_exp = 1;
    for (unsigned i = 1; i < field_.e(); ++i)
        root_exp *= p;
    std::vector<Fq> c;
    for (std::size_t i = 0; i < f.c.size(); i += p)
        c.push_back(field_.pow(f.c[i], root_exp));
    return PolyFq(std::move(c));
}

std::vector<std::pair<PolyFq, unsigned>> PolyRing::squarefree(const PolyFq& f) const
{
    std::vector<std::pair<PolyFq, unsigned>> out;
    const PolyFq one = constant(field_.one());
    PolyFq c = gcd(f, derivative(f));
    PolyFq w = quo(f, c);
    unsigned i = 1;
    while (w != one) {
        PolyFq y = gcd(w, c);
        PolyFq z = quo(w, y);
        if (z != one)
            out.emplace_back(z, i);
        ++i;
        w = y;
        c = quo(c, y);
    }
    if (c != one) {
        for (auto& [g, j] : squarefree(pth_root(c)))
            out.emplace_back(g, j * field_.p());
    }
    return out;
}

std::vector<std::pair<PolyFq, unsigned>> PolyRing::distinct_degree(const PolyFq& f_in) const
{
    std::vector<std::pair<PolyFq, unsigned>> out;
    PolyFq f = f_in;
    const PolyFq one = constant(field_.one());
    const PolyFq x = t();
    PolyFq h = mod(x, f);
    const mpz_class q(field_.q());
    for (unsigned i = 1; 2 * i <= static_cast<unsigned>(f.degree()); ++i) {
        h = powmod(h, q, f);
        PolyFq g = gcd(f, sub(h, x));
        if (g != one) {
            out.emplace_back(g, i);
            f = quo(f, g);
            h = mod(h, f);
        }
    }
    if (f.degree() > 0)
        out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

namespace {
std::uint64_t splitmix(std::uint64_t& s)
{
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

void PolyRing::equal_degree(const PolyFq& f, unsigned d, std::vector<PolyFq>& out, std::uint64_t& seed) const
{
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == d) {
        out.push_back(f);
        return;
    }
    const PolyFq one = constant(field_.one());
    const bool even = field_.p() == 2;
    mpz_class half; // (q^d - 1) / 2
    if (!even) {
        mpz_ui_pow_ui(half.get_mpz_t(), field_.q(), d);
        half = (half - 1) / 2;
    }
    while (true) {
        std::vector<Fq> c(n);
        for (auto& x : c)
            x = field_.element(static_cast<std::uint32_t>(splitmix(seed) % field_.q()));
        PolyFq a(std::move(c));
        if (a.degree() < 1)
            continue;
        PolyFq b;
        if (even) {
            // absolute trace to F_2: sum of a^(2^i), i < e*d
            PolyFq term = a;
            b = a;
            for (unsigned i = 1; i < field_.e() * d; ++i) {
                term = mulmod(term, term, f);
                b = add(b, term);
            }
        } else {
            b = sub(powmod(a, half, f), one);
        }
        PolyFq g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < static_cast<int>(n)) {
            equal_degree(g, d, out, seed);
            equal_degree(quo(f, g), d, out, seed);
            return;
        }
    }
}

Factorization PolyRing::factor(const PolyFq& f) const
{
    if (f.is_zero())
        throw std::domain_error("cannot factor the zero polynomial");
    Factorization result{f.lead(), {}};
    PolyFq g = monic(f);
    std::uint64_t seed = 0x5eed;
    for (auto& [part, mult] : squarefree(g)) {
        for (auto& [block, deg] : distinct_degree(part)) {
            std::vector<PolyFq> irr;
            equal_degree(block, deg, irr, seed);
            for (auto& p : irr)
                result.factors.push_back({monic(p), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorEntry& a, const FactorEntry& b) { return a.factor < b.factor; });
    return result;
}

PolyFq PolyRing::expand(const Factorization& fac) const
{
    PolyFq r = constant(fac.unit);
    for (const auto& e : fac.factors)
        r = mul(r, pow(e.factor, e.multiplicity));
    return r;
}

bool PolyRing::is_irreducible(const PolyFq& f) const
{
    const int n = f.degree();
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    // Rabin: t^(q^n) = t mod f and gcd(t^(q^(n/r)) - t, f) = 1 for primes r | n.
    const PolyFq g = monic(f);
    const PolyFq x = t();
    const mpz_class q(field_.q());
    std::vector<PolyFq> frob(n + 1);
    frob[0] = mod(x, g);
    for (int i = 1; i <= n; ++i)
        frob[i] = powmod(frob[i - 1], q, g);
    if (frob[n] != mod(x, g))
        return false;
    const PolyFq one = constant(field_.one());
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0 || !is_prime(static_cast<std::uint64_t>(r)))
            continue;
        if (gcd(g, sub(frob[n / r], x)) != one)
            return false;
    }
    return true;
}

std::vector<PolyFq> PolyRing::irreducibles_up_to(unsigned n) const
{
    std::vector<PolyFq> out;
    const std::uint64_t q = field_.q();
    for (unsigned k = 1; k <= n; ++k) {
        std::uint64_t total = 1;
        for (unsigned i = 0; i < k; ++i)
            total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<Fq> c(k + 1);
            std::uint64_t v = idx;
            for (unsigned i = 0; i < k; ++i) {
                c[i] = field_.element(static_cast<std::uint32_t>(v % q));
                v /= q;
            }
            c[k] = field_.one();
            PolyFq cand(std::move(c));
            if (k == 1 || is_irreducible(cand))
                out.push_back(std::move(cand));
        }
    }
    return out;
}

SquareClass PolyRing::residue_square_class(const PolyFq& h, const PolyFq& pi) const
{
    if (field_.p() == 2)
        throw ValidationError("char 2 unsupported");
    PolyFq r = mod(h, pi);
    if (r.is_zero())
        return SquareClass::zero;
    mpz_class exp;
    mpz_ui_pow_ui(exp.get_mpz_t(), field_.q(), static_cast<unsigned long>(pi.degree()));
    exp = (exp - 1) / 2;
    PolyFq e = powmod(r, exp, pi);
    return e == constant(field_.one()) ? SquareClass::square : SquareClass::nonsquare;
}

namespace {

struct Parser {
    std::string s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ValidationError("cannot parse polynomial \"" + s + "\": " + why);
    }
    long long integer()
    {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a digit at position " + std::to_string(i));
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[i++] - '0');
            if (v > (1LL << 50))
                fail("integer too large");
        }
        return v;
    }
};

} // namespace

PolyFq PolyRing::parse(std::string_view text, char var) const
{
    Parser ps;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            ps.s += ch;
    if (ps.s.empty())
        ps.fail("empty string");
    PolyFq result;
    bool first = true;
    while (!ps.done()) {
        bool negative = false;
        if (ps.peek() == '+' || ps.peek() == '-') {
            negative = ps.peek() == '-';
            ++ps.i;
        } else if (!first) {
            ps.fail("expected + or - at position " + std::to_string(ps.i));
        }
        first = false;
        Fq coef = field_.one();
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(ps.peek()))) {
            coef = field_.from_int(ps.integer());
            have_coef = true;
        } else if (ps.peek() == '(') {
            std::size_t close = ps.s.find(')', ps.i);
            if (close == std::string::npos)
                ps.fail("unbalanced parenthesis");
            if (field_.e() == 1)
                ps.fail("parenthesised coefficients need an extension field");
            PolyRing base(Field::prime(field_.p()));
            PolyFq inner = base.parse(std::string_view(ps.s).substr(ps.i + 1, close - ps.i - 1), 'y');
            std::vector<std::uint32_t> d(field_.e(), 0);
            PolyFq red = base.mod(inner, [&] {
                std::vector<Fq> m;
                for (auto x : field_.modulus())
                    m.push_back(Fq{x});
                return PolyFq(std::move(m));
            }());
            for (std::size_t k = 0; k < red.c.size(); ++k)
                d[k] = red.c[k].v;
            coef = field_.from_digits(d);
            have_coef = true;
            ps.i = close + 1;
        }
        if (have_coef && ps.peek() == '*')
            ++ps.i;
        unsigned power = 0;
        if (ps.peek() == var) {
            ++ps.i;
            power = 1;
            if (ps.peek() == '^') {
                ++ps.i;
                long long k = ps.integer();
                if (k > 4096)
                    ps.fail("exponent too large");
                power = static_cast<unsigned>(k);
            }
        } else if (!have_coef) {
            ps.fail("expected a term at position " + std::to_string(ps.i));
        }
        if (negative)
            coef = field_.neg(coef);
        result = add(result, monomial(coef, power));
    }
    return result;
}

std::string PolyRing::to_string(const PolyFq& a, char var) const
{
    if (a.is_zero())
        return "0";
    std::string out;
    for (std::size_t k = a.c.size(); k-- > 0;) {
        Fq c = a.c[k];
        if (c.v == 0)
            continue;
        if (!out.empty())
            out += '+';
        const bool unit = c == field_.one();
        if (k == 0 || !unit)
            out += field_.to_string(c);
        if (k >= 1)
            out += var;
        if (k >= 2)
            out += '^' + std::to_string(k);
    }
    return out;
}

mpz_class necklace_count(std::uint64_t q, unsigned k)
{
    auto mobius = [](unsigned n) {
        int m = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p)
                continue;
            n /= p;
            if (n % p == 0)
                return 0;
            m = -m;
        }
        if (n > 1)
            m = -m;
        return m;
    };
    mpz_class sum = 0;
    for (unsigned d = 1; d <= k; ++d) {
        if (k % d)
            continue;
        mpz_class qd;
        mpz_ui_pow_ui(qd.get_mpz_t(), q, d);
        sum += mobius(k / d) * qd;
    }
    return sum / k;
}

} // namespace hz::gf
