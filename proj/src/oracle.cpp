#include "heightzeta/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>

#include "heightzeta/error.hpp"

namespace hz::oracle {

using gf::Field;
using gf::Fq;
using gf::PolyFq;

namespace {

constexpr unsigned kMaxLen = 24;

// Dense polynomial of degree < kMaxLen; deg = -1 for zero.
struct Small {
    std::array<Fq, kMaxLen> c{};
    int deg = -1;
};

void fix_degree(Small& a)
{
    while (a.deg >= 0 && a.c[static_cast<std::size_t>(a.deg)].v == 0)
        --a.deg;
}

// a <- a mod b, b nonzero
void reduce(const Field& F, const std::vector<Fq>& inv, Small& a, const Small& b)
{
    const Fq lead_inv = inv[b.c[static_cast<std::size_t>(b.deg)].v];
    while (a.deg >= b.deg) {
        const int shift = a.deg - b.deg;
        const Fq coef = F.mul(a.c[static_cast<std::size_t>(a.deg)], lead_inv);
        for (int i = 0; i <= b.deg; ++i) {
            auto& slot = a.c[static_cast<std::size_t>(i + shift)];
            slot = F.sub(slot, F.mul(coef, b.c[static_cast<std::size_t>(i)]));
        }
        fix_degree(a);
    }
}

bool coprime(const Field& F, const std::vector<Fq>& inv, Small a, Small b)
{
    while (b.deg >= 0) {
        reduce(F, inv, a, b);
        std::swap(a, b);
    }
    return a.deg == 0;
}

// Increments the base-q counter in a (coefficients 0..len-1); false on wrap.
bool next_poly(Small& a, std::uint32_t q, unsigned len)
{
    for (unsigned i = 0; i < len; ++i) {
        if (a.c[i].v + 1 < q) {
            ++a.c[i].v;
            a.deg = std::max(a.deg, static_cast<int>(i));
            return true;
        }
        a.c[i].v = 0;
    }
    a.deg = -1;
    return false;
}

Small monic_from_index(std::uint64_t idx, std::uint32_t q, unsigned k)
{
    Small b;
    for (unsigned i = 0; i < k; ++i) {
        b.c[i] = Fq{static_cast<std::uint32_t>(idx % q)};
        idx /= q;
    }
    b.c[k] = Fq{1};
    b.deg = static_cast<int>(k);
    return b;
}

PolyFq to_poly(const Small& a)
{
    return PolyFq(std::vector<Fq>(a.c.begin(), a.c.begin() + (a.deg + 1)));
}

std::uint64_t ipow_sat(std::uint64_t q, unsigned k)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > UINT64_MAX / q)
            return UINT64_MAX;
        r *= q;
    }
    return r;
}

void check_budget(std::uint32_t q, unsigned n, const Options& opt)
{
    if (n + 1 >= kMaxLen)
        throw BudgetError("height exponent " + std::to_string(n) + " too large for enumeration");
    const std::uint64_t count = element_count(q, n);
    if (!opt.budget_override && count > kDefaultBudget)
        throw BudgetError("enumeration needs about " + std::to_string(count) + " elements (q^(2n+1), q = "
                          + std::to_string(q) + ", n = " + std::to_string(n) + "), over the budget of "
                          + std::to_string(kDefaultBudget) + "; pass --budget-override to force");
}

std::vector<Fq> inverse_table(const Field& F)
{
    std::vector<Fq> inv(F.q());
    for (std::uint32_t i = 1; i < F.q(); ++i)
        inv[i] = F.inv(F.element(i));
    return inv;
}

// For every monic denominator of degree <= n (in enumeration order), the
// number of coprime numerators of each degree -1..n (slot 0 is the zero
// numerator).
struct DenHistogram {
    unsigned n = 0;
    std::vector<PolyFq> dens;
    std::vector<std::vector<std::uint64_t>> by_num_deg;
};

std::shared_ptr<const DenHistogram> compute_histogram(const Field& F, unsigned n, unsigned threads)
{
    const std::uint32_t q = F.q();
    const auto inv = inverse_table(F);
    auto H = std::make_shared<DenHistogram>();
    H->n = n;
    std::vector<Small> dens;
    for (unsigned k = 0; k <= n; ++k)
        for (std::uint64_t idx = 0, total = ipow_sat(q, k); idx < total; ++idx)
            dens.push_back(monic_from_index(idx, q, k));
    H->dens.reserve(dens.size());
    for (const auto& b : dens)
        H->dens.push_back(to_poly(b));
    H->by_num_deg.assign(dens.size(), std::vector<std::uint64_t>(n + 2, 0));

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < dens.size(); i += stride) {
            const Small& b = dens[i];
            auto& hist = H->by_num_deg[i];
            Small a; // starts at zero
            do {
                if (a.deg < 0) {
                    if (b.deg == 0)
                        ++hist[0];
                } else if (b.deg == 0 || coprime(F, inv, a, b)) {
                    ++hist[static_cast<std::size_t>(a.deg + 1)];
                }
            } while (next_poly(a, q, n + 1));
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(dens.size())));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, t, threads);
        for (auto& th : pool)
            th.join();
    }
    return H;
}

using CacheKey = std::tuple<std::uint32_t, unsigned, std::vector<std::uint32_t>>;

// Cached per field; a histogram for n also serves every smaller n.
std::shared_ptr<const DenHistogram> histogram(const Field& F, unsigned n, const Options& opt)
{
    static std::mutex mu;
    static std::map<CacheKey, std::shared_ptr<const DenHistogram>> cache;
    check_budget(F.q(), n, opt);
    if (!opt.use_cache)
        return compute_histogram(F, n, opt.threads ? opt.threads : default_threads());
    const CacheKey key{F.p(), F.e(), F.modulus()};
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->n >= n)
            return it->second;
    }
    auto H = compute_histogram(F, n, opt.threads ? opt.threads : default_threads());
    std::lock_guard lock(mu);
    auto& slot = cache[key];
    if (!slot || slot->n < n)
        slot = H;
    return H;
}

const zeta::GenusZeroSource& source_of(const zeta::ProblemSpec& spec)
{
    if (spec.genus != 0 || !spec.source)
        throw ValidationError("the oracle needs a genus-0 spec given by a polynomial f");
    return *spec.source;
}

} // namespace

std::uint64_t element_count(std::uint32_t q, unsigned n)
{
    return ipow_sat(q, 2 * n + 1);
}

unsigned max_height_within_budget(std::uint32_t q, std::uint64_t budget)
{
    unsigned n = 0;
    while (element_count(q, n + 1) <= budget)
        ++n;
    return n;
}

unsigned default_threads()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HEIGHTZETA_THREADS")) {
        try {
            const unsigned long cap = std::stoul(env);
            if (cap >= 1)
                hw = std::min<unsigned>(hw, static_cast<unsigned>(std::min<unsigned long>(cap, 1024)));
        } catch (const std::exception&) {
            // ignore malformed values
        }
    }
    return hw;
}

void enumerate_elements(const Field& F, unsigned n, const std::function<void(const gf::RatFuncFq&)>& visit,
                        const Options& opt)
{
    check_budget(F.q(), n, opt);
    const std::uint32_t q = F.q();
    const auto inv = inverse_table(F);
    for (unsigned k = 0; k <= n; ++k) {
        for (std::uint64_t idx = 0, total = ipow_sat(q, k); idx < total; ++idx) {
            const Small b = monic_from_index(idx, q, k);
            const PolyFq den = to_poly(b);
            Small a;
            do {
                const bool ok = a.deg < 0 ? k == 0 : (k == 0 || coprime(F, inv, a, b));
                if (ok)
                    visit(gf::RatFuncFq{to_poly(a), den});
            } while (next_poly(a, q, n + 1));
        }
    }
}

CountTable count_canonical_heights(const zeta::ProblemSpec& spec, unsigned M, const Options& opt)
{
    const auto& src = source_of(spec);
    const unsigned d = spec.d;
    const unsigned n = M / d;
    const auto H = histogram(src.field, n, opt);
    const gf::PolyRing ring(src.field);

    CountTable t;
    t.q = spec.q;
    t.d = d;
    t.max_m = M;
    for (std::size_t i = 0; i < H->dens.size(); ++i) {
        const PolyFq& b = H->dens[i];
        const int k = b.degree();
        if (k > static_cast<int>(n))
            break;
        // gcd(num, den) = 1, so v(x) >= 0 exactly when pi does not divide den
        unsigned corr = 0;
        for (const auto& bp : src.phi.bad_places)
            if (!ring.divides(bp.place.pi, b))
                corr += bp.f_v * bp.vf;
        for (int j = -1; j <= static_cast<int>(n); ++j) {
            const std::uint64_t c = H->by_num_deg[i][static_cast<std::size_t>(j + 1)];
            if (c == 0)
                continue;
            const unsigned h = static_cast<unsigned>(std::max(j, k));
            const unsigned m = d * h + corr;
            if (m >= t.counts.size())
                t.counts.resize(m + 1, 0);
            t.counts[m] += c;
            t.enumerated += c;
        }
    }
    if (t.counts.size() <= M)
        t.counts.resize(M + 1, 0);
    return t;
}

CountTable count_region(const zeta::ProblemSpec& spec, zeta::PlaceSubset T, unsigned n, const Options& opt)
{
    const auto& src = source_of(spec);
    const auto H = histogram(src.field, n, opt);
    const gf::PolyRing ring(src.field);
    const auto& bad = src.phi.bad_places;

    CountTable t;
    t.q = spec.q;
    t.d = 1;
    t.max_m = n;
    t.counts.assign(n + 1, 0);
    for (std::size_t i = 0; i < H->dens.size(); ++i) {
        const PolyFq& b = H->dens[i];
        const int k = b.degree();
        if (k > static_cast<int>(n))
            break;
        bool member = true;
        for (std::size_t v = 0; v < bad.size() && member; ++v) {
            const bool integral = !ring.divides(bad[v].place.pi, b);
            member = integral == static_cast<bool>(T >> v & 1u);
        }
        if (!member)
            continue;
        for (int j = -1; j <= static_cast<int>(n); ++j) {
            const std::uint64_t c = H->by_num_deg[i][static_cast<std::size_t>(j + 1)];
            t.counts[static_cast<std::size_t>(std::max(j, k))] += c;
            t.enumerated += c;
        }
    }
    return t;
}

std::uint64_t cumulative_count(const zeta::ProblemSpec& spec, unsigned k, const Options& opt)
{
    const CountTable t = count_canonical_heights(spec, k, opt);
    std::uint64_t total = 0;
    for (unsigned m = 0; m <= k; ++m)
        total += t.at(m);
    return total;
}

} // namespace hz::oracle
