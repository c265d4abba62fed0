#ifndef HEIGHTZETA_ORACLE_HPP
#define HEIGHTZETA_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "heightzeta/ratfunc_fq.hpp"
#include "heightzeta/zeta.hpp"

namespace hz::oracle {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct Options {
    bool budget_override = false;
    unsigned threads = 0; // 0: HEIGHTZETA_THREADS, else hardware concurrency
    bool use_cache = true; // reuse the per-field denominator histograms
};

/// q^(2n+1), the number of x in F_q(t) with H(x) <= q^n. Saturates at UINT64_MAX.
std::uint64_t element_count(std::uint32_t q, unsigned n);

/// Largest n whose enumeration fits the budget.
unsigned max_height_within_budget(std::uint32_t q, std::uint64_t budget = kDefaultBudget);

/// Calls `visit` once for every x with max(deg num, deg den) <= n, in
/// canonical form (monic denominator, coprime), ordered by denominator
/// degree, then denominator, then numerator. Throws BudgetError.
void enumerate_elements(const gf::Field& field, unsigned n, const std::function<void(const gf::RatFuncFq&)>& visit,
                        const Options& opt = {});

struct CountTable {
    std::uint32_t q = 0;
    unsigned d = 1;
    std::vector<std::uint64_t> counts; // counts[m]: every enumerated x with exponent m
    unsigned max_m = 0;                // counts[0..max_m] are complete
    std::uint64_t enumerated = 0;

    std::uint64_t at(unsigned m) const { return m < counts.size() ? counts[m] : 0; }
};

/// a_m = #{x : H^(x) = q^(m/d)} for m <= M. Needs a genus-0 spec built from f.
CountTable count_canonical_heights(const zeta::ProblemSpec& spec, unsigned M, const Options& opt = {});

/// Standard-height histogram of D_T (v(x) >= 0 on T, v(x) < 0 off T) for
/// heights h <= n. The table's d is 1.
CountTable count_region(const zeta::ProblemSpec& spec, zeta::PlaceSubset T, unsigned n, const Options& opt = {});

/// N(B) = sum_{m <= k} a_m for B = q^(k/d).
std::uint64_t cumulative_count(const zeta::ProblemSpec& spec, unsigned k, const Options& opt = {});

/// Thread count from HEIGHTZETA_THREADS, capped by the hardware.
unsigned default_threads();

} // namespace hz::oracle

#endif
