#ifndef HEIGHTZETA_CLI_HPP
#define HEIGHTZETA_CLI_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "heightzeta/zeta.hpp"

namespace hz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIdentity = 3;

enum class Format { json, text };

struct Options {
    Format format = Format::json;
    unsigned max_coeff = 40;
    std::optional<long long> bound_exponent;
    std::optional<long long> all_up_to;
    std::optional<double> bound; // real B, floored to the largest q^(k/d) <= B
    bool budget_override = false;
};

int cmd_zeta(const zeta::ProblemSpec& spec, const Options& opt, std::ostream& out);
int cmd_poles(const zeta::ProblemSpec& spec, const Options& opt, std::ostream& out);
int cmd_asymptote(const zeta::ProblemSpec& spec, const Options& opt, std::ostream& out);
int cmd_verify(const zeta::ProblemSpec& spec, const Options& opt, std::ostream& out);

struct CurveArgs {
    std::uint32_t q = 0;
    std::string h;
    std::string f;
    unsigned d = 2;
    std::string base_modulus;
};

int cmd_curve(const CurveArgs& args, const Options& opt, std::ostream& out);

/// Reads and validates a spec file ("-" for stdin).
zeta::ProblemSpec load_spec(const std::string& path);

/// Runs fn and maps exceptions to exit codes, printing the message to err:
/// ValidationError -> 2, IdentityError and MixedModulusError -> 3.
int guarded(const std::function<int()>& fn, std::ostream& err);

} // namespace hz::cli

#endif
