#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "heightzeta/cli.hpp"

int main(int argc, char** argv)
{
    using namespace hz::cli;

    CLI::App app{"Dynamical height zeta functions of z^d + 1/f over function fields"};
    app.require_subcommand(1);

    Options opt;
    std::string spec_path = "-";
    std::string format = "json";
    long long bound_exponent = -1;
    long long all_up_to = -1;
    double bound = 0;
    CurveArgs curve;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto add_spec = [&](CLI::App* sub) {
        add_common(sub);
        sub->add_option("--spec", spec_path, "Problem spec JSON file ('-' for stdin)");
        sub->add_flag("--budget-override", opt.budget_override, "Allow oracle enumerations above 10^8 elements");
    };

    auto* zeta = app.add_subcommand("zeta", "Closed form of the height zeta function");
    add_spec(zeta);
    auto* poles = app.add_subcommand("poles", "Strip poles and Laurent coefficients");
    add_spec(poles);
    auto* asymptote = app.add_subcommand("asymptote", "Main term of N(B) for B = q^(k/d), with the oracle count in genus 0");
    add_spec(asymptote);
    asymptote->add_option("--bound-exponent", bound_exponent, "Single k");
    asymptote->add_option("--all-up-to", all_up_to, "All k from 0 to K (default 8)");
    asymptote->add_option("--bound", bound, "Real bound B, floored to the largest q^(k/d) <= B");
    auto* verify = app.add_subcommand("verify", "Run the identity and oracle checks");
    add_spec(verify);
    verify->add_option("--max-coeff", opt.max_coeff, "Largest coefficient index to check")->check(CLI::Range(0u, 200u));
    auto* curve_cmd = app.add_subcommand("curve", "Genus-1 spec for y^2 = h(t) and phi = z^d + 1/f");
    curve_cmd->set_help_flag("--help", "Print this help message and exit");
    add_common(curve_cmd);
    curve_cmd->add_option("--q", curve.q, "Field size")->required();
    curve_cmd->add_option("--h", curve.h, "Cubic h(t)")->required();
    curve_cmd->add_option("--f", curve.f, "Polynomial f(t)")->required();
    curve_cmd->add_option("--d", curve.d, "Map degree")->required();
    curve_cmd->add_option("--base-modulus", curve.base_modulus, "Modulus in y defining F_q when q is not prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }

    opt.format = format == "text" ? Format::text : Format::json;
    if (asymptote->parsed()) {
        if (asymptote->count("--bound-exponent"))
            opt.bound_exponent = bound_exponent;
        if (asymptote->count("--all-up-to"))
            opt.all_up_to = all_up_to;
        if (asymptote->count("--bound"))
            opt.bound = bound;
    }

    return guarded(
        [&] {
            if (curve_cmd->parsed())
                return cmd_curve(curve, opt, std::cout);
            const auto spec = load_spec(spec_path);
            if (zeta->parsed())
                return cmd_zeta(spec, opt, std::cout);
            if (poles->parsed())
                return cmd_poles(spec, opt, std::cout);
            if (asymptote->parsed())
                return cmd_asymptote(spec, opt, std::cout);
            return cmd_verify(spec, opt, std::cout);
        },
        std::cerr);
}
