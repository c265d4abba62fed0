#include "heightzeta/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "heightzeta/asymptotics.hpp"
#include "heightzeta/curve.hpp"
#include "heightzeta/error.hpp"
#include "heightzeta/oracle.hpp"
#include "heightzeta/serialize.hpp"

namespace hz::cli {

using io::json;
using qs::Rational;

namespace {

std::string legend(const qs::VarTag& tag)
{
    return "w = " + tag.base.get_str() + "^(-s/" + std::to_string(tag.d) + ")";
}

void emit(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

bool oracle_available(const zeta::ProblemSpec& spec)
{
    return spec.genus == 0 && spec.source.has_value();
}

// Largest coefficient index the oracle can certify within budget.
unsigned oracle_reach(const zeta::ProblemSpec& spec, unsigned wanted, bool override_budget)
{
    if (override_budget)
        return wanted;
    const unsigned n = oracle::max_height_within_budget(spec.q);
    return std::min(wanted, spec.d * n + spec.d - 1);
}

json check(const std::string& name, bool ok, const std::string& detail)
{
    json j{{"name", name}, {"ok", ok}};
    if (!detail.empty())
        j["detail"] = detail;
    return j;
}

} // namespace

zeta::ProblemSpec load_spec(const std::string& path)
{
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file)
            throw ValidationError("cannot open spec file " + path);
        in = &file;
    }
    json j;
    try {
        j = json::parse(*in);
    } catch (const json::parse_error& ex) {
        throw ValidationError(std::string("spec is not valid JSON: ") + ex.what());
    }
    return io::spec_from_json(j);
}

int cmd_zeta(const zeta::ProblemSpec& spec, const Options& opt, std::ostream& out)
{
    const auto z = zeta::assemble_zeta(spec);
    if (opt.format == Format::text) {
        out << "Z(w) = " << z.combined.to_string() << "\n  where " << legend(z.combined.tag()) << '\n';
        out << "main term:       " << z.main_term.to_string() << '\n';
        out << "correction term: " << z.correction_term.to_string() << '\n';
        return kExitOk;
    }
    emit(out, {{"variable", legend(z.combined.tag())},
               {"combined", io::qratfunc_to_json(z.combined)},
               {"main_term", io::qratfunc_to_json(z.main_term)},
               {"correction_term", io::qratfunc_to_json(z.correction_term)}});
    return kExitOk;
}

int cmd_poles(const zeta::ProblemSpec& spec, const Options& opt, std::ostream& out)
{
    const auto report = asym::build_report(zeta::assemble_zeta(spec).combined);
    const auto& tag = report.reduced.tag();
    if (opt.format == Format::text) {
        out << "alpha = " << spec.q << "^(" << report.alpha_exponent << "/" << spec.d << "), u = alpha^(-s)\n";
        for (const auto& rec : report.pole_records) {
            out << "factor " << rec.factor.to_string("u") << "  order " << rec.order << "  |u0| = " << std::setprecision(12)
                << rec.modulus << '\n';
            for (const auto& p : rec.numeric_poles)
                out << "  a = " << io::round12(p.re) << " + " << io::round12(p.im) << "i\n";
            const auto log_q = qs::laurent_log_q(rec, spec.d);
            for (std::size_t n = 0; n < rec.laurent.size(); ++n)
                out << "  c_" << n + 1 << " = " << rec.laurent[n].rep.to_string("u") << "   [(s-a) log q: "
                    << log_q[n].rep.to_string("u") << "]\n";
        }
        return kExitOk;
    }
    json recs = json::array();
    for (const auto& rec : report.pole_records)
        recs.push_back(io::pole_record_to_json(rec, spec.d));
    emit(out, {{"alpha_exponent", report.alpha_exponent},
               {"variable", "u = " + tag.base.get_str() + "^(-s/" + std::to_string(tag.d) + ")"},
               {"records", recs}});
    return kExitOk;
}

int cmd_asymptote(const zeta::ProblemSpec& spec, const Options& opt, std::ostream& out)
{
    long long lo = 0;
    long long hi = 8;
    if (opt.bound) {
        if (!(*opt.bound >= 1))
            throw ValidationError("bound B must be >= 1");
        const long double k = spec.d * std::log(static_cast<long double>(*opt.bound)) / std::log(static_cast<long double>(spec.q));
        lo = hi = static_cast<long long>(std::floor(k + 1e-12L));
    } else if (opt.bound_exponent) {
        lo = hi = *opt.bound_exponent;
    } else if (opt.all_up_to) {
        hi = *opt.all_up_to;
    }
    if (lo < 0 || hi < 0)
        throw ValidationError("bound exponent must be >= 0");
    if (hi > 400)
        throw ValidationError("bound exponent too large (max 400)");

    const auto report = asym::build_report(zeta::assemble_zeta(spec).combined);
    std::optional<oracle::CountTable> counts;
    std::string note;
    if (oracle_available(spec)) {
        if (oracle_reach(spec, static_cast<unsigned>(hi), opt.budget_override) >= hi) {
            counts = oracle::count_canonical_heights(spec, static_cast<unsigned>(hi), {opt.budget_override, 0});
        } else {
            note = "oracle skipped: enumeration over budget";
        }
    }

    json rows = json::array();
    std::ostringstream text;
    Rational main = 0;
    std::uint64_t cumulative = 0;
    long long m_done = -1;
    for (long long k = 0; k <= hi; ++k) {
        // main term is cumulative in m = floor(k/e)
        const long long top = k / report.alpha_exponent;
        while (m_done < top)
            main += asym::predicted_coefficient(report, ++m_done);
        if (counts)
            cumulative += counts->at(static_cast<unsigned>(k));
        if (k < lo)
            continue;
        json row{{"k", k}, {"main_term", io::rational_to_json(main)}};
        text << std::setw(4) << k << "  " << std::setw(28) << qs::to_string(main);
        if (counts) {
            const Rational diff = Rational(qs::Integer(std::to_string(cumulative))) - main;
            row["oracle"] = cumulative;
            row["difference"] = io::rational_to_json(diff);
            text << "  " << std::setw(16) << cumulative << "  " << qs::to_string(diff);
        }
        text << '\n';
        rows.push_back(row);
    }

    if (opt.format == Format::text) {
        out << "B = " << spec.q << "^(k/" << spec.d << "), alpha = " << spec.q << "^(" << report.alpha_exponent << "/"
            << spec.d << ")\n";
        out << "   k  main term" << (counts ? "                     oracle N(B)       N(B) - main" : "") << '\n';
        out << text.str();
        if (!note.empty())
            out << note << '\n';
        return kExitOk;
    }
    json j{{"alpha_exponent", report.alpha_exponent}, {"rows", rows}};
    if (!note.empty())
        j["note"] = note;
    emit(out, j);
    return kExitOk;
}

int cmd_verify(const zeta::ProblemSpec& spec, const Options& opt, std::ostream& out)
{
    const unsigned M = opt.max_coeff;
    json checks = json::array();
    bool all_ok = true;
    auto record = [&](json c) {
        all_ok = all_ok && c.at("ok").get<bool>();
        checks.push_back(std::move(c));
    };

    const auto dec = zeta::decomposition_check(spec);
    record(check("decomposition", dec.ok, dec.detail));

    const auto z = zeta::assemble_zeta(spec);
    const auto report = asym::build_report(z.combined);
    {
        const auto a = report.reduced.series(M);
        const auto p = report.principal.series(M);
        const auto g = report.remainder.series(M);
        std::string detail;
        for (unsigned m = 0; m <= M && detail.empty(); ++m)
            if (a[m] != p[m] + g[m])
                detail = "mismatch at m = " + std::to_string(m);
        record(check("principal_split", detail.empty(), detail));
    }
    {
        const auto rc = asym::remainder_check(report, std::min(M, 200u));
        std::ostringstream detail;
        detail << "max |a_m - p_m| = " << io::round12(rc.max_abs) << ", decay base " << io::round12(report.decay_base);
        record(check("remainder", rc.ok, detail.str()));
    }

    if (oracle_available(spec)) {
        const unsigned reach = oracle_reach(spec, M, opt.budget_override);
        const oracle::Options oo{opt.budget_override, 0};
        const auto table = oracle::count_canonical_heights(spec, reach, oo);
        const auto series = z.combined.series(reach);
        std::string detail;
        for (unsigned m = 0; m <= reach && detail.empty(); ++m)
            if (series[m] != Rational(qs::Integer(std::to_string(table.at(m)))))
                detail = "a_" + std::to_string(m) + ": zeta " + qs::to_string(series[m]) + ", oracle "
                         + std::to_string(table.at(m));
        record(check("oracle", detail.empty(), detail.empty() ? "m <= " + std::to_string(reach) : detail));

        // regions: oracle histograms against the partial zeta functions
        const unsigned n = reach / spec.d;
        std::string rdetail;
        for (zeta::PlaceSubset T = 0; T < (zeta::PlaceSubset{1} << spec.bad_places.size()) && rdetail.empty(); ++T) {
            const auto counts = oracle::count_region(spec, T, n, oo);
            const auto ser = zeta::partial_zeta_DT(spec, T).series(n);
            for (unsigned h = 0; h <= n; ++h)
                if (ser[h] != Rational(qs::Integer(std::to_string(counts.at(h)))))
                    rdetail = "region T = " + std::to_string(T) + ", height " + std::to_string(h);
        }
        record(check("regions", rdetail.empty(), rdetail));
    } else {
        checks.push_back({{"name", "oracle"}, {"ok", true}, {"skipped", true}});
    }

    if (opt.format == Format::text) {
        for (const auto& c : checks) {
            out << (c.at("ok").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
            if (c.contains("skipped"))
                out << " (skipped: needs a genus-0 spec given by f)";
            if (c.contains("detail"))
                out << "  " << c.at("detail").get<std::string>();
            out << '\n';
        }
    } else {
        emit(out, {{"ok", all_ok}, {"checks", checks}});
    }
    return all_ok ? kExitOk : kExitIdentity;
}

int cmd_curve(const CurveArgs& args, const Options& opt, std::ostream& out)
{
    const gf::Field field = io::make_field(args.q, args.base_modulus);
    const gf::PolyRing ring(field);
    const auto spec = curve::build_genus1_spec(field, ring.parse(args.h), ring.parse(args.f), args.d);
    if (opt.format == Format::text) {
        out << "q = " << spec.q << ", genus 1, Frobenius trace " << spec.frobenius_trace << ", d = " << spec.d << '\n';
        for (const auto& bp : spec.bad_places)
            out << "bad place: f_v = " << bp.f_v << ", v(f) = " << bp.vf << '\n';
        return kExitOk;
    }
    emit(out, io::spec_to_json(spec));
    return kExitOk;
}

int guarded(const std::function<int()>& fn, std::ostream& err)
{
    try {
        return fn();
    } catch (const ValidationError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitValidation;
    } catch (const MixedModulusError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitIdentity;
    } catch (const IdentityError& ex) {
        err << "identity failure: " << ex.what() << '\n';
        return kExitIdentity;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << '\n';
        return kExitFailure;
    }
}

} // namespace hz::cli
