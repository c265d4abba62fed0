#include "doctest.h"

#include <sstream>

#include "heightzeta/asymptotics.hpp"
#include "heightzeta/cli.hpp"
#include "heightzeta/error.hpp"
#include "heightzeta/serialize.hpp"
#include "support.hpp"

using namespace hz;
using io::json;
using test::R;

namespace {

std::string data(const std::string& name)
{
    return std::string(HZ_TEST_DATA_DIR) + "/" + name;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::function<int(std::ostream&)>& fn)
{
    std::ostringstream out, err;
    const int code = cli::guarded([&] { return fn(out); }, err);
    return {code, out.str(), err.str()};
}

Run run_spec(int (*cmd)(const zeta::ProblemSpec&, const cli::Options&, std::ostream&), const std::string& file,
             cli::Options opt = {})
{
    return run([&](std::ostream& out) { return cmd(cli::load_spec(data(file)), opt, out); });
}

} // namespace

TEST_CASE("spec JSON parsing")
{
    const auto s = io::spec_from_json(json::parse(R"({"q": 5, "genus": 0, "d": 2, "f": "t"})"));
    CHECK(s.bad_places == std::vector<zeta::BadPlaceData>{{1, 1}});
    CHECK(s.source.has_value());
    CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"q": 5, "genus": 0, "d": 2})")), ValidationError);
    CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"q": 5, "genus": 0, "d": 2, "f": "t", "bad_places": []})")),
                    ValidationError);
    CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"q": 5, "genus": 0, "d": 2, "f": "t", "colour": 1})")),
                    ValidationError);
    CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"q": 6, "genus": 0, "d": 2, "f": "t"})")), ValidationError);
    CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"q": 5, "genus": 1, "d": 2, "bad_places": []})")),
                    ValidationError);
    CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"q": "5", "genus": 0, "d": 2, "f": "t"})")), ValidationError);
    // genus 1 given by a curve
    const auto c = io::spec_from_json(json::parse(R"({"q": 5, "genus": 1, "d": 2, "f": "t", "h": "t^3+3"})"));
    CHECK(c.bad_places == std::vector<zeta::BadPlaceData>{{2, 1}});
    CHECK(c.frobenius_trace == 0);
    CHECK_THROWS_AS(
        io::spec_from_json(json::parse(R"({"q": 5, "genus": 1, "d": 2, "f": "t", "h": "t^3+3", "frobenius_trace": 2})")),
        ValidationError);
    // F_9 with an explicit modulus
    const auto f9 = io::spec_from_json(json::parse(R"J({"q": 9, "genus": 0, "d": 2, "f": "t^2+(y)", "base_modulus": "y^2+1"})J"));
    CHECK(f9.q == 9);
}

TEST_CASE("JSON round trips")
{
    std::vector<zeta::ProblemSpec> specs{test::genus0(5, "t", 2), test::genus0(3, "t^2+1", 3),
                                         test::genus1(5, 0, 2, {{2, 1}}), test::genus1(7, -3, 3, {{1, 2}, {2, 1}})};
    for (const auto& s : specs) {
        const json j = io::spec_to_json(s);
        const auto back = io::spec_from_json(json::parse(j.dump()));
        CHECK(back.q == s.q);
        CHECK(back.genus == s.genus);
        CHECK(back.d == s.d);
        CHECK(back.frobenius_trace == s.frobenius_trace);
        CHECK(back.bad_places == s.bad_places);
        CHECK(io::spec_to_json(back) == j);

        const auto z = zeta::assemble_zeta(s).combined;
        CHECK(io::qratfunc_from_json(json::parse(io::qratfunc_to_json(z).dump())) == z);
    }
    for (const char* r : {"0", "5", "-7/3", "8/91", "123456789012345678901234567890/7"})
        CHECK(io::rational_from_json(json::parse(io::rational_to_json(R(r)).dump())) == R(r));
    CHECK(io::rational_from_json(json(12)) == 12);
    CHECK(io::rational_to_json(R("-1/2")) == json("-1/2"));
    CHECK_THROWS_AS(io::rational_from_json(json("0.5")), ValidationError);

    const auto p = test::QP({"1", "-3/4", "0", "9"});
    CHECK(io::qpoly_from_json(json::parse(io::qpoly_to_json(p).dump())) == p);
}

TEST_CASE("pole JSON")
{
    const auto rep = asym::build_report(zeta::assemble_zeta(test::genus1(5, 0, 2, {{2, 1}})).combined);
    for (const auto& rec : rep.pole_records) {
        const json j = io::pole_record_to_json(rec, 2);
        CHECK(j.at("order") == 1);
        const auto poly = io::qpoly_from_json(j.at("min_poly"));
        CHECK(poly == rec.factor);
        const auto& c1 = j.at("laurent").at(0);
        CHECK(io::qpoly_from_json(c1.at("coeffs")) == rec.laurent[0].rep);
        CHECK(j.at("poles").size() == rec.numeric_poles.size());
    }
    CHECK(io::round12(0.1 + 0.2) == 0.3);
    CHECK(std::signbit(io::round12(-1e-20)) == false);
}

TEST_CASE("zeta command")
{
    const auto r = run_spec(cli::cmd_zeta, "genus0_q5_t.json");
    REQUIRE(r.code == cli::kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j.at("combined").at("num") == json({"0", "5", "-5"}));
    CHECK(j.at("combined").at("den") == json({"1", "-5"}));

    const auto e = run_spec(cli::cmd_zeta, "inert_q5.json");
    CHECK(e.code == cli::kExitOk);
    CHECK(io::qratfunc_from_json(json::parse(e.out).at("combined"))
          == zeta::assemble_zeta(test::genus1(5, 0, 2, {{2, 1}})).combined);

    const auto bad = run_spec(cli::cmd_zeta, "malformed_f.json");
    CHECK(bad.code == cli::kExitValidation);
    CHECK(bad.err.find("cannot parse polynomial") != std::string::npos);
    CHECK(run_spec(cli::cmd_zeta, "missing.json").code == cli::kExitValidation);
}

TEST_CASE("poles command")
{
    const auto r = run_spec(cli::cmd_poles, "genus0_q5_t.json");
    REQUIRE(r.code == cli::kExitOk);
    const auto j = json::parse(r.out);
    REQUIRE(j.at("records").size() == 1);
    CHECK(j.at("records")[0].at("laurent")[0].at("coeffs") == json({"4/5"}));

    const auto e = json::parse(run_spec(cli::cmd_poles, "inert_q5.json").out);
    std::size_t poles = 0;
    for (const auto& rec : e.at("records"))
        poles += rec.at("poles").size();
    CHECK(poles == 4);
    const auto s = json::parse(run_spec(cli::cmd_poles, "split_q5.json").out);
    poles = 0;
    for (const auto& rec : s.at("records"))
        poles += rec.at("poles").size();
    CHECK(poles == 6);
}

TEST_CASE("asymptote command")
{
    cli::Options opt;
    opt.all_up_to = 8;
    const auto r = run_spec(cli::cmd_asymptote, "genus0_q5_t.json", opt);
    REQUIRE(r.code == cli::kExitOk);
    const auto rows = json::parse(r.out).at("rows");
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].at("difference") == "-4/5");
    for (std::size_t k = 1; k < rows.size(); ++k)
        CHECK(rows[k].at("difference") == "1/5");
    CHECK(rows[2].at("oracle") == 25);

    cli::Options neg;
    neg.bound_exponent = -1;
    CHECK(run_spec(cli::cmd_asymptote, "genus0_q5_t.json", neg).code == cli::kExitValidation);

    cli::Options b;
    b.bound = 130; // 5^(6/2) = 125 <= 130 < 5^(7/2)
    const auto rb = json::parse(run_spec(cli::cmd_asymptote, "genus0_q5_t.json", b).out).at("rows");
    REQUIRE(rb.size() == 1);
    CHECK(rb[0].at("k") == 6);

    cli::Options over;
    over.all_up_to = 16;
    const auto ro = json::parse(run_spec(cli::cmd_asymptote, "genus0_q5_t.json", over).out);
    CHECK(ro.contains("note"));
    CHECK_FALSE(ro.at("rows")[16].contains("oracle"));
}

TEST_CASE("verify command")
{
    cli::Options opt;
    opt.max_coeff = 7; // M = 10 runs as a CLI test
    const auto r = run_spec(cli::cmd_verify, "genus0_q5_t.json", opt);
    CHECK(r.code == cli::kExitOk);
    CHECK(json::parse(r.out).at("ok") == true);
    opt.max_coeff = 8;
    CHECK(run_spec(cli::cmd_verify, "genus0_q3_t2p1.json", opt).code == cli::kExitOk);
    CHECK(run_spec(cli::cmd_verify, "split_q5.json", opt).code == cli::kExitOk);
    CHECK(run_spec(cli::cmd_verify, "hasse_violation.json", opt).code == cli::kExitValidation);
}

TEST_CASE("curve command")
{
    auto curve = [](const char* h) {
        cli::CurveArgs a;
        a.q = 5;
        a.h = h;
        a.f = "t";
        a.d = 2;
        return run([&](std::ostream& out) { return cli::cmd_curve(a, {}, out); });
    };
    const auto r = curve("t^3+3");
    REQUIRE(r.code == cli::kExitOk);
    const auto spec = io::spec_from_json(json::parse(r.out));
    CHECK(spec.bad_places == std::vector<zeta::BadPlaceData>{{2, 1}});
    CHECK(io::spec_from_json(json::parse(curve("t^3+1").out)).bad_places
          == std::vector<zeta::BadPlaceData>{{1, 1}, {1, 1}});
    CHECK(curve("t^3+t").code == cli::kExitValidation);
}

TEST_CASE("exit code mapping")
{
    std::ostringstream err;
    CHECK(cli::guarded([]() -> int { throw ValidationError("x"); }, err) == cli::kExitValidation);
    CHECK(cli::guarded([]() -> int { throw IdentityError("x"); }, err) == cli::kExitIdentity);
    CHECK(cli::guarded([]() -> int { throw MixedModulusError("x"); }, err) == cli::kExitIdentity);
    CHECK(cli::guarded([]() -> int { throw std::runtime_error("x"); }, err) == cli::kExitFailure);
    CHECK(cli::guarded([] { return 0; }, err) == cli::kExitOk);
}
