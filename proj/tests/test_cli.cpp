#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include <nlohmann/json.hpp>

#include "hypo/cli.hpp"

using namespace hypo;
using nlohmann::json;

namespace {

std::pair<int, std::string> run_cfg(const cli::RunConfig& cfg) {
    std::ostringstream out;
    int code = cli::run(cfg, out);
    return {code, out.str()};
}

}  // namespace

TEST_CASE("project prints the closed-form coefficient") {
    cli::RunConfig cfg;
    cfg.command = "project";
    cfg.args = {"1", "0", "2"};
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 0);
    CHECK(text == "(2/3)·z^1\n");

    cfg.args = {"0", "1", "0"};
    CHECK(run_cfg(cfg) == std::pair<int, std::string>{0, "0\n"});

    cfg.args = {"1"};
    CHECK(run_cfg(cfg).first == 1);
}

TEST_CASE("classify exit codes track the verdict") {
    cli::RunConfig cfg;
    cfg.command = "classify";
    cfg.max_n = 128;
    cfg.budget = 60;

    cfg.symbol_text = "z + 0.6*r^2";
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 0);
    CHECK(text.find("NotHyponormal") != std::string::npos);
    CHECK(text.find("radial-perturbation-threshold") != std::string::npos);

    cfg.symbol_text = "z^3";
    auto hyp = run_cfg(cfg);
    CHECK(hyp.first == 0);
    CHECK(hyp.second.find("Hyponormal") == 0);

    cfg.symbol_text = "z^2*r + 0.1*z";  // between the safe and excluded regions
    auto open = run_cfg(cfg);
    CHECK(open.first == 2);
    CHECK(open.second.find("Inconclusive") != std::string::npos);
}

TEST_CASE("parse errors exit 1 with a message") {
    cli::RunConfig cfg;
    cfg.command = "classify";
    cfg.symbol_text = "z + ";
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 1);
    CHECK(text.find("parse error") != std::string::npos);

    cfg.command = "frobnicate";
    cfg.symbol_text = "z";
    CHECK(run_cfg(cfg).first == 1);
}

TEST_CASE("classify json is valid and deterministic") {
    cli::RunConfig cfg;
    cfg.command = "classify";
    cfg.symbol_text = "z + 0.6*r^2";
    cfg.format = cli::Format::Json;
    cfg.max_n = 128;
    auto a = run_cfg(cfg);
    auto b = run_cfg(cfg);
    CHECK(a == b);
    json j = json::parse(a.second);
    CHECK(j["verdict"] == "NotHyponormal");
    CHECK(j["source"] == "radial-perturbation-threshold");
}

TEST_CASE("check json carries a replayable witness") {
    cli::RunConfig cfg;
    cfg.command = "check";
    cfg.symbol_text = "z + 0.6*r^2";
    cfg.format = cli::Format::Json;
    cfg.max_n = 256;
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 0);
    json j = json::parse(text);
    CHECK(j["verdict"] == "NotHyponormal");
    REQUIRE(j["witness"].is_array());
    CHECK(!j["witness"].empty());
    CHECK(j["truncation"].is_number_integer());
    std::string value = j["value"];
    CHECK(value.starts_with("-"));  // exact negative rational

    cfg.symbol_text = "z";  // analytic: the search finds nothing
    CHECK(run_cfg(cfg).first == 2);
}

TEST_CASE("threshold reports the exact necessary bound") {
    cli::RunConfig cfg;
    cfg.command = "threshold";
    cfg.n = 1;
    cfg.s = "2";
    cfg.pencil_size = 64;
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 0);
    CHECK(text.find("1/2") != std::string::npos);
    CHECK(text.find("yes") != std::string::npos);

    cfg.s = "0";
    CHECK(run_cfg(cfg).first == 1);
}

TEST_CASE("annuli emits csv rows") {
    cli::RunConfig cfg;
    cfg.command = "annuli";
    cfg.m = 1;
    cfg.n = 2;
    cfg.s = "1";
    cfg.t = "0";
    cfg.budget = 40;
    cfg.format = cli::Format::Csv;
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 0);
    CHECK(text.starts_with("lo,hi,trial_id\n"));
    CHECK(std::count(text.begin(), text.end(), '\n') > 1);

    cfg.m = 0;
    CHECK(run_cfg(cfg).first == 1);
}

TEST_CASE("algebraic command mirrors the library verdicts") {
    cli::RunConfig cfg;
    cfg.command = "algebraic";
    cfg.m = 2;
    cfg.powers = "1,3";
    cfg.coeffs = "-1";
    auto neg = run_cfg(cfg);
    CHECK(neg.first == 0);
    CHECK(neg.second.find("NotHyponormal") != std::string::npos);

    cfg.coeffs = "1/2";
    auto pos = run_cfg(cfg);
    CHECK(pos.first == 0);
    CHECK(pos.second.find("Hyponormal") == 0);
}

TEST_CASE("scan produces a deterministic csv grid") {
    cli::RunConfig cfg;
    cfg.command = "scan";
    cfg.symbol_text = "z^2*r + a*z";
    cfg.re_range = "2.4:2.6";
    cfg.im_range = "0:0";
    cfg.step = "0.1";
    cfg.max_n = 128;
    cfg.budget = 60;
    auto a = run_cfg(cfg);
    auto b = run_cfg(cfg);
    CHECK(a.first == 0);
    CHECK(a == b);
    CHECK(a.second.starts_with("re_a,im_a,status,source\n"));
    CHECK(std::count(a.second.begin(), a.second.end(), '\n') == 4);  // header + 3 grid points
    CHECK(a.second.find("2.5,0,NotHyponormal") != std::string::npos);

    cfg.symbol_text = "z^2*r + z";  // no parameter token
    CHECK(run_cfg(cfg).first == 1);
}

TEST_CASE("oracle subcommands") {
    cli::RunConfig cfg;
    cfg.command = "oracle";
    cfg.args = {"inner", "2", "1", "1", "1", "0", "0"};
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 0);
    CHECK(text.substr(0, 10) == "0.28571428");

    cfg.args = {"gram", "u"};
    cfg.symbol_text = "z";
    cfg.args[1] = "1";
    auto g = run_cfg(cfg);
    CHECK(g.first == 0);
    CHECK(std::stod(g.second) == doctest::Approx(0.5).epsilon(1e-9));

    cfg.args = {"bogus"};
    CHECK(run_cfg(cfg).first == 1);
}

TEST_CASE("reproduce reports each line and fails honestly") {
    cli::RunConfig cfg;
    cfg.command = "reproduce";
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 1);  // the flat-vector quotient line does not reproduce
    CHECK(text.find("6.41441") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 10);  // 9 lines + summary
}
