#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "zetakit/cli.hpp"
#include "zetakit/errors.hpp"

using namespace zetakit;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zetakit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const Outcome o = invoke(args);
  REQUIRE_MESSAGE(o.code == expected_code, o.err);
  return nlohmann::json::parse(o.out);
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(ZETAKIT_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

const char* kElliptic = "y^2*z - x^3 - x*z^2 mod 3";

}  // namespace

TEST_CASE("curve-zeta on the F_3 elliptic curve") {
  const auto j = invoke_json({"curve-zeta", kElliptic, "--genus", "1", "--max-m", "3"});
  CHECK(j["passed"] == true);
  CHECK(j["result"]["P1_coefficients"] == nlohmann::json::array({1, 0, 3}));
  CHECK(j["result"]["counts"] == nlohmann::json::array({4, 16, 28}));
  CHECK(j["checks"].size() == 6);
}

TEST_CASE("curve-zeta exit codes") {
  CHECK(invoke({"curve-zeta", "y^^2 mod 3"}).code == 2);
  CHECK(invoke({"curve-zeta", "x^4+y^4+z^4 mod 101", "--max-m", "4"}).code == 3);
  // Singular cuspidal cubic: reported as a failed check, not an input error.
  const Outcome o = invoke({"curve-zeta", "y^2*z - x^3 mod 5"});
  CHECK(o.code == 1);
  CHECK(o.out.find("FAIL") != std::string::npos);
}

TEST_CASE("explicit-formula in the function-field setting") {
  const auto j = invoke_json({"explicit-formula", R"({"1": "1"})", "--curve", kElliptic});
  CHECK(j["result"]["geometric_exact"] == "4");
  CHECK(j["result"]["spectral"].get<double>() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(j["passed"] == true);

  CHECK(invoke({"explicit-formula", R"({"1": "1/0"})", "--curve", kElliptic}).code == 2);
  CHECK(invoke({"explicit-formula", R"({"1": "x"})", "--curve", kElliptic}).code == 2);
}

TEST_CASE("explicit-formula random functions are reproducible from the seed") {
  const std::vector<std::string> base{"explicit-formula", "--curve", kElliptic, "--random", "20"};
  auto with_seed = [&](const std::string& seed) {
    auto args = base;
    args.insert(args.end(), {"--seed", seed});
    return invoke_json(args);
  };
  const auto a = with_seed("7");
  const auto b = with_seed("7");
  const auto c = with_seed("8");
  CHECK(a["passed"] == true);
  CHECK(a["checks"] == b["checks"]);
  CHECK(a["checks"] != c["checks"]);
}

TEST_CASE("explicit-formula in characteristic 0") {
  const auto j = invoke_json({"explicit-formula", "log-gaussian width=0.25", "--T", "30"});
  CHECK(j["passed"] == true);
  CHECK(j["result"]["residual"].get<double>() <= 1e-4);
  CHECK(j["result"]["W_zero_sum"].get<double>() == doctest::Approx(0.854047675122786806644).epsilon(1e-9));

  CHECK(invoke({"explicit-formula", "bump halfwidth=-1"}).code == 2);
  CHECK(invoke({"explicit-formula", "triangle width=1"}).code == 2);
  // T = 14.1 lies within 0.1 of the first zero.
  CHECK(invoke({"explicit-formula", "log-gaussian width=0.25", "--T", "14.1"}).code == 2);
}

TEST_CASE("abszeta actions") {
  SUBCASE("closed form of SL2") {
    const auto j = invoke_json({"abszeta", "SL2 closed s=5"});
    CHECK(j["result"]["zeta"].get<double>() == 2.0);
    CHECK(j["passed"] == true);
  }
  SUBCASE("P1 limit converges to 1/6") {
    const auto j = invoke_json({"abszeta", "P1", "limit", "s=3"});
    const auto& values = j["result"]["values"];
    REQUIRE(values.size() == 3);
    CHECK(std::abs(values[2].get<double>() - 1.0 / 6.0) < std::abs(values[0].get<double>() - 1.0 / 6.0));
    CHECK(std::abs(values[2].get<double>() - 1.0 / 6.0) < 1e-3);
  }
  SUBCASE("integral against the closed form") {
    const auto j = invoke_json({"abszeta", R"([{"alpha": 2.5, "m": 2}, {"alpha": 0.7, "m": -3}, {"alpha": 0, "m": 1}])",
                                "integral", "w=0.3", "s=5.5"});
    CHECK(j["result"]["integral"].get<double>() == doctest::Approx(0.164176344284237309178).epsilon(1e-8));
  }
  SUBCASE("cc-constant brackets") {
    const auto j = invoke_json({"abszeta", "cc-constant", "K=100"});
    CHECK(j["passed"] == true);
    CHECK(j["result"]["bracket_low"].get<double>() <= j["result"]["constant"].get<double>());
    CHECK(j["result"]["constant"].get<double>() <= j["result"]["bracket_high"].get<double>());
  }
  SUBCASE("lemma") { CHECK(invoke_json({"abszeta", "SL2", "lemma", "s=4"})["passed"] == true); }
  SUBCASE("spec errors exit 2") {
    CHECK(invoke({"abszeta", "GL7 closed s=5"}).code == 2);
    CHECK(invoke({"abszeta", "SL2 closed"}).code == 2);
    CHECK(invoke({"abszeta", "SL2 closed s=five"}).code == 2);
    CHECK(invoke({"abszeta", "SL2 closed s=5 q=1"}).code == 2);
    CHECK(invoke({"abszeta", "SL2 closed s=3"}).code == 2);
    CHECK(invoke({"abszeta", "SL2 frobnicate"}).code == 2);
  }
}

TEST_CASE("abszeta plot-data is two-column CSV") {
  const Outcome o = invoke({"abszeta", "SL2", "plot-data", "from=4", "to=5", "n=3"});
  CHECK(o.code == 0);
  CHECK(o.out == "s,zeta_N\r\n4,3\r\n4.5,2.333333333333333\r\n5,2\r\n");
}

TEST_CASE("zeros verify and info") {
  CHECK(invoke({"zeros", "verify"}).code == 0);
  const auto info = invoke_json({"zeros", "info"});
  CHECK(info["result"]["count"] == 100);

  const std::string bad = write_temp("zeros_bad.txt", "# one wrong ordinate\n14.0\n21.022039638771555\n");
  const Outcome o = invoke({"zeros", "verify", bad});
  CHECK(o.code == 1);
  CHECK(o.out.find("line 2") != std::string::npos);

  CHECK(invoke({"zeros", "verify", std::string(ZETAKIT_TEST_TMP) + "/does_not_exist.txt"}).code == 2);
  const std::string garbage = write_temp("zeros_garbage.txt", "14.13\nabc\n");
  CHECK(invoke({"zeros", "info", garbage}).code == 2);
}

TEST_CASE("category-zeta matches the Euler product") {
  const auto j = invoke_json({"category-zeta", "--s", "2", "--bound", "1000"});
  CHECK(j["passed"] == true);
  CHECK(j["result"]["factors"] == 168);

  const std::string csv = write_temp("norms.csv", "norm,count\n2,1\n4,2\n");
  const auto k = invoke_json({"category-zeta", "--csv", csv, "--s", "1"});
  // 1/(1 - 1/2) * (1/(1 - 1/4))^2
  CHECK(k["result"]["value"]["re"].get<double>() == doctest::Approx(2.0 * 16.0 / 9.0));
  const std::string out_of_order = write_temp("norms_bad.csv", "4,1\n2,1\n");
  CHECK(invoke({"category-zeta", "--csv", out_of_order}).code == 2);
}

TEST_CASE("global flags and config file") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"zeros", "info", "--format", "xml"}).code == 2);
  CHECK(invoke({"--tol", "1", "zeros", "info"}).code == 2);
  CHECK(invoke({"--T", "-5", "zeros", "info"}).code == 2);

  const std::string cfg = write_temp("run.ini", "T = 30\nformat = json\nseed = 99\n");
  const Outcome o = invoke({"--config", cfg, "zeros", "info"});
  REQUIRE(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["config"]["T"] == 30.0);
  CHECK(j["config"]["seed"] == 99);

  // Flags override the file.
  const auto k = invoke_json({"--config", cfg, "--T", "50", "zeros", "info"});
  CHECK(k["config"]["T"] == 50.0);

  const std::string extra = write_temp("extra.ini", "bogus = 1\n");
  CHECK(invoke({"--config", extra, "zeros", "info"}).code == 2);
}

TEST_CASE("csv output quotes fields") {
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(cli::csv_field("two\nlines") == "\"two\nlines\"");
  const Outcome o = invoke({"curve-zeta", kElliptic, "--format", "csv"});
  CHECK(o.code == 0);
  CHECK(o.out.rfind("m,N_m,lefschetz,", 0) == 0);
}

TEST_CASE("format_double round-trips") {
  for (double x : {0.1, 1.0 / 3.0, 2.0, 1e-300, 6.02214076e23, -0.0}) {
    CHECK(std::stod(cli::format_double(x)) == x);
  }
  CHECK(cli::format_double(0.1) == "0.1");
}

TEST_CASE("exit code mapping") {
  CHECK(cli::exit_code_for(ParseError("x")) == 2);
  CHECK(cli::exit_code_for(DomainError("x")) == 2);
  CHECK(cli::exit_code_for(BudgetError("x")) == 3);
  CHECK(cli::exit_code_for(QuadratureError("x")) == 1);
  CHECK(cli::exit_code_for(std::runtime_error("x")) == 1);
}
