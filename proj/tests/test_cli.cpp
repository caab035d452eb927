#include <doctest.h>

#include <fstream>
#include <sstream>

#include "wk/cli.hpp"
#include "wk/coefficients.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = wk::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("compute") {
  CHECK(run({"compute", "1", "1"}).out == "1/24\n");
  CHECK(run({"compute", "2", "3", "--method", "zograf"}).out == "29/5760\n");
  CHECK(run({"compute", "3", "2", "--method", "bdy"}).out == "29/5760\n");
  CHECK(run({"compute", "5", "0", "--method", "zograf"}).out == "1/1152\n");
  CHECK(run({"compute", "1", "2"}).code == 2);
  CHECK(run({"compute", "1"}).code == 2);
  CHECK(run({"compute", "1", "1", "--method", "fast"}).code == 2);
  CHECK(run({"compute", "x", "1"}).code == 2);
}

TEST_CASE("compute both agrees with each single method") {
  for (long g = 1; g <= 6; ++g) {
    for (long d1 = 0; d1 <= 3 * g - 1; ++d1) {
      const std::string a = std::to_string(d1);
      const std::string b = std::to_string(3 * g - 1 - d1);
      const auto both = run({"compute", a, b, "--method", "both"}).out;
      CHECK(both == run({"compute", a, b, "--method", "bdy"}).out);
      CHECK(both == run({"compute", a, b, "--method", "zograf"}).out);
    }
  }
}

TEST_CASE("table golden files") {
  CHECK(run({"table", "--genus-max", "2"}).out == slurp(WK_GOLDEN_DIR "/table_g2.csv"));
  CHECK(run({"table", "--genus-max", "2", "--format", "csv"}).out == slurp(WK_GOLDEN_DIR "/table_g2.csv"));
  CHECK(run({"table", "--genus-max", "2", "--format", "json"}).out == slurp(WK_GOLDEN_DIR "/table_g2.json"));
}

TEST_CASE("table shape and errors") {
  const auto g1 = run({"table", "--genus-max", "1", "--format", "csv"});
  CHECK(g1.code == 0);
  CHECK(g1.out == "g,d1,d2,value\n1,0,2,1/24\n1,1,1,1/24\n1,2,0,1/24\n");
  const auto rows = wk::cli::parse_json(run({"table", "--genus-max", "2", "--format", "json"}).out);
  CHECK(rows.size() == 9);
  CHECK(run({"table", "--genus-max", "0"}).code == 2);
  CHECK(run({"table", "--genus-max", "1", "--format", "xml"}).code == 2);
  CHECK(run({"table"}).code == 2);
}

TEST_CASE("table emissions round-trip byte for byte") {
  const auto csv = run({"table", "--genus-max", "7", "--format", "csv"}).out;
  CHECK(wk::cli::render_csv(wk::cli::parse_csv(csv)) == csv);
  const auto json = run({"table", "--genus-max", "7", "--format", "json"}).out;
  CHECK(wk::cli::render_json(wk::cli::parse_json(json)) == json);
  CHECK(wk::cli::parse_csv(csv) == wk::cli::parse_json(json));
}

TEST_CASE("table parsers reject malformed input") {
  CHECK_THROWS_AS(wk::cli::parse_csv("g,d1,d2\n"), wk::DomainError);
  CHECK_THROWS_AS(wk::cli::parse_csv("g,d1,d2,value\n1,0,2\n"), wk::DomainError);
  CHECK_THROWS_AS(wk::cli::parse_csv("g,d1,d2,value\n1,0,x,1/24\n"), wk::DomainError);
  CHECK_THROWS_AS(wk::cli::parse_json("{}"), wk::DomainError);
  CHECK_THROWS_AS(wk::cli::parse_json("[{\"g\":1}]"), wk::DomainError);
  CHECK_THROWS_AS(wk::cli::parse_json("[{\"g\":1,\"d1\":0,\"d2\":2,\"value\":1}]"), wk::DomainError);
  CHECK_THROWS_AS(wk::cli::parse_json("not json"), wk::DomainError);
}

TEST_CASE("verify") {
  const auto one = run({"verify", "--genus-max", "1"});
  CHECK(one.code == 0);
  CHECK(one.out.find("lemma5: 3 checked, 0 failed") != std::string::npos);
  CHECK(one.out.find("increment6: 2 checked, 0 failed") != std::string::npos);
  CHECK(one.out.find("equivalence7: 1 checked, 0 failed") != std::string::npos);
  CHECK(one.out.find("PASS") != std::string::npos);

  CHECK(run({"verify", "--genus-max", "10", "--oracle-genus-max", "8"}).code == 0);
  CHECK(run({"verify", "--genus-max", "3", "--oracle-genus-max", "4"}).code == 2);
  CHECK(run({"verify", "--genus-max", "0"}).code == 2);
  CHECK(run({"verify", "--genus-max", "2", "--oracle-genus-max", "-1"}).code == 2);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("verify exits 1 on a corrupted coefficient") {
  wk::ScopedACoeffPerturbation corrupt(4, 7, wk::ExactRational(1));
  const auto r = run({"verify", "--genus-max", "4", "--oracle-genus-max", "0"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAILED ") != std::string::npos);
  CHECK(r.out.find("FAIL\n") != std::string::npos);
}

TEST_CASE("bench") {
  const auto bdy = run({"bench", "--genus-max", "50", "--method", "bdy"});
  CHECK(bdy.code == 0);
  // sum_{g=1}^{50} 3g
  CHECK(bdy.out.find("a_evaluations=3825 b_evaluations=0") != std::string::npos);
  const auto zograf = run({"bench", "--genus-max", "50", "--method", "zograf"});
  // sum_{g=1}^{50} (3g - 1)
  CHECK(zograf.out.find("a_evaluations=0 b_evaluations=3775") != std::string::npos);
  const auto both = run({"bench", "--genus-max", "1", "--method", "both"});
  CHECK(both.out.find("method=bdy") != std::string::npos);
  CHECK(both.out.find("method=zograf") != std::string::npos);
  CHECK(run({"bench", "--genus-max", "1"}).code == 2);
  CHECK(run({"bench", "--genus-max", "0", "--method", "bdy"}).code == 2);
}

TEST_CASE("help and unknown commands") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
