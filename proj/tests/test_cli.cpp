#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ptk/cli.hpp"

using namespace ptk;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "ptk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, std::string_view needle) {
  return hay.find(needle) != std::string::npos;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("theta") {
  auto r = run({"theta", "1^9"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "value: 3\n"));
  CHECK(contains(r.out, "branch: CaseB-I\n"));
  CHECK(contains(r.out, "N args: (9, 0)\n"));

  r = run({"theta", "4,4"});
  CHECK(contains(r.out, "value: 2\n"));
  CHECK(contains(r.out, "branch: CaseA\nt: 0\n"));

  r = run({"theta", ""});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "value: 0\n"));
  CHECK(contains(r.out, "branch: EmptyGraph\n"));
}

TEST_CASE("theta json") {
  auto r = run({"theta", "3,3,4", "--json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["value"] == 2);
  CHECK(j["branch"] == "CaseB-I");
  CHECK(j["t"] == 0);
  CHECK(j["epsilon"] == 0);
  CHECK(j["n_args"] == json::array({0, 2}));
  CHECK(j["sigma"] == 1);
  CHECK(j["profile"] == "3^2,4");

  const auto k9 = json::parse(run({"theta", "1^9", "--json"}).out);
  CHECK(k9["sigma"].is_null());
}

TEST_CASE("parse errors exit 2 with the position") {
  auto r = run({"theta", "1^0"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(contains(r.err, "position 0"));
  r = run({"theta", "4,,4"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(contains(r.err, "position 2"));
  CHECK(run({"witness", "x"}).code == cli::kExitUsage);
  CHECK(run({"verify", "-1"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"theta"}).code == cli::kExitUsage);
  CHECK(run({"theta", "4", "--json", "--csv"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("witness output") {
  auto r = run({"witness", "2,4,4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "classes: 2\n"));
  CHECK(contains(r.out, "[2,4,0]  K_{2,4}"));
  CHECK(contains(r.out, "[0,0,4]  K_{4}"));

  const auto j = json::parse(run({"witness", "2,4,4", "--json"}).out);
  CHECK(j["classes"] == json::parse("[[2,4,0],[0,0,4]]"));
  CHECK(j["parts"] == json::parse("[2,4,4]"));
}

TEST_CASE("verify") {
  auto r = run({"verify", "3,3,4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "formula: 2"));
  CHECK(contains(r.out, "oracle: 2 -> agree"));
  CHECK(contains(r.out, "result: all agree"));

  r = run({"verify", "1^3,2^2,3^2,5,6"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "oracle: skipped (24 vertices > limit 12)"));

  r = run({"verify", "4,4,4,4,4", "--oracle-max", "16"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "formula: 4"));
  CHECK(contains(r.out, "oracle: skipped (20 vertices > limit 16)"));

  const auto j = json::parse(run({"verify", "1,1,2,2", "--json"}).out);
  CHECK(j["agree"] == true);
  CHECK(j["oracle_skipped"] == false);
  CHECK(j["oracle"]["value"] == 2);
  CHECK(j["report"]["pass"] == true);
  CHECK(j["report"]["class_planarity"] == json::array({true, true}));

  CHECK(run({"verify", "4", "--oracle-max", "17"}).code == cli::kExitUsage);
  CHECK(run({"verify", "4", "--oracle-max", "-1"}).code == cli::kExitUsage);
}

TEST_CASE("sweep csv") {
  auto r = run({"sweep", "--k1", "0..8"});
  REQUIRE(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "k1,k2,k3,big,p0,n,branch,value");
  const std::vector<char> expected{'0', '1', '1', '1', '1', '2', '2', '2', '2'};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(rows[i + 1].back() == expected[i]);
  }
  CHECK(rows[1] == "0,0,0,,0,0,EmptyGraph,0");

  r = run({"sweep", "--k1", "0..2", "--k2", "0..2"});
  CHECK(contains(r.out, "\n2,2,0,,6,0,CaseB-I,2\n"));

  r = run({"sweep", "--k1", "1", "--big", "4,5"});
  CHECK(contains(r.out, "\n1,0,0,\"4,5\",1,2,CaseA,2\n"));
}

TEST_CASE("sweep json and big-part check") {
  const auto j = json::parse(
      run({"sweep", "--k1", "0..1", "--big", "4;4,4", "--json"}).out);
  REQUIRE(j.size() == 4);
  CHECK(j[3]["k1"] == 1);
  CHECK(j[3]["big"] == json::array({4, 4}));
  CHECK(j[3]["value"] == 2);

  const auto r = run({"sweep", "--k1", "0", "--k2", "3", "--big", "4,4;4,5",
                      "--check-remark"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.err.empty());
}

TEST_CASE("sweep rejects bad ranges") {
  CHECK(run({"sweep", "--k1", "3..1"}).code == cli::kExitUsage);
  CHECK(run({"sweep", "--k1", "a"}).code == cli::kExitUsage);
  CHECK(run({"sweep", "--big", "3,4"}).code == cli::kExitUsage);
  const auto r = run({"sweep", "--k1", "0..999", "--k2", "0..999", "--k3", "0..9"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(contains(r.err, "rows"));
  CHECK(r.out.empty());
}

TEST_CASE("helpers") {
  CHECK(cli::parse_range("3").lo == 3);
  CHECK(cli::parse_range("2..5").size() == 4);
  CHECK_THROWS_AS(cli::parse_range("5..2"), ParseError);
  CHECK_THROWS_AS(cli::parse_range(".."), ParseError);
  CHECK(cli::parse_big_list("4,4;5").size() == 2);
  CHECK(cli::parse_big_list("").size() == 1);
  CHECK_THROWS_AS(cli::parse_big_list("4;1"), ParseError);
  CHECK(cli::csv_field("4") == "4");
  CHECK(cli::csv_field("4,5") == "\"4,5\"");
  CHECK(cli::csv_field("a\"b") == "\"a\"\"b\"");
}

TEST_CASE("selftest") {
  auto r = run({"selftest", "--oracle-max", "0"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "oracle-vs-formula: SKIP"));
  CHECK(contains(r.out, "summary: 6 passed, 0 failed, 2 skipped"));

  const auto a = run({"selftest", "--oracle-max", "8", "--seed", "5"});
  const auto b = run({"selftest", "--oracle-max", "8", "--seed", "5"});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);

  CHECK(run({"selftest", "--oracle-max", "17"}).code == cli::kExitUsage);
}
