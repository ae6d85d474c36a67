#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "mapenum/cli.hpp"
#include "mapenum/error.hpp"
#include "mapenum/verify.hpp"

using namespace mapenum;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string weight_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("mapenum_test_" + name + ".json");
  std::ofstream(path) << body;
  return path.string();
}

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::internal;
}

}  // namespace

TEST_CASE("parse_weight_file") {
  const auto wf = parse_weight_file(R"({"order": 10, "weights": {"3": "1", "4": "2/3", "5": 2}})");
  CHECK(wf.order == 10);
  CHECK(wf.weights.at(3) == Rat(1));
  CHECK(wf.weights.at(4) == Rat(2, 3));
  CHECK(wf.weights.at(5) == Rat(2));
  CHECK(error_code([] { parse_weight_file(R"({"order": 3, "extra": 1})"); }) == Errc::parse);
  CHECK(error_code([] { parse_weight_file(R"({"weights": {"3": 0.5}})"); }) == Errc::parse);
  CHECK(error_code([] { parse_weight_file(R"({"weights": {"3": "1/0"}})"); }) == Errc::parse);
  CHECK(error_code([] { parse_weight_file(R"({"weights": {"x": "1"}})"); }) == Errc::parse);
  CHECK(error_code([] { parse_weight_file(R"({"order": -1})"); }) == Errc::parse);
  CHECK(error_code([] { parse_weight_file("{"); }) == Errc::parse);
}

TEST_CASE("count") {
  auto r = run({"count", "--edges", "2", "--genus", "0"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["labelled"] == "54");
  CHECK(j["rooted"] == "9");

  r = run({"count", "--edges", "1"});
  j = Json::parse(r.out);
  CHECK(j["labelled"] == "2");
  CHECK(j["iso_classes"].size() == 2);

  r = run({"count", "--edges", "2", "--genus", "1"});
  j = Json::parse(r.out);
  CHECK(j["labelled"] == "6");
  CHECK(j["rooted"] == "1");
  REQUIRE(j["iso_classes"].size() == 1);
  CHECK(j["iso_classes"][0]["gamma"] == "4");
  CHECK(j["iso_classes"][0]["count"] == "6");

  r = run({"count", "--edges", "2", "--profile", "4:1", "--genus", "0", "--no-classes"});
  j = Json::parse(r.out);
  CHECK(j["labelled"] == "12");
  CHECK_FALSE(j.contains("iso_classes"));

  r = run({"--format", "csv", "count", "--edges", "1"});
  CHECK(r.out.rfind("labelled,2\nrooted,2\n", 0) == 0);

  CHECK(run({"count", "--edges", "7"}).code == 2);
  CHECK(run({"count", "--edges", "6"}).code == 2);
  CHECK(run({"count"}).code == 2);
}

TEST_CASE("series") {
  const auto quartic = weight_file("quartic", R"({"order": 8, "weights": {"4": "1"}})");
  auto r = run({"series", "--weights", quartic, "--target", "e0"});
  CHECK(r.code == 0);
  CHECK(r.out == "[\"1\",\"0\",\"2\",\"0\",\"9\",\"0\",\"54\",\"0\",\"378\"]\n");

  r = run({"series", "--weights", quartic, "--target", "R", "--order", "5"});
  CHECK(r.out == "[\"0\",\"1\",\"0\",\"3\",\"0\",\"18\"]\n");

  r = run({"series", "--weights", quartic, "--target", "twopoint:1", "--order", "5"});
  CHECK(r.out == "[\"0\",\"1\",\"0\",\"2\",\"0\",\"9\"]\n");

  r = run({"series", "--weights", quartic, "--target", "W:2", "--order", "5"});
  CHECK(r.out == "[\"0\",\"1\",\"0\",\"2\",\"0\",\"9\"]\n");

  const auto cubic = weight_file("cubic", R"({"order": 6, "weights": {"3": "1"}})");
  r = run({"series", "--weights", cubic, "--target", "S"});
  CHECK(r.out == "[\"0\",\"0\",\"2\",\"0\",\"0\",\"12\",\"0\"]\n");

  const auto half = weight_file("half", R"({"order": 2, "weights": {"2": "1/2"}})");
  r = run({"--format", "csv", "series", "--weights", half, "--target", "e0"});
  CHECK(r.out == "k,coefficient\n0,1\n1,1/2\n2,1/4\n");

  const auto bad = weight_file("bad", R"({"order": 2, "weights": {"2": "x"}})");
  CHECK(run({"series", "--weights", bad}).code == 2);
  CHECK(run({"series", "--weights", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"series", "--weights", quartic, "--target", "Q"}).code == 2);
}

TEST_CASE("families, trees, twopoint") {
  auto r = run({"families", "--k-max", "3", "--eulerian", "4:1", "--eulerian", "2:2"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["tetravalent"]["closed_form"] == Json::parse(R"(["1","2","9","54"])"));
  CHECK(j["tetravalent"]["series"] == j["tetravalent"]["closed_form"]);
  CHECK(j["trivalent"]["series"] == Json::parse(R"(["1","4","32","336"])"));
  CHECK(j["eulerian"]["4:1"] == "2");
  CHECK(j["eulerian"]["2:2"] == "1");
  CHECK(run({"families", "--eulerian", "3:2"}).code == 2);

  const auto cubic = weight_file("cubic3", R"({"weights": {"3": "1"}})");
  r = run({"trees", "--class", "S", "--order", "2", "--weights", cubic, "--closure"});
  j = Json::parse(r.out);
  CHECK(j["count"] == 2);
  CHECK(j["trees"][0]["map"]["genus"] == 0);

  r = run({"trees", "--well-labeled", "2", "--order", "3"});
  j = Json::parse(r.out);
  CHECK(j["series"] == Json::parse(R"(["0","1","0","3"])"));

  r = run({"twopoint", "--ell", "2", "--order", "3"});
  j = Json::parse(r.out);
  CHECK(j["1"] == Json::parse(R"(["0","1","0","2"])"));
  CHECK(j["2"] == Json::parse(R"(["0","1","0","3"])"));
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "wick"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 2);

  CHECK(run({"verify", "--suite", "master-equation"}).code == 0);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  r = run({"verify", "--list"});
  CHECK(r.out.find("bijections\n") != std::string::npos);
}

TEST_CASE("failed checks are reported") {
  std::vector<NamedCheck> checks = {
      {"demo", "passes", [](std::string& d) { d = "ok"; return true; }},
      {"demo", "fails", [](std::string& d) { d = "wrong value"; return false; }},
      {"demo", "throws", [](std::string&) -> bool { throw Error(Errc::internal, "corrupted"); }},
  };
  const auto results = run_checks(checks);
  REQUIRE(results.size() == 3);
  CHECK(results[0].passed);
  CHECK_FALSE(results[1].passed);
  CHECK(results[1].detail == "wrong value");
  CHECK_FALSE(results[2].passed);
  CHECK(results[2].detail.find("corrupted") != std::string::npos);
  CHECK_FALSE(all_passed(results));
  CHECK_FALSE(all_passed({}));
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"--threads", "3", "count", "--edges", "3"};
  const auto a = run(args);
  const auto b = run({"--threads", "1", "count", "--edges", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
