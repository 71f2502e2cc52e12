#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "basekit/cli.hpp"

using basekit::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("base-size of Sym8 on the cosets of Sym4 wr Sym2") {
  const auto r = call({"base-size", "--group", "sym(8)", "--subgroup", "young-wreath(4,2)", "--format", "json",
                       "--no-timing", "--threads", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "base-size");
  CHECK(j["index"] == 35);
  CHECK(j["result"]["base_size"] == 5);
  CHECK(j["result"]["reg_count"] == 600);
}

TEST_CASE("text and json report the same numbers") {
  const std::vector<std::string> base{"reg-count", "--group", "sym(5)", "--subgroup", "stab(sym(5),5)", "--k", "4",
                                      "--no-timing"};
  auto text_args = base;
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto t = call(text_args);
  const auto j = nlohmann::json::parse(call(json_args).out);
  CHECK(t.out.find("result.reg_count: 1\n") != std::string::npos);
  CHECK(j["result"]["reg_count"] == 1);
  CHECK(t.out.find("result.total_orbits: " + j["result"]["total_orbits"].dump() + "\n") != std::string::npos);
}

TEST_CASE("json output is deterministic") {
  const std::vector<std::string> args{"random-base", "--group", "sym(4)", "--k", "6", "--trials", "5000", "--seed",
                                      "5", "--format", "json", "--no-timing"};
  CHECK(call(args).out == call(args).out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  CHECK(call(args).out == call(threaded).out);
}

TEST_CASE("partition, analyze and verify-examples") {
  const auto p = call({"partition", "--group", "cyc(4)", "--format", "json"});
  REQUIRE(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["cell_count"] <= 5);

  const auto a = call({"analyze", "--group", "sym(5)", "--subgroup", "stab(sym(5),5)", "--format", "json"});
  REQUIRE(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["result"]["order"]["value"] == 120);
  CHECK(j["result"]["index"]["value"] == 5);
  CHECK(j["result"]["core_trivial"]["value"] == true);
  CHECK(j["result"]["lower_bound"]["value"] == 3);
  CHECK(j["result"]["base_size"]["value"] == 4);
  CHECK(j["result"]["reg_at_base"]["value"] == 1);

  const auto t = call({"analyze", "--group", "sym(5)", "--subgroup", "sym(5)", "--format", "json"});
  REQUIRE(t.code == 0);
  const auto tj = nlohmann::json::parse(t.out);
  CHECK(tj["result"]["index"]["value"] == 1);
  CHECK(tj["result"]["base_size"]["value"] == 0);
  CHECK(tj["result"]["note"] == "action trivial");

  const auto v = call({"verify-examples"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("all_pass: true") != std::string::npos);
}

TEST_CASE("exit codes and error lines") {
  const auto parse = call({"base-size", "--group", "nope(3)"});
  CHECK(parse.code == 3);
  CHECK(parse.err.rfind("error: parse: ", 0) == 0);
  CHECK(std::count(parse.err.begin(), parse.err.end(), '\n') == 1);
  CHECK(call({"frobnicate"}).code == 3);
  CHECK(call({"base-size", "--group", "sym(4)", "--format", "xml"}).code == 3);
  CHECK(call({"reg-count", "--group", "sym(4)"}).code == 3);

  const auto hyp = call({"partition", "--group", "sym(5)"});
  CHECK(hyp.code == 1);
  CHECK(hyp.err.rfind("error: hypothesis: ", 0) == 0);
  CHECK(call({"base-size", "--group", "sym(4)", "--subgroup", "alt(5)"}).code == 1);

  const auto budget = call({"reg-count", "--group", "sym(8)", "--subgroup", "young-wreath(4,2)", "--k", "6",
                            "--budget", "1000"});
  CHECK(budget.code == 2);
  CHECK(budget.err.rfind("error: budget: ", 0) == 0);
  CHECK(call({"base-size", "--group", "sym(9)", "--cap", "100"}).code == 2);
}

TEST_CASE("wreath-lift and intersections") {
  const auto w = call({"wreath-lift", "--group", "sym(4)", "--top", "sym(2)", "--k", "6", "--format", "json"});
  REQUIRE(w.code == 0);
  const auto j = nlohmann::json::parse(w.out);
  CHECK(j["wreath_order"] == 1152);
  CHECK(j["lift_structured_regular"] == true);
  CHECK(j["lift_enumerated_regular"] == true);
  CHECK(j["distinct_lifts"].size() == 5);

  const auto i = call({"intersections", "--group", "sym(5)", "--subgroup", "stab(sym(5),5)", "--format", "json"});
  REQUIRE(i.code == 0);
  CHECK(nlohmann::json::parse(i.out)["minimal_k"] == 4);
}
