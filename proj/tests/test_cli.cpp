#include "catch_amalgamated.hpp"
#include "samuel/cli/reference_suite.hpp"
#include "samuel/cli/runner.hpp"

using namespace samuel;
using namespace samuel::cli;

namespace {

json doc_with(json tasks, json extra = json::object()) {
  json doc = {{"ring", {{"variables", {"X", "Y", "Z", "W"}}}}};
  doc["quotients"]["A"] = {{"defining", "X^2,Y^2 & Z,W"}, {"dim", 2}};
  doc["parameters"]["Q"] = {{"quotient", "A"}, {"lifts", {"X-Z", "Y-W"}}};
  for (auto& [k, v] : extra.items()) doc[k] = v;
  doc["tasks"] = std::move(tasks);
  return doc;
}

RunResult run(const json& doc, RunOptions o = {}) { return run_problem(doc, o); }

const json& row(const RunResult& r, std::size_t i = 0) { return r.report.at("tasks").at(i); }

const json& result(const RunResult& r, std::size_t i = 0) { return row(r, i).at("result"); }

std::string message(const RunResult& r, std::size_t i = 0) { return row(r, i).at("error").at("message").get<std::string>(); }

}  // namespace

TEST_CASE("expectation semantics") {
  CHECK(expectation_met(json(4), json{{"value", 4}}));
  CHECK(!expectation_met(json(5), json{{"value", 4}}));
  CHECK(expectation_met(json{{"value", 3}}, json{{"value", 3}, {"extra", 1}}));
  CHECK(!expectation_met(json{{"missing", 3}}, json{{"value", 3}}));
  CHECK(expectation_met(json::array({1, 2}), json{{"value", {1, 2}}}));
}

TEST_CASE("a passing problem exits 0") {
  const auto r = run(doc_with(json::array({{{"id", "c"}, {"command", "coeffs"}, {"parameter", "Q"}, {"expect", {5, -2, -1}}},
                                           {{"id", "g"}, {"command", "colength"}, {"ideal", "X^2,Y^2,Z,W"}, {"expect", 4}}})));
  CHECK(r.exit_code == 0);
  CHECK(row(r, 0).at("status") == "pass");
  CHECK(r.report.at("summary").at("passed") == 2);
  CHECK(r.report.at("field") == "fp:32003");
}

TEST_CASE("exit code mapping") {
  CHECK(exit_code_for(ErrorCode::SyntaxError) == 2);
  CHECK(exit_code_for(ErrorCode::InvalidInput) == 2);
  CHECK(exit_code_for(ErrorCode::UnknownVariable) == 2);
  CHECK(exit_code_for(ErrorCode::ResourceLimit) == 3);
  CHECK(exit_code_for(ErrorCode::NotLocallyFinite) == 3);
  CHECK(combine_exit(1, 3) == 3);
  CHECK(combine_exit(3, 2) == 2);
  CHECK(combine_exit(0, 1) == 1);
}

TEST_CASE("failing expectation exits 1 and keeps going") {
  const auto r = run(doc_with(json::array({{{"id", "bad"}, {"command", "colength"}, {"ideal", "X^2,Y^3,Z,W"}, {"expect", 5}},
                                           {{"id", "ok"}, {"command", "colength"}, {"ideal", "X,Y,Z,W"}, {"expect", 1}}})));
  CHECK(r.exit_code == 1);
  CHECK(row(r, 0).at("status") == "fail");
  CHECK(result(r, 0).at("value") == 6);
  CHECK(row(r, 1).at("status") == "pass");
}

TEST_CASE("unknown names are input errors") {
  for (const auto& task : {json{{"id", "a"}, {"command", "coeffs"}, {"parameter", "nope"}},
                           json{{"id", "b"}, {"command", "colength"}, {"ideal", "no_such_ideal"}},
                           json{{"id", "c"}, {"command", "frobnicate"}},
                           json{{"id", "d"}, {"command", "kernel-e1"}, {"artinian", "missing"}, {"elements", "X,Y"}, {"e0", 1}}}) {
    const auto r = run(doc_with(json::array({task})));
    INFO(task.dump());
    CHECK(r.exit_code == 2);
    CHECK(row(r).at("status") == "error");
  }
  const auto r = run(doc_with(json::array({{{"id", "x"}, {"command", "colength"}, {"ideal", "no_such_ideal"}}})));
  CHECK(message(r).find("unknown ideal 'no_such_ideal'") != std::string::npos);
}

TEST_CASE("syntax errors exit 2, non-primary ideals exit 3") {
  auto r = run(doc_with(json::array({{{"id", "s"}, {"command", "colength"}, {"ideal", {"X^2 Y"}}}})));
  CHECK(r.exit_code == 2);
  RunOptions o;
  o.cutoff = 12;
  r = run(doc_with(json::array({{{"id", "m"}, {"command", "colength"}, {"ideal", {"X", "Y"}}}})), o);
  CHECK(r.exit_code == 3);
}

TEST_CASE("ideal expressions") {
  const json ideals = json::parse(R"({
    "m": "maximal",
    "sq": {"power": ["m", 2]},
    "both": {"sum": ["sq", ["Z"]]},
    "cut": {"intersect": [["X", "Y"], ["Z", "W"]]},
    "col": {"colon": [["X^2", "X*Y", "Z", "W"], "X"]},
    "sat": {"saturate": [["X^2*Y", "X*Y^2", "Z", "W"], "m"]},
    "prod": {"product": [["X", "Y"], ["X", "Y"]]},
    "loop": "loop2",
    "loop2": {"sum": ["loop"]}
  })");
  auto colength_of = [&](const std::string& expr) {
    json t = {{"id", expr}, {"command", "colength"}};
    t["ideal"]["sum"] = json::array({expr, json::array({"Z", "W"})});
    return t;
  };
  json tasks = json::array({colength_of("sq"), colength_of("both"), colength_of("col"), colength_of("prod")});
  tasks.push_back({{"id", "cut"}, {"command", "gb"}, {"ideal", "cut"}, {"expect", 4}});
  tasks.push_back({{"id", "sat"}, {"command", "gb"}, {"ideal", "sat"}, {"expect", 3}});
  tasks.push_back({{"id", "loop"}, {"command", "gb"}, {"ideal", "loop"}});
  const auto r = run(doc_with(tasks, {{"ideals", ideals}}));
  CHECK(result(r, 0).at("value") == 3);
  CHECK(result(r, 1).at("value") == 3);
  CHECK(result(r, 2).at("value") == 1);
  CHECK(result(r, 3).at("value") == 3);
  CHECK(row(r, 4).at("status") == "pass");
  CHECK(row(r, 5).at("status") == "pass");
  CHECK(row(r, 6).at("status") == "error");
  CHECK(message(r, 6).find("itself") != std::string::npos);
}

TEST_CASE("bad ideal expressions") {
  for (const json& bad : {json{{"power", {"maximal", -1}}}, json{{"power", {"maximal"}}}, json{{"nope", {"X"}}},
                          json{{"sum", json::array()}}, json(3)}) {
    const auto r = run(doc_with(json::array({{{"id", "b"}, {"command", "gb"}, {"ideal", bad}}})));
    INFO(bad.dump());
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("report survives a JSON round trip") {
  const auto r = run(doc_with(json::array({{{"id", "k"}, {"command", "kernel-e1"}, {"artinian", "C"}, {"parameter", "Q"}},
                                           {{"id", "h"}, {"command", "hilb"}, {"parameter", "Q"}, {"nmax", 4}}}),
                              {{"artinian", {{"C", {"X^2", "Y^2", "Z", "W"}}}}}));
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.report.dump()) == r.report);
  CHECK(result(r, 0).at("value") == json{-2, -1});
  CHECK(result(r, 0).at("identity_holds") == true);
  CHECK(result(r, 0).at("e0_source") == "hilbert-fit");
  CHECK(result(r, 1).at("value").size() == 5);
}

TEST_CASE("field override and rational runs") {
  RunOptions o;
  o.field = FieldConfig::rationals();
  const auto r = run(doc_with(json::array({{{"id", "c"}, {"command", "coeffs"}, {"parameter", "Q"}, {"expect", {5, -2, -1}}}})), o);
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("field") == "qq");
}

TEST_CASE("sampled tasks are deterministic under the seed") {
  const json tasks = json::array({{{"id", "s"}, {"command", "sample-reductions"}, {"quotient", "A"}, {"ideal", "maximal"}, {"count", 2}}});
  RunOptions a, b;
  a.seed = b.seed = 9;
  b.threads = 3;
  const auto ra = run(doc_with(tasks), a), rb = run(doc_with(tasks), b);
  CHECK(result(ra).at("reductions") == result(rb).at("reductions"));
  CHECK(!row(ra).at("warnings").empty());
}

TEST_CASE("built-in suite is well formed") {
  const json suite = reference_suite();
  std::set<std::string> ids;
  for (const auto& t : suite.at("tasks")) {
    CHECK(ids.insert(t.at("id").get<std::string>()).second);
    CHECK(t.contains("command"));
    if (t.contains("expect")) CHECK(!t.at("expect").is_null());
  }
  CHECK(ids.size() >= 50);
  CHECK(json::parse(suite.dump()) == suite);
}

TEST_CASE("table output lists every task") {
  const auto r = run(doc_with(json::array({{{"id", "first"}, {"command", "colength"}, {"ideal", "X,Y,Z,W"}},
                                           {{"id", "second"}, {"command", "colength"}, {"ideal", "nope_nope"}}})));
  std::ostringstream os;
  print_table(os, r);
  const auto text = os.str();
  CHECK(text.find("first") != std::string::npos);
  CHECK(text.find("second") != std::string::npos);
  CHECK(text.find("unknown ideal") != std::string::npos);
}
