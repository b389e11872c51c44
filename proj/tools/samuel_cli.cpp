#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "samuel/cli/reference_suite.hpp"
#include "samuel/cli/runner.hpp"

using namespace samuel;
using namespace samuel::cli;

namespace {

struct Global {
  std::string field;
  std::string order;
  std::uint64_t seed = 1;
  unsigned nmax = 0;
  unsigned cutoff = 64;
  unsigned threads = 1;
  bool json_out = false;
  bool timings = false;
  bool verify = false;
};

/// Arguments of the single-command form; everything lands in one task.
struct Inline {
  std::string vars = "X,Y,Z,W";
  std::string defining;
  unsigned dim = 0;
  std::string lifts;
  std::string ideal;
  std::string element;
  std::string b;
  std::string elements;
  std::string artinian;
  std::optional<long long> e0;
  std::optional<unsigned> count;
  std::optional<unsigned> nmin;
  std::optional<unsigned> n_cap;
  std::vector<unsigned> window;
  std::string expect;
  bool any_order = false;
  bool report = false;
};

RunOptions run_options(const Global& g) {
  RunOptions o;
  if (!g.field.empty()) o.field = FieldConfig::parse(g.field);
  if (!g.order.empty()) o.order = g.order;
  o.seed = g.seed;
  o.nmax = g.nmax;
  o.cutoff = g.cutoff;
  o.threads = std::max(1u, g.threads);
  o.verify = g.verify;
  return o;
}

json inline_problem(const std::string& command, const Inline& in) {
  json doc;
  doc["ring"] = {{"variables", split(in.vars, ',')}};
  json task;
  task["id"] = command;
  task["command"] = command;
  if (!in.defining.empty()) {
    if (in.dim == 0) input_error("--defining needs --dim");
    doc["quotients"]["A"] = {{"defining", in.defining}, {"dim", in.dim}};
    task["quotient"] = "A";
  }
  if (!in.lifts.empty()) {
    if (in.defining.empty()) input_error("--lifts needs --defining");
    doc["parameters"]["Q"] = {{"quotient", "A"}, {"lifts", in.lifts}};
    task["parameter"] = "Q";
  }
  if (!in.artinian.empty()) {
    doc["artinian"]["C"] = in.artinian;
    task["artinian"] = "C";
  }
  if (!in.ideal.empty()) task["ideal"] = in.ideal;
  if (!in.element.empty()) task["element"] = in.element;
  if (!in.b.empty()) task["b"] = in.b;
  if (!in.elements.empty()) task["elements"] = in.elements;
  if (in.e0) task["e0"] = *in.e0;
  if (in.count) task["count"] = *in.count;
  if (in.nmin) task["nmin"] = *in.nmin;
  if (in.n_cap) task["n_cap"] = *in.n_cap;
  if (!in.window.empty()) task["window"] = in.window;
  if (in.any_order) task["any_order"] = true;
  if (in.report) task["report"] = true;
  if (!in.expect.empty()) task["expect"] = json::parse(in.expect);
  doc["tasks"] = json::array({task});
  return doc;
}

int execute(const json& doc, const Global& g) {
  const RunOptions options = run_options(g);
  auto on_task = [&](const TaskOutcome& t) {
    if (g.timings) std::cerr << t.row.at("id").get<std::string>() << " " << t.seconds << "s\n";
  };
  const RunResult r = run_problem(doc, options, on_task);
  if (g.json_out) std::cout << r.report.dump(2) << "\n";
  else print_table(std::cout, r);
  return r.exit_code;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) input_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    input_error(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients of parameter ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--field", g.field, "coefficient field: fp:P or qq (overrides the problem file)");
  app.add_option("--order", g.order, "monomial order for gb: lex, degrevlex, elim:K");
  app.add_option("--seed", g.seed, "seed for sampled parameter ideals");
  app.add_option("--nmax", g.nmax, "largest n sampled for Hilbert functions");
  app.add_option("--cutoff", g.cutoff, "largest level N tried before NotLocallyFinite");
  app.add_option("--threads", g.threads, "worker threads for sampling");
  app.add_flag("--json", g.json_out, "emit the report as JSON");
  app.add_flag("--timings", g.timings, "print per-task timings on stderr");
  app.add_flag("--verify", g.verify, "re-check stabilization on extra levels");

  std::string file;
  auto* run = app.add_subcommand("run", "run the tasks of a problem file");
  run->add_option("file", file, "problem JSON")->required();

  std::string suite_name;
  bool dump = false;
  auto* suite = app.add_subcommand("suite", "run a built-in suite");
  suite->add_option("name", suite_name, "suite name (paper)")->required();
  suite->add_flag("--dump", dump, "print the suite as a problem file instead of running it");

  Inline in;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gb", "reduced Groebner basis of --ideal"},
      {"colength", "length of R/(ideal) at the origin (plus the defining ideal if given)"},
      {"hilb", "Hilbert-Samuel function n -> l(A/I^(n+1))"},
      {"coeffs", "Hilbert coefficients (e0, ..., ed)"},
      {"kernel-e1", "e1, e2 from the kernels T_n of an Artinian presentation"},
      {"ann-length", "length of (0) :_C element"},
      {"slice-e1", "e1 as minus the length of H^0 of A/(element)"},
      {"dseq", "d-sequence check"},
      {"superficial", "superficial element check"},
      {"unmixed", "length of U(a)/(a) for a = --element, saturating by --b"},
      {"reduction", "whether Q is a reduction of --ideal"},
      {"sample-reductions", "seeded random minimal reductions of --ideal"},
      {"lambda", "observed e1 values over reductions of --ideal"},
      {"sally", "lengths of I^(n+1)/Q^n I"},
      {"sally-rank", "rank of the Sally module"},
      {"kplusj", "Hilbert coefficients of the maximal ideal of k + J"},
  };
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const auto& [name, help] : commands) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--vars", in.vars, "comma-separated variables")->capture_default_str();
    s->add_option("--defining", in.defining, "defining ideal of A; '&' intersects generator lists");
    s->add_option("--dim", in.dim, "declared dimension of A");
    s->add_option("--lifts", in.lifts, "generators of the parameter ideal Q");
    s->add_option("--ideal", in.ideal, "ideal argument");
    s->add_option("--element", in.element, "ring element argument");
    s->add_option("--b", in.b, "element saturated by (unmixed)");
    s->add_option("--elements", in.elements, "sequence of elements (dseq, kernel-e1)");
    s->add_option("--artinian", in.artinian, "ideal presenting C");
    s->add_option("--e0", in.e0, "multiplicity for kernel-e1");
    s->add_option("--count", in.count, "number of sampled reductions");
    s->add_option("--nmin", in.nmin, "first n sampled (hilb)");
    s->add_option("--n-cap", in.n_cap, "largest reduction number tried");
    s->add_option("--window", in.window, "window lo hi")->expected(2);
    s->add_option("--expect", in.expect, "expected value as JSON");
    s->add_flag("--any-order", in.any_order, "check every ordering (dseq)");
    s->add_flag("--report", in.report, "Hilbert coefficients of each sample");
    subs.emplace_back(name, s);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return execute(load_file(file), g);
    if (*suite) {
      if (suite_name != "paper") input_error("unknown suite '" + suite_name + "'");
      if (dump) {
        std::cout << reference_suite().dump(2) << "\n";
        return 0;
      }
      return execute(reference_suite(), g);
    }
    for (const auto& [name, s] : subs) {
      if (*s) return execute(inline_problem(name, in), g);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
