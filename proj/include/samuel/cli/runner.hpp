#pragma once

// Executes the tasks of a problem document and builds the report.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "samuel/cli/problem.hpp"

namespace samuel::cli {

enum class Status { Ok, Pass, Fail, Error };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

/// 2 input error, 3 resource limit, 1 any other failure.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::InvalidInput:
    case ErrorCode::MixedFields:
    case ErrorCode::MixedRings:
    case ErrorCode::ZeroPolynomial:
      return 2;
    case ErrorCode::ResourceLimit:
    case ErrorCode::NotLocallyFinite:
    case ErrorCode::NotFinite:
    case ErrorCode::NoPolynomialTail:
    case ErrorCode::SamplingExhausted:
      return 3;
    default:
      return 1;
  }
}

struct TaskOutcome {
  json row;
  Status status = Status::Ok;
  int exit_code = 0;
  double seconds = 0;
};

struct RunResult {
  json report;
  std::vector<TaskOutcome> tasks;
  int exit_code = 0;
};

/// Every key of an object expectation must match the result; other
/// expectations are compared with result["value"].
inline bool expectation_met(const json& expect, const json& result) {
  if (expect.is_object()) {
    for (const auto& [k, v] : expect.items()) {
      if (!result.contains(k) || result.at(k) != v) return false;
    }
    return true;
  }
  return result.contains("value") && result.at("value") == expect;
}

namespace detail {

inline json samples_json(const std::map<unsigned, long long>& s) {
  json out = json::array();
  for (const auto& [n, v] : s) out.push_back(v);
  return out;
}

inline json hilbert_json(const HilbertReport& r) {
  json out;
  out["value"] = r.coeffs;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) out["e" + std::to_string(i)] = r.coeffs[i];
  out["samples"] = samples_json(r.samples);
  out["first_sample"] = r.samples.empty() ? 0u : r.samples.begin()->first;
  out["window"] = {r.window_lo, r.window_hi};
  out["polynomial_from"] = r.polynomial_from;
  json levels = json::array();
  for (const auto& [n, l] : r.levels) levels.push_back(l);
  out["stabilization_levels"] = levels;
  return out;
}

template <CoefficientField F>
json strings(const std::vector<Polynomial<F>>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

template <CoefficientField F>
class TaskRunner {
 public:
  TaskRunner(Context<F>& ctx, const json& task, std::vector<std::string>& warnings)
      : ctx_(ctx), task_(task), warnings_(warnings) {}

  json run(const std::string& command) {
    static const std::map<std::string, json (TaskRunner::*)()> table = {
        {"gb", &TaskRunner::gb},
        {"colength", &TaskRunner::colength},
        {"hilb", &TaskRunner::hilb},
        {"coeffs", &TaskRunner::coeffs},
        {"kernel-e1", &TaskRunner::kernel_e1},
        {"ann-length", &TaskRunner::ann_length},
        {"slice-e1", &TaskRunner::slice_e1},
        {"dseq", &TaskRunner::dseq},
        {"superficial", &TaskRunner::superficial},
        {"unmixed", &TaskRunner::unmixed},
        {"reduction", &TaskRunner::reduction},
        {"sample-reductions", &TaskRunner::sample},
        {"lambda", &TaskRunner::lambda},
        {"sally", &TaskRunner::sally},
        {"sally-rank", &TaskRunner::sally_rank_},
        {"kplusj", &TaskRunner::kplusj},
    };
    const auto it = table.find(command);
    if (it == table.end()) input_error("unknown command '" + command + "'");
    return (this->*(it->second))();
  }

 private:
  unsigned uint_or(const char* key, unsigned fallback) const {
    return task_.contains(key) ? task_.at(key).get<unsigned>() : fallback;
  }

  std::uint64_t seed() const { return task_.contains("seed") ? task_.at("seed").get<std::uint64_t>() : ctx_.options().seed; }

  std::string quotient_name() const {
    if (task_.contains("quotient")) return task_.at("quotient").get<std::string>();
    if (task_.contains("parameter") && task_.at("parameter").is_string()) {
      return ctx_.parameter_quotient(task_.at("parameter").get<std::string>());
    }
    input_error("task needs a quotient");
  }

  const QuotientRing<F>& quotient() { return ctx_.quotient(quotient_name()); }

  ParameterIdeal<F> parameter(const char* key = "parameter") {
    if (!task_.contains(key)) input_error(std::string("task needs '") + key + "'");
    const json& p = task_.at(key);
    if (p.is_string()) return ctx_.parameter(p.get<std::string>());
    return ParameterIdeal<F>::make(quotient(), ctx_.polys(p), "inline", ctx_.local());
  }

  Ideal<F> ideal(const char* key = "ideal") {
    if (!task_.contains(key)) input_error(std::string("task needs '") + key + "'");
    return ctx_.ideal(task_.at(key));
  }

  Polynomial<F> element(const char* key = "element") {
    if (!task_.contains(key)) input_error(std::string("task needs '") + key + "'");
    return ctx_.poly(task_.at(key));
  }

  unsigned nmax(unsigned d) const {
    const unsigned fallback = ctx_.options().nmax ? ctx_.options().nmax : default_n_max(d);
    return uint_or("nmax", fallback);
  }

  std::pair<unsigned, unsigned> window(unsigned lo, unsigned hi) const {
    if (!task_.contains("window")) return {lo, hi};
    const auto w = task_.at("window").get<std::vector<unsigned>>();
    if (w.size() != 2 || w[0] > w[1]) input_error("window must be [lo, hi] with lo <= hi");
    return {w[0], w[1]};
  }

  /// The ideal a task measures: a named parameter ideal or a plain ideal.
  Ideal<F> measured(const QuotientRing<F>& a) {
    if (task_.contains("parameter")) return parameter().ideal(a.ring);
    return ideal();
  }

  json gb() {
    const Ideal<F> i = ideal();
    const auto ord = ctx_.order(task_);
    const auto& g = i.groebner(ord);
    json out;
    out["value"] = g.size();
    out["order"] = ord.to_string();
    out["basis"] = strings(g.elements());
    json stairs = json::array();
    Polynomial<F> helper(ctx_.ring());
    for (const auto& m : g.staircase()) {
      const auto s = helper.monomial_string(m);
      stairs.push_back(s.empty() ? "1" : s);
    }
    out["leading_monomials"] = stairs;
    return out;
  }

  json colength() {
    Ideal<F> j = ideal();
    if (task_.contains("quotient")) j = quotient().with(j);
    const auto len = local_colength(j, ctx_.local());
    json out;
    out["value"] = len.length;
    out["stable_at"] = len.stable_at;
    return out;
  }

  json hilb() {
    const auto& a = quotient();
    std::map<unsigned, unsigned> levels;
    const auto s = hilbert_samuel(a, measured(a), nmax(a.dim), ctx_.sample(), &levels, uint_or("nmin", 0));
    json out;
    out["value"] = samples_json(s);
    json lv = json::array();
    for (const auto& [n, l] : levels) lv.push_back(l);
    out["stabilization_levels"] = lv;
    return out;
  }

  json coeffs() {
    const auto& a = quotient();
    const unsigned n = nmax(a.dim);
    if (n < a.dim + 1) input_error("nmax must be at least d + 1");
    return hilbert_json(hilbert_report(a, measured(a), n, ctx_.sample()));
  }

  json kernel_e1() {
    if (!task_.contains("artinian")) input_error("kernel-e1 needs 'artinian'");
    const auto& c = ctx_.artinian(task_.at("artinian").get<std::string>());
    std::vector<Polynomial<F>> ab;
    if (task_.contains("parameter")) ab = parameter().lifts;
    else ab = ctx_.polys(task_.at("elements"));
    if (ab.size() != 2) input_error("kernel-e1 needs exactly two elements a, b");
    const auto act = ActionPair<F>::make(c, ab[0], ab[1]);
    json out;
    long long e0 = 0;
    std::optional<HilbertReport> fit;
    const auto [lo, hi] = window(0, 7);
    if (task_.contains("quotient") || task_.contains("parameter")) {
      const auto& a = quotient();
      fit = hilbert_report(a, Ideal<F>(a.ring, ab), std::max(hi, nmax(a.dim)), ctx_.sample());
    }
    if (task_.contains("e0")) {
      e0 = task_.at("e0").get<long long>();
      out["e0_source"] = "given";
    } else if (fit) {
      e0 = fit->e(0);
      out["e0_source"] = "hilbert-fit";
    } else {
      input_error("kernel-e1 needs 'e0' or a quotient to fit it from");
    }
    const auto r = e1_e2_via_kernel(c, act, e0, lo, hi, ctx_.options().threads);
    out["value"] = {r.e1, r.e2};
    out["coeffs"] = {e0, r.e1, r.e2};
    json tn;
    for (const auto& [n, t] : r.tn) tn[std::to_string(n)] = t;
    out["tn"] = tn;
    out["bounds"] = {r.lower, r.upper};
    out["artinian_length"] = c.dim();
    if (fit) {
      bool holds = fit->coeffs.front() == e0;
      for (const auto& [n, t] : r.tn) {
        const auto it = fit->samples.find(n);
        if (it == fit->samples.end()) continue;
        holds = holds && it->second == e0 * binomial(n + 2, 2).get_si() + static_cast<long long>(t);
      }
      out["fit_coeffs"] = fit->coeffs;
      out["identity_holds"] = holds;
    }
    return out;
  }

  json ann_length() {
    if (!task_.contains("artinian")) input_error("ann-length needs 'artinian'");
    const auto& c = ctx_.artinian(task_.at("artinian").get<std::string>());
    json out;
    out["value"] = annihilator_length(c, element());
    out["artinian_length"] = c.dim();
    return out;
  }

  json slice_e1() {
    const auto r = e1_via_slice(quotient(), element(), ctx_.local());
    warnings_.push_back("slice value equals e1 only if the element is a superficial nonzerodivisor");
    json out;
    out["value"] = r.e1;
    out["h0_length"] = r.h0_length;
    out["conditional"] = r.conditional;
    return out;
  }

  json dseq() {
    const auto& a = quotient();
    const std::vector<Polynomial<F>> elems = task_.contains("elements") ? ctx_.polys(task_.at("elements")) : parameter().lifts;
    const bool any = task_.contains("any_order") && task_.at("any_order").get<bool>();
    const auto r = any ? is_d_sequence_any_order(a, elems) : is_d_sequence(a, elems);
    json out;
    out["value"] = r.holds;
    out["witness"] = r.witness ? json{r.witness->first, r.witness->second} : json(nullptr);
    return out;
  }

  json superficial() {
    const auto& a = quotient();
    const auto q = parameter();
    const auto [lo, hi] = window(2, 6);
    const auto r = is_superficial(a, q, element(), lo, hi, ctx_.local());
    if (r.heuristic) warnings_.push_back("superficiality only checked for n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    json out;
    out["value"] = r.superficial;
    out["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
    out["heuristic"] = r.heuristic;
    return out;
  }

  json unmixed() {
    const auto& a = quotient();
    const auto x = element();
    const auto b = element("b");
    const auto u = unmixed_component(a, x, b);
    warnings_.push_back("quotient length uses the stabilization heuristic for D_J(N) - D_sat(N)");
    json out;
    out["value"] = sat_quotient_length(a.defining + std::vector{x}, u, ctx_.local());
    out["generators"] = u.to_strings();
    return out;
  }

  json reduction() {
    const auto& a = quotient();
    const auto cert = is_reduction(a, parameter(), ideal(), uint_or("n_cap", 8), ctx_.local());
    json out;
    out["value"] = cert.has_value();
    out["certificate"] = cert ? json(*cert) : json(nullptr);
    return out;
  }

  json sample() {
    const auto& a = quotient();
    const auto r = sample_reductions(a, ideal(), uint_or("count", 5), seed(), uint_or("n_cap", 8), ctx_.sample());
    warnings_.insert(warnings_.end(), r.warnings.begin(), r.warnings.end());
    json out;
    out["value"] = r.reductions.size();
    out["attempts"] = r.attempts;
    json list = json::array();
    for (std::size_t k = 0; k < r.reductions.size(); ++k) {
      list.push_back({{"lifts", strings(r.reductions[k].lifts)}, {"certificate", r.certificates[k]}});
    }
    out["reductions"] = list;
    if (task_.contains("report") && task_.at("report").get<bool>()) {
      json rows = json::array();
      json e1 = json::array();
      json dseqs = json::array();
      for (const auto& q : r.reductions) {
        const auto h = hilbert_report(a, q, nmax(a.dim), ctx_.sample());
        rows.push_back(h.coeffs);
        e1.push_back(h.e(1));
        if (a.dim == 2) dseqs.push_back(is_d_sequence(a, q.lifts).holds);
      }
      out["coeffs"] = rows;
      out["e1"] = e1;
      if (a.dim == 2) out["d_sequence"] = dseqs;
    }
    return out;
  }

  json lambda() {
    const auto& a = quotient();
    std::vector<ParameterIdeal<F>> named;
    if (task_.contains("named")) {
      for (const auto& n : task_.at("named")) named.push_back(ctx_.parameter(n.get<std::string>()));
    }
    const auto r = lambda_map(a, ideal(), uint_or("count", 5), seed(), nmax(a.dim), named, ctx_.sample());
    warnings_.insert(warnings_.end(), r.warnings.begin(), r.warnings.end());
    warnings_.push_back("an empirical subset of the e1 values, not the full set");
    json out;
    out["value"] = json(std::vector<long long>(r.e1_values.begin(), r.e1_values.end()));
    out["distinct"] = r.e1_values.size();
    json entries = json::array();
    for (const auto& e : r.entries) {
      entries.push_back({{"label", e.q.label}, {"lifts", strings(e.q.lifts)}, {"coeffs", e.report.coeffs}});
    }
    out["entries"] = entries;
    return out;
  }

  json sally() {
    const auto& a = quotient();
    const auto lengths = sally_lengths(a, ideal(), parameter(), uint_or("nmax", 4), ctx_.sample());
    json out;
    out["value"] = samples_json(lengths);
    out["first_degree"] = 1;
    return out;
  }

  json sally_rank_() {
    const auto& a = quotient();
    const auto r = sally_rank(a, ideal(), parameter(), nmax(a.dim), ctx_.sample());
    json out;
    out["value"] = r.rank;
    out["e0_I"] = r.e0_i;
    out["e1_I"] = r.e1_i;
    out["e1_Q"] = r.e1_q;
    out["colength_I"] = r.colength_i;
    return out;
  }

  json kplusj() {
    const auto& b = quotient();
    const Ideal<F> j = ideal();
    const unsigned n = nmax(b.dim);
    if (task_.contains("parameter")) {
      auto out = hilbert_json(k_plus_J_parameter_hilbert(b, j, parameter(), n, ctx_.sample()));
      out["e1"] = out["value"][1];
      return out;
    }
    return hilbert_json(k_plus_J_hilbert(b, j, n, ctx_.sample()));
  }

  Context<F>& ctx_;
  const json& task_;
  std::vector<std::string>& warnings_;
};

template <CoefficientField F>
TaskOutcome run_one(Context<F>& ctx, const json& task, std::size_t index) {
  TaskOutcome outcome;
  json& row = outcome.row;
  const std::string command = task.value("command", "");
  row["id"] = task.value("id", "task-" + std::to_string(index + 1));
  row["command"] = command;
  std::vector<std::string> warnings;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    TaskRunner<F> runner(ctx, task, warnings);
    const json result = runner.run(command);
    row["result"] = result;
    if (task.contains("expect")) {
      row["expect"] = task.at("expect");
      outcome.status = expectation_met(task.at("expect"), result) ? Status::Pass : Status::Fail;
      if (outcome.status == Status::Fail) outcome.exit_code = 1;
    }
  } catch (const Error& e) {
    outcome.status = Status::Error;
    outcome.exit_code = exit_code_for(e.code());
    row["error"] = {{"code", error_name(e.code())}, {"message", e.what()}};
  } catch (const nlohmann::json::exception& e) {
    outcome.status = Status::Error;
    outcome.exit_code = 2;
    row["error"] = {{"code", "InvalidInput"}, {"message", e.what()}};
  }
  outcome.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  row["status"] = status_name(outcome.status);
  row["warnings"] = warnings;
  return outcome;
}

}  // namespace detail

inline int combine_exit(int a, int b) {
  auto rank = [](int c) { return c == 2 ? 3 : c == 3 ? 2 : c; };
  return rank(b) > rank(a) ? b : a;
}

/// Runs every task of `doc`. Input errors in the document itself throw.
inline RunResult run_problem(const json& doc, const RunOptions& options,
                             const std::function<void(const TaskOutcome&)>& on_task = {}) {
  if (!doc.is_object() || !doc.contains("ring")) input_error("problem document needs a 'ring'");
  FieldConfig field = FieldConfig::prime(32003);
  if (doc.at("ring").contains("field")) field = FieldConfig::parse(doc.at("ring").at("field").get<std::string>());
  if (options.field) field = *options.field;
  RunResult out;
  with_field(field, [&](auto k) {
    using F = decltype(k);
    Context<F> ctx(doc, k, options);
    json rows = json::array();
    std::size_t pass = 0, failed = 0, errors = 0;
    const json tasks = doc.value("tasks", json::array());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      auto outcome = detail::run_one(ctx, tasks[i], i);
      if (outcome.status == Status::Pass) ++pass;
      if (outcome.status == Status::Fail) ++failed;
      if (outcome.status == Status::Error) ++errors;
      out.exit_code = combine_exit(out.exit_code, outcome.exit_code);
      if (on_task) on_task(outcome);
      rows.push_back(outcome.row);
      out.tasks.push_back(std::move(outcome));
    }
    out.report["field"] = field.to_string();
    out.report["seed"] = options.seed;
    out.report["tasks"] = rows;
    out.report["summary"] = {{"tasks", tasks.size()}, {"passed", pass}, {"failed", failed}, {"errors", errors}};
  });
  return out;
}

inline std::string value_text(const json& row) {
  if (row.contains("error")) return row.at("error").at("message").get<std::string>();
  if (!row.contains("result")) return "";
  return row.at("result").at("value").dump();
}

inline void print_table(std::ostream& os, const RunResult& r) {
  std::size_t w = 2;
  for (const auto& t : r.tasks) w = std::max(w, t.row.at("id").get<std::string>().size());
  for (const auto& t : r.tasks) {
    os << std::left << std::setw(static_cast<int>(w)) << t.row.at("id").get<std::string>() << "  " << std::setw(5)
       << t.row.at("status").get<std::string>() << "  " << value_text(t.row);
    if (t.row.contains("expect") && t.status == Status::Fail) os << "  (expected " << t.row.at("expect").dump() << ")";
    os << "\n";
    for (const auto& w2 : t.row.at("warnings")) os << "    warning: " << w2.get<std::string>() << "\n";
  }
  const auto& s = r.report.at("summary");
  os << s.at("passed") << " passed, " << s.at("failed") << " failed, " << s.at("errors") << " errors, " << s.at("tasks")
     << " tasks (" << r.report.at("field").get<std::string>() << ")\n";
}

}  // namespace samuel::cli
