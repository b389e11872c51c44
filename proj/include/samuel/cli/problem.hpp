#pragma once

// Problem documents: a ring, named ideals, quotient rings, parameter
// ideals, Artinian presentations and a list of tasks.
//
// Ideal expressions are a JSON list of polynomial strings, a string, or a
// single-key object:
//   "name"                   a named ideal
//   "maximal"                the ideal of all variables
//   "X^2, Y^2 & Z, W"        comma-separated generators; '&' intersects
//   {"intersect": [e, ...]}  {"sum": [e, ...]}  {"product": [e, ...]}
//   {"power": [e, n]}        {"colon": [e, "poly"]}  {"saturate": [e, e]}

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "samuel/samuel.hpp"

namespace samuel::cli {

using json = nlohmann::ordered_json;

[[noreturn]] inline void input_error(const std::string& what) { fail(ErrorCode::InvalidInput, what); }

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t\n");
    const auto e = cur.find_last_not_of(" \t\n");
    out.push_back(b == std::string::npos ? std::string{} : cur.substr(b, e - b + 1));
  }
  return out;
}

struct RunOptions {
  std::optional<FieldConfig> field;
  std::optional<std::string> order;
  std::uint64_t seed = 1;
  unsigned nmax = 0;
  unsigned cutoff = 64;
  unsigned threads = 1;
  bool verify = false;
};

/// Names resolved against one ring and field.
template <CoefficientField F>
class Context {
 public:
  Context(const json& doc, F field, const RunOptions& options) : doc_(doc), options_(options) {
    const auto& r = doc.at("ring");
    std::vector<std::string> vars = r.at("variables").get<std::vector<std::string>>();
    ring_ = Ring<F>::make(std::move(vars), std::move(field));
    local_.n_max = options.cutoff;
    local_.verify_steps = options.verify ? 3 : 0;
    sample_.local = local_;
    sample_.threads = options.threads;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const LocalOptions& local() const { return local_; }
  const SampleOptions& sample() const { return sample_; }
  const RunOptions& options() const { return options_; }

  MonomialOrder order(const json& task) const {
    std::string text = "degrevlex";
    if (doc_.at("ring").contains("order")) text = doc_.at("ring").at("order").get<std::string>();
    if (options_.order) text = *options_.order;
    if (task.contains("order")) text = task.at("order").get<std::string>();
    return parse_order(text, ring_->nvars());
  }

  Polynomial<F> poly(const json& j) const {
    if (!j.is_string()) input_error("expected a polynomial string");
    return parse_poly(ring_, j.get<std::string>());
  }

  std::vector<Polynomial<F>> polys(const json& j) const {
    if (j.is_string()) return parse_polys(ring_, split(j.get<std::string>(), ','));
    if (!j.is_array()) input_error("expected a list of polynomials");
    std::vector<Polynomial<F>> out;
    for (const auto& e : j) out.push_back(poly(e));
    return out;
  }

  Ideal<F> ideal(const json& expr) {
    if (expr.is_array()) return Ideal<F>(ring_, polys(expr));
    if (expr.is_string()) {
      const std::string s = expr.get<std::string>();
      if (s == "maximal") return Ideal<F>::maximal(ring_);
      if (s == "zero") return Ideal<F>::zero(ring_);
      if (doc_.contains("ideals") && doc_.at("ideals").contains(s)) return named_ideal(s);
      if (looks_like_name(s)) input_error("unknown ideal '" + s + "'");
      const auto parts = split(s, '&');
      Ideal<F> acc(ring_, parse_polys(ring_, split(parts.front(), ',')));
      for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, Ideal<F>(ring_, parse_polys(ring_, split(parts[i], ','))));
      return acc;
    }
    if (!expr.is_object() || expr.size() != 1) input_error("bad ideal expression " + expr.dump());
    const auto& [op, args] = *expr.items().begin();
    auto list = [&]() {
      if (!args.is_array() || args.empty()) input_error("'" + op + "' needs a non-empty list");
      std::vector<Ideal<F>> out;
      for (const auto& a : args) out.push_back(ideal(a));
      return out;
    };
    if (op == "intersect" || op == "sum" || op == "product") {
      auto parts = list();
      Ideal<F> acc = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) {
        if (op == "intersect") acc = intersect(acc, parts[i]);
        else if (op == "sum") acc = acc + parts[i];
        else acc = acc * parts[i];
      }
      return acc;
    }
    if (op == "power") {
      if (!args.is_array() || args.size() != 2 || !args[1].is_number_integer() || args[1].template get<long long>() < 0) {
        input_error("power needs [ideal, n] with n >= 0");
      }
      return ideal(args[0]).power(args[1].template get<unsigned>());
    }
    if (op == "colon") {
      if (!args.is_array() || args.size() != 2) input_error("colon needs [ideal, polynomial]");
      return ideal(args[0]).colon(poly(args[1]));
    }
    if (op == "saturate") {
      if (!args.is_array() || args.size() != 2) input_error("saturate needs [ideal, ideal]");
      return ideal(args[0]).saturate(ideal(args[1]));
    }
    input_error("unknown ideal operation '" + op + "'");
  }

  const QuotientRing<F>& quotient(const std::string& name) {
    if (auto it = quotients_.find(name); it != quotients_.end()) return it->second;
    const json& q = lookup("quotients", name);
    auto a = QuotientRing<F>::make(ring_, ideal(q.at("defining")), q.at("dim").get<unsigned>());
    return quotients_.emplace(name, std::move(a)).first->second;
  }

  /// Quotient of a parameter ideal entry.
  std::string parameter_quotient(const std::string& name) const {
    return lookup("parameters", name).at("quotient").template get<std::string>();
  }

  const ParameterIdeal<F>& parameter(const std::string& name) {
    if (auto it = parameters_.find(name); it != parameters_.end()) return it->second;
    const json& p = lookup("parameters", name);
    const auto& a = quotient(p.at("quotient").get<std::string>());
    auto q = ParameterIdeal<F>::make(a, polys(p.at("lifts")), name, local_);
    return parameters_.emplace(name, std::move(q)).first->second;
  }

  const ArtinAlgebra<F>& artinian(const std::string& name) {
    if (auto it = artinian_.find(name); it != artinian_.end()) return it->second;
    auto c = ArtinAlgebra<F>::make(ideal(lookup("artinian", name)), local_);
    return artinian_.emplace(name, std::move(c)).first->second;
  }

 private:
  /// A bare word that is not a variable of the ring.
  bool looks_like_name(const std::string& s) const {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
    for (char c : s) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    const auto& vars = ring_->variables();
    return std::find(vars.begin(), vars.end(), s) == vars.end();
  }

  const json& lookup(const std::string& section, const std::string& name) const {
    if (!doc_.contains(section) || !doc_.at(section).contains(name)) {
      input_error("unknown " + section.substr(0, section.size() - 1) + " '" + name + "'");
    }
    return doc_.at(section).at(name);
  }

  Ideal<F> named_ideal(const std::string& name) {
    if (auto it = ideals_.find(name); it != ideals_.end()) return it->second;
    if (!resolving_.insert(name).second) input_error("ideal '" + name + "' is defined in terms of itself");
    std::optional<Ideal<F>> i;
    try {
      i = ideal(doc_.at("ideals").at(name));
    } catch (...) {
      resolving_.erase(name);
      throw;
    }
    resolving_.erase(name);
    return ideals_.emplace(name, std::move(*i)).first->second;
  }

  const json& doc_;
  RunOptions options_;
  RingPtr<F> ring_;
  LocalOptions local_;
  SampleOptions sample_;
  std::map<std::string, Ideal<F>> ideals_;
  std::set<std::string> resolving_;
  std::map<std::string, QuotientRing<F>> quotients_;
  std::map<std::string, ParameterIdeal<F>> parameters_;
  std::map<std::string, ArtinAlgebra<F>> artinian_;
};

}  // namespace samuel::cli
