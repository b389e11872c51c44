#pragma once

// The built-in reproduction suite as a problem document over k[X,Y,Z,W].

#include <string>

#include "samuel/cli/problem.hpp"

namespace samuel::cli {

namespace suite_detail {

inline std::string s(long long v) { return std::to_string(v); }

inline long long choose2(long long n) { return n * (n - 1) / 2; }

inline json task(const std::string& id, const std::string& command, json args, json expect) {
  json t;
  t["id"] = id;
  t["command"] = command;
  for (auto& [k, v] : args.items()) t[k] = v;
  t["expect"] = std::move(expect);
  return t;
}

}  // namespace suite_detail

inline json reference_suite() {
  using namespace suite_detail;
  json doc;
  doc["ring"] = {{"variables", {"X", "Y", "Z", "W"}}, {"field", "fp:32003"}, {"order", "degrevlex"}};
  json ideals, quotients, params, artinian, tasks = json::array();
  ideals["zw"] = {"Z", "W"};

  // A = R/[(X^l, Y^l) ∩ (Z, W)], Q = (x - z, y - w); C = R/(X^l, Y^l, Z, W).
  for (long long l = 1; l <= 3; ++l) {
    const std::string a = "biquad-l" + s(l);
    quotients[a] = {{"defining", {{"intersect", {json{"X^" + s(l), "Y^" + s(l)}, "zw"}}}}, {"dim", 2}};
    params[a + ".diag"] = {{"quotient", a}, {"lifts", {"X-Z", "Y-W"}}};
    artinian[a + ".C"] = {"X^" + s(l), "Y^" + s(l), "Z", "W"};
    const long long e2 = -choose2(l);
    tasks.push_back(task(a + ".diag.coeffs", "coeffs", {{"parameter", a + ".diag"}}, json{l * l + 1, -l, e2}));
    tasks.push_back(task(a + ".diag.kernel", "kernel-e1",
                         {{"artinian", a + ".C"}, {"parameter", a + ".diag"}, {"e0", l * l + 1}},
                         {{"value", {-l, e2}}, {"identity_holds", true}}));
    if (l >= 2) {
      tasks.push_back(task(a + ".diag.dseq", "dseq", {{"parameter", a + ".diag"}, {"any_order", true}}, false));
    }
  }

  // A = R/[(X, Y)^l ∩ (Z, W)], Q = (x^l - z, y^n - w).
  for (long long l = 2; l <= 3; ++l) {
    const std::string a = "xypow-l" + s(l);
    quotients[a] = {{"defining", {{"intersect", {{{"power", {json{"X", "Y"}, l}}}, "zw"}}}}, {"dim", 2}};
    for (long long n = 1; n <= l; ++n) {
      const std::string q = a + ".n" + s(n);
      params[q] = {{"quotient", a}, {"lifts", {"X^" + s(l) + "-Z", "Y^" + s(n) + "-W"}}};
      tasks.push_back(task(q + ".coeffs", "coeffs", {{"parameter", q}}, {{"e1", -(2 * l - n + 1) * n / 2}, {"e2", 0}}));
    }
  }
  tasks.push_back(task("xypow-l2.m.sampled", "sample-reductions",
                       {{"quotient", "xypow-l2"}, {"ideal", "maximal"}, {"count", 5}, {"report", true}},
                       {{"value", 5},
                        {"coeffs", json::array({{4, -2, 0}, {4, -2, 0}, {4, -2, 0}, {4, -2, 0}, {4, -2, 0}})},
                        {"d_sequence", {true, true, true, true, true}}}));

  // A = R/[(X^n, Y) ∩ (Z, W)]: sampled reductions of m and Q = (x^l - z, y - w).
  for (long long n = 2; n <= 3; ++n) {
    const std::string a = "line-n" + s(n);
    quotients[a] = {{"defining", {{"intersect", {json{"X^" + s(n), "Y"}, "zw"}}}}, {"dim", 2}};
    json named = json::array();
    json values = json::array();
    for (long long l = n; l >= 1; --l) values.push_back(-l);
    for (long long l = 1; l <= n; ++l) {
      const std::string q = a + ".l" + s(l);
      params[q] = {{"quotient", a}, {"lifts", {"X^" + s(l) + "-Z", "Y-W"}}};
      named.push_back(q);
      tasks.push_back(task(q + ".coeffs", "coeffs", {{"parameter", q}}, {{"e1", -l}}));
    }
    tasks.push_back(task(a + ".m.sampled", "sample-reductions",
                         {{"quotient", a}, {"ideal", "maximal"}, {"count", 5}, {"report", true}},
                         {{"value", 5}, {"e1", {-1, -1, -1, -1, -1}}}));
    tasks.push_back(task(a + ".lambda", "lambda", {{"quotient", a}, {"ideal", "maximal"}, {"count", 3}, {"named", named}},
                         {{"value", values}}));
    tasks.push_back(task(a + ".c.length", "colength", {{"quotient", a}, {"ideal", json{"X^" + s(n), "Y", "Z", "W"}}}, n));
  }

  // The counterexample pair Q = (x^n - z, y^n - w), Q' = (x y^(n-1) - z, x^n + y^n - w)
  // on A = R/[(X^n, Y^n) ∩ (Z, W)].
  for (long long n = 2; n <= 3; ++n) {
    const std::string a = "biquad-l" + s(n);
    const std::string q = a + ".Q", qp = a + ".Qprime";
    const std::string i = "mpow" + s(n) + "-zw";
    // m^n + (z, w) by its minimal generators; sampled lifts stay sparse.
    json gens = json::array();
    for (long long e = n; e >= 0; --e) {
      std::string g;
      if (e > 0) g += e == 1 ? "X" : "X^" + s(e);
      if (n - e > 0) g += (g.empty() ? "" : "*") + std::string(n - e == 1 ? "Y" : "Y^" + s(n - e));
      gens.push_back(g);
    }
    gens.push_back("Z");
    gens.push_back("W");
    ideals[i] = gens;
    params[q] = {{"quotient", a}, {"lifts", {"X^" + s(n) + "-Z", "Y^" + s(n) + "-W"}}};
    params[qp] = {{"quotient", a}, {"lifts", {"X*Y^" + s(n - 1) + "-Z", "X^" + s(n) + "+Y^" + s(n) + "-W"}}};
    const long long e0 = 2 * n * n;
    json hq = json::array(), hqp = json::array();
    for (long long k = 0; k <= 5; ++k) {
      hq.push_back(e0 * (k + 2) * (k + 1) / 2 + n * n * (k + 1));
      hqp.push_back(e0 * (k + 2) * (k + 1) / 2 + (n * n - n + 1) * (k + 1));
    }
    tasks.push_back(task(q + ".coeffs", "coeffs", {{"parameter", q}}, json{e0, -n * n, 0}));
    tasks.push_back(task(qp + ".coeffs", "coeffs", {{"parameter", qp}}, {{"e0", e0}, {"e1", -n * n + n - 1}}));
    tasks.push_back(task(q + ".hilb", "hilb", {{"parameter", q}, {"nmax", 5}}, hq));
    tasks.push_back(task(qp + ".hilb", "hilb", {{"parameter", qp}, {"nmax", 5}}, hqp));
    tasks.push_back(task(qp + ".superficial", "superficial",
                         {{"parameter", qp}, {"element", "X^" + s(n) + "+Y^" + s(n) + "-W"}}, false));
    tasks.push_back(task(a + ".C.ann", "ann-length", {{"artinian", a + ".C"}, {"element", "X*Y^" + s(n - 1) + "-Z"}},
                         n * n - n + 1));
    tasks.push_back(task(q + ".reduction", "reduction", {{"parameter", q}, {"ideal", i}}, true));
    tasks.push_back(task(qp + ".reduction", "reduction", {{"parameter", qp}, {"ideal", i}}, true));
    tasks.push_back(task(a + "." + i + ".lambda", "lambda",
                         {{"quotient", a}, {"ideal", i}, {"count", 3}, {"named", json::array({q})}},
                         {{"value", {-n * n, -n * n + n - 1}}, {"distinct", 2}}));
    tasks.push_back(task(a + ".m.sampled", "sample-reductions",
                         {{"quotient", a}, {"ideal", "maximal"}, {"count", 5}, {"report", true}},
                         {{"value", 5}, {"e1", {-n, -n, -n, -n, -n}}}));
    tasks.push_back(task(q + ".sally-rank", "sally-rank", {{"parameter", q}, {"ideal", i}}, n == 2 ? json(1) : json(nullptr)));
    tasks.push_back(task(qp + ".sally-rank", "sally-rank", {{"parameter", qp}, {"ideal", i}}, n == 2 ? json(0) : json(nullptr)));
    if (n == 2) {
      tasks.push_back(task(q + ".sally", "sally", {{"parameter", q}, {"ideal", i}, {"nmax", 4}}, json{2, 3, 4, 5}));
      tasks.push_back(task(qp + ".sally", "sally", {{"parameter", qp}, {"ideal", i}, {"nmax", 4}}, json{1, 1, 1, 1}));
      json hi = json::array();
      for (long long k = 1; k <= 5; ++k) hi.push_back(8 * (k + 2) * (k + 1) / 2 - 2 * (k + 1) - 4);
      tasks.push_back(task(a + "." + i + ".hilb", "hilb", {{"quotient", a}, {"ideal", i}, {"nmin", 1}, {"nmax", 5}}, hi));
      tasks.push_back(task("kplusj.m.coeffs", "kplusj", {{"quotient", a}, {"ideal", i}}, json{8, 2, -6}));
      tasks.push_back(task("kplusj.Q.coeffs", "kplusj", {{"quotient", a}, {"ideal", i}, {"parameter", q}}, {{"e1", -6}}));
      tasks.push_back(task("kplusj.Qprime.coeffs", "kplusj", {{"quotient", a}, {"ideal", i}, {"parameter", qp}}, {{"e1", -5}}));
    }
  }
  // Rows without a stated value still run; drop their null expectations.
  for (auto& t : tasks) {
    if (t.at("expect").is_null()) t.erase("expect");
  }
  doc["ideals"] = ideals;
  doc["quotients"] = quotients;
  doc["parameters"] = params;
  doc["artinian"] = artinian;
  doc["tasks"] = tasks;
  return doc;
}

}  // namespace samuel::cli
