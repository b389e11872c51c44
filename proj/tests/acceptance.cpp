// One line per acceptance criterion; exit status 1 when any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "oracle.hpp"
#include "samuel/cli/reference_suite.hpp"
#include "samuel/cli/runner.hpp"

using namespace samuel;
using namespace samuel::cli;

namespace {

using PF = Polynomial<PrimeField>;
using IF = Ideal<PrimeField>;
using QR = QuotientRing<PrimeField>;
using PI = ParameterIdeal<PrimeField>;

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

class Rows {
 public:
  explicit Rows(const json& report) {
    for (const auto& r : report.at("tasks")) rows_[r.at("id").get<std::string>()] = r;
  }

  const json* find(const std::string& id) const {
    auto it = rows_.find(id);
    return it == rows_.end() ? nullptr : &it->second;
  }

  /// Every listed row ran and met its expectation.
  void passed(Verdict& v, const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
      used_.insert(id);
      const json* r = find(id);
      if (!r) {
        v.require(false, id + ": missing");
        continue;
      }
      const auto status = r->at("status").get<std::string>();
      std::string detail = status;
      if (r->contains("error")) detail += " " + r->at("error").at("message").get<std::string>();
      else if (r->contains("result")) detail += " got " + r->at("result").at("value").dump();
      v.require(status == "pass", id + ": " + detail);
    }
  }

  std::vector<std::string> unused() const {
    std::vector<std::string> out;
    for (const auto& [id, r] : rows_) {
      if (!used_.count(id)) out.push_back(id);
    }
    return out;
  }

  void mark(const std::string& id) { used_.insert(id); }

 private:
  std::map<std::string, json> rows_;
  std::set<std::string> used_;
};

std::string s(long long v) { return std::to_string(v); }

RingPtr<PrimeField> xyzw() { return Ring<PrimeField>::make({"X", "Y", "Z", "W"}); }

IF I(const RingPtr<PrimeField>& r, std::vector<std::string> gens) { return parse_ideal(r, gens); }

/// A = R/[a ∩ (Z, W)] with its Artinian presentation C = R/(a + (Z, W)) and
/// the parameter ideals studied on it.
struct Example {
  std::string name;
  std::vector<std::string> a;
  std::vector<std::vector<std::string>> lifts;
};

std::vector<Example> examples() {
  std::vector<Example> out;
  for (long long l = 1; l <= 3; ++l) out.push_back({"biquad-l" + s(l), {"X^" + s(l), "Y^" + s(l)}, {{"X-Z", "Y-W"}}});
  for (long long l = 2; l <= 3; ++l) {
    Example e{"xypow-l" + s(l), {}, {}};
    for (long long i = 0; i <= l; ++i) e.a.push_back("X^" + s(i) + "*Y^" + s(l - i));
    for (long long n = 1; n <= l; ++n) e.lifts.push_back({"X^" + s(l) + "-Z", "Y^" + s(n) + "-W"});
    out.push_back(e);
  }
  for (long long n = 2; n <= 3; ++n) {
    Example e{"line-n" + s(n), {"X^" + s(n), "Y"}, {}};
    for (long long l = 1; l <= n; ++l) e.lifts.push_back({"X^" + s(l) + "-Z", "Y-W"});
    out.push_back(e);
  }
  for (long long n = 2; n <= 3; ++n) {
    out.push_back({"biquad-l" + s(n) + " pair", {"X^" + s(n), "Y^" + s(n)},
                   {{"X^" + s(n) + "-Z", "Y^" + s(n) + "-W"}, {"X*Y^" + s(n - 1) + "-Z", "X^" + s(n) + "+Y^" + s(n) + "-W"}}});
  }
  return out;
}

Verdict kernel_identity(bool bounds_only) {
  Verdict v;
  const auto r = xyzw();
  for (const auto& ex : examples()) {
    const auto a = QR::make(r, intersect(I(r, ex.a), I(r, {"Z", "W"})), 2);
    auto cgens = ex.a;
    cgens.push_back("Z");
    cgens.push_back("W");
    const auto c = ArtinAlgebra<PrimeField>::make(I(r, cgens));
    for (const auto& l : ex.lifts) {
      const auto q = PI::make(a, parse_polys(r, l));
      const auto act = ActionPair<PrimeField>::make(c, q.lifts[0], q.lifts[1]);
      const auto rep = hilbert_report(a, q, 8);
      const std::string tag = ex.name + " (" + l[0] + ", " + l[1] + ")";
      if (bounds_only) {
        const long long lo = -static_cast<long long>(c.dim());
        const long long hi = -static_cast<long long>(joint_annihilator_length(act));
        v.require(lo <= rep.e(1) && rep.e(1) <= hi, tag + ": e1 = " + s(rep.e(1)) + " outside [" + s(lo) + ", " + s(hi) + "]");
        continue;
      }
      for (unsigned n = 0; n <= 6; ++n) {
        const long long rhs = rep.e(0) * static_cast<long long>((n + 2) * (n + 1) / 2) + static_cast<long long>(tn_length(act, n));
        v.require(rep.samples.at(n) == rhs, tag + " n=" + s(n) + ": " + s(rep.samples.at(n)) + " != " + s(rhs));
      }
    }
  }
  return v;
}

Verdict cohen_macaulay_pairs() {
  Verdict v;
  std::mt19937_64 rng(2024);
  const auto r = Ring<PrimeField>::make({"x", "y"});
  const auto a = QR::make(r, IF::zero(r), 2);
  int accepted = 0;
  while (accepted < 10) {
    auto rnd_poly = [&](unsigned min_deg) {
      std::string out;
      for (unsigned i = 0; i <= 3; ++i) {
        for (unsigned j = 0; i + j <= 3; ++j) {
          if (i + j < min_deg || rng() % 2) continue;
          out += " + " + s(static_cast<long long>(rng() % 50) + 1) + "*x^" + s(i) + "*y^" + s(j);
        }
      }
      return out.empty() ? std::string("x") : out.substr(3);
    };
    const auto lifts = parse_polys(r, {rnd_poly(1), rnd_poly(1)});
    std::optional<PI> q;
    try {
      q = PI::make(a, lifts);
    } catch (const Error&) {
      continue;
    }
    ++accepted;
    const auto rep = hilbert_report(a, *q, 7);
    v.require(rep.e(1) == 0 && rep.e(2) == 0, lifts[0].to_string() + ", " + lifts[1].to_string() + ": e1, e2 = " + s(rep.e(1)) + ", " + s(rep.e(2)));
    v.require(rep.e(0) == static_cast<long long>(rep.samples.at(0)), lifts[0].to_string() + ": e0 != colength");
  }
  return v;
}

Verdict oracle_colengths() {
  Verdict v;
  std::mt19937_64 rng(77);
  const std::vector<std::string> names = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t nv = 2 + static_cast<std::size_t>(trial % 3 == 2 ? 2 : trial % 2);
    std::vector<std::string> vars(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(nv));
    const auto r = Ring<PrimeField>::make(vars);
    auto mono = [&](unsigned max_e) {
      std::string m;
      for (const auto& x : vars) {
        const auto e = rng() % (max_e + 1);
        if (e) m += (m.empty() ? "" : "*") + x + "^" + s(static_cast<long long>(e));
      }
      return m.empty() ? vars[rng() % nv] : m;
    };
    std::vector<std::string> gens;
    const unsigned cap = nv == 4 ? 3 : 5;
    for (const auto& x : vars) gens.push_back(x + "^" + s(static_cast<long long>(2 + rng() % (cap - 1))));
    const std::size_t extra = 1 + rng() % 3;
    for (std::size_t k = 0; k < extra; ++k) {
      if (rng() % 3 == 0) gens.push_back(mono(2));
      else gens.push_back(mono(2) + " - " + s(static_cast<long long>(1 + rng() % 7)) + "*" + mono(2));
    }
    const auto ideal = I(r, gens);
    const auto expect = oracle::local_colength(oracle::from(ideal.generators()), nv, 24);
    if (!expect) {
      v.require(false, "oracle did not settle");
      continue;
    }
    const auto got = local_colength(ideal).length;
    std::string text;
    for (const auto& g : gens) text += g + "; ";
    v.require(got == *expect, text + "library " + s(static_cast<long long>(got)) + " oracle " + s(static_cast<long long>(*expect)));
  }
  return v;
}

Verdict extraction_round_trips() {
  Verdict v;
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned d = static_cast<unsigned>(rng() % 5);
    std::vector<long long> e(d + 1);
    e[0] = 1 + static_cast<long long>(rng() % 30);
    for (unsigned i = 1; i <= d; ++i) e[i] = static_cast<long long>(rng() % 61) - 30;
    Samples smp;
    // Independent evaluation: binomials by the multiplicative formula.
    auto choose = [](long long n, long long k) {
      long long out = 1;
      for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
      return out;
    };
    for (unsigned n = 0; n <= d + 6; ++n) {
      long long h = 0;
      for (unsigned i = 0; i <= d; ++i) h += (i % 2 ? -1 : 1) * e[i] * choose(n + d - i, d - i);
      smp[n] = h;
    }
    const auto rep = extract_coeffs(smp, d);
    v.require(rep.coeffs == e, "tuple " + s(trial) + " did not round trip");
  }
  return v;
}

Verdict gb_permutations() {
  Verdict v;
  std::mt19937_64 rng(5);
  const auto r = xyzw();
  std::vector<IF> ideals;
  for (const auto& ex : examples()) {
    const IF a = intersect(I(r, ex.a), I(r, {"Z", "W"}));
    ideals.push_back(a);
    for (const auto& l : ex.lifts) {
      ideals.push_back(a + parse_polys(r, l));
      ideals.push_back((a + parse_polys(r, l)).power(2));
    }
  }
  ideals.push_back(I(r, {"X^2", "X*Y", "Y^2", "Z", "W"}));
  ideals.push_back(I(r, {"X^3", "X^2*Y", "X*Y^2", "Y^3", "Z", "W"}));
  for (const auto& ideal : ideals) {
    for (const auto& ord : {MonomialOrder::degrevlex(4), MonomialOrder::lex(4), MonomialOrder::elimination(4, 2)}) {
      auto gens = ideal.generators();
      const auto ref = buchberger(r, gens, ord).elements();
      for (int p = 0; p < 3; ++p) {
        std::shuffle(gens.begin(), gens.end(), rng);
        v.require(buchberger(r, gens, ord).elements() == ref, ideal.to_strings().front() + " under " + ord.to_string());
      }
    }
  }
  return v;
}

Verdict fields_agree(const json& fp, const json& qq) {
  Verdict v;
  const auto& a = fp.at("tasks");
  const auto& b = qq.at("tasks");
  v.require(a.size() == b.size(), "row counts differ");
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const auto id = a[i].at("id").get<std::string>();
    v.require(a[i].at("status") == b[i].at("status"), id + ": status differs");
    if (a[i].contains("result") && b[i].contains("result")) {
      v.require(a[i].at("result").at("value") == b[i].at("result").at("value"), id + ": " + a[i].at("result").at("value").dump() +
                                                                                  " vs " + b[i].at("result").at("value").dump());
    }
  }
  return v;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  RunOptions fp_opts;
  const RunResult fp = run_problem(reference_suite(), fp_opts);
  RunOptions qq_opts;
  qq_opts.field = FieldConfig::rationals();
  const RunResult qq = run_problem(reference_suite(), qq_opts);
  Rows rows(fp.report);

  std::vector<std::pair<std::string, Verdict>> out;
  auto add = [&](const std::string& title, Verdict v) { out.emplace_back(title, std::move(v)); };

  {
    Verdict v;
    std::vector<std::string> ids;
    for (int l = 1; l <= 3; ++l) {
      ids.push_back("biquad-l" + s(l) + ".diag.coeffs");
      ids.push_back("biquad-l" + s(l) + ".diag.kernel");
      if (l >= 2) ids.push_back("biquad-l" + s(l) + ".diag.dseq");
    }
    rows.passed(v, ids);
    add("1 (X^l, Y^l) ∩ (Z, W), Q = (x-z, y-w): (l^2+1, -l, -l(l-1)/2) by fit and kernel", v);
  }
  {
    Verdict v;
    std::vector<std::string> ids;
    for (int l = 2; l <= 3; ++l) {
      for (int n = 1; n <= l; ++n) ids.push_back("xypow-l" + s(l) + ".n" + s(n) + ".coeffs");
    }
    rows.passed(v, ids);
    add("2 (X,Y)^l ∩ (Z, W): e1 = -(2l-n+1)n/2, e2 = 0", v);
  }
  {
    Verdict v;
    rows.passed(v, {"xypow-l2.m.sampled"});
    add("3 sampled reductions of m on (X,Y)^2 ∩ (Z,W): (4, -2, 0) and d-sequences", v);
  }
  {
    Verdict v;
    std::vector<std::string> ids;
    for (int n = 2; n <= 3; ++n) {
      const std::string a = "line-n" + s(n);
      for (int l = 1; l <= n; ++l) ids.push_back(a + ".l" + s(l) + ".coeffs");
      ids.push_back(a + ".m.sampled");
      ids.push_back(a + ".lambda");
      ids.push_back(a + ".c.length");
    }
    rows.passed(v, ids);
    add("4 (X^n, Y) ∩ (Z, W): sampled e1 = -1, (x^l - z, y - w) gives -l", v);
  }
  {
    Verdict v;
    std::vector<std::string> ids;
    for (int n = 2; n <= 3; ++n) {
      const std::string a = "biquad-l" + s(n);
      for (const char* suffix : {".Q.coeffs", ".Qprime.coeffs", ".Q.hilb", ".Qprime.hilb", ".Qprime.superficial", ".C.ann",
                                 ".Q.reduction", ".Qprime.reduction"}) {
        ids.push_back(a + suffix);
      }
      ids.push_back(a + ".mpow" + s(n) + "-zw.lambda");
    }
    rows.passed(v, ids);
    add("5 Q vs Q': e1 = -n^2 vs -n^2+n-1, closed-form Hilbert functions, Q' not superficial", v);
  }
  {
    Verdict v;
    rows.passed(v, {"biquad-l2.m.sampled", "biquad-l3.m.sampled"});
    add("6 sampled reductions of m on (X^n, Y^n) ∩ (Z, W): e1 = -n", v);
  }
  {
    Verdict v;
    rows.passed(v, {"biquad-l2.Q.sally", "biquad-l2.Qprime.sally", "biquad-l2.mpow2-zw.hilb", "biquad-l2.Q.sally-rank",
                    "biquad-l2.Qprime.sally-rank"});
    add("7 Sally lengths (2,3,4,5) and (1,1,1,1), l(A/I^(n+1)), ranks 1 and 0", v);
  }
  {
    Verdict v;
    rows.passed(v, {"kplusj.m.coeffs", "kplusj.Q.coeffs", "kplusj.Qprime.coeffs"});
    auto value = [&](const std::string& id, const char* key) -> std::optional<long long> {
      const json* r = rows.find(id);
      if (!r || !r->contains("result") || !r->at("result").contains(key)) return std::nullopt;
      const auto& x = r->at("result").at(key);
      return x.is_number_integer() ? std::optional<long long>(x.get<long long>()) : std::nullopt;
    };
    const auto e0m = value("kplusj.m.coeffs", "e0"), e1m = value("kplusj.m.coeffs", "e1");
    const auto e1q = value("kplusj.Q.coeffs", "e1"), e1qp = value("kplusj.Qprime.coeffs", "e1");
    const auto rq = value("biquad-l2.Q.sally-rank", "value"), rqp = value("biquad-l2.Qprime.sally-rank", "value");
    if (e0m && e1m && e1q && e1qp && rq && rqp) {
      const long long target = *e1m - *e0m + 1;
      v.require(*e1q + *rq == target && *e1qp + *rqp == target && target == -5,
                "identity: " + s(*e1q + *rq) + ", " + s(*e1qp + *rqp) + ", " + s(target));
    } else {
      v.require(false, "identity inputs missing");
    }
    add("8 k + J: (8, 2, -6), e1 = -6 and -5, e1 + rank = e1_m - e0_m + 1 = -5", v);
  }
  {
    Verdict v;
    const auto parts = std::vector<std::pair<std::string, std::function<Verdict()>>>{
        {"a", [] { return kernel_identity(false); }},
        {"b", [] { return kernel_identity(true); }},
        {"c", cohen_macaulay_pairs},
        {"d", oracle_colengths},
        {"e", extraction_round_trips},
        {"f", gb_permutations},
        {"g", [&] { return fields_agree(fp.report, qq.report); }},
    };
    for (const auto& [tag, fn] : parts) {
      Verdict part;
      try {
        part = fn();
      } catch (const std::exception& e) {
        part.require(false, std::string("threw: ") + e.what());
      }
      for (const auto& n : part.notes) v.notes.push_back("(" + tag + ") " + n);
      v.ok = v.ok && part.ok;
    }
    add("9 properties: kernel identity, bounds, CM pairs, colength oracle, extraction, GB permutations, F_p = Q", v);
  }

  int failed = 0;
  for (const auto& [title, v] : out) {
    std::cout << (v.ok ? "PASS  " : "FAIL  ") << title << "\n";
    for (const auto& n : v.notes) std::cout << "        " << n << "\n";
    if (!v.ok) ++failed;
  }
  for (const auto& id : rows.unused()) {
    const json* r = rows.find(id);
    std::cout << "info  " << id << " = " << (r->contains("result") ? r->at("result").at("value").dump() : r->at("status").dump()) << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (out.size() - static_cast<std::size_t>(failed)) << "/" << out.size() << " criteria passed in " << secs << " s\n";
  return failed ? 1 : 0;
}
