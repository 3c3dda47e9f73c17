// Acceptance checks 1-8. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "codes.hpp"
#include "families.hpp"
#include "gqcode.hpp"
#include "oracles.hpp"
#include "pg.hpp"
#include "solve.hpp"

using namespace idcode;
namespace fam = idcode::families;

namespace {

// Collects failed checks of one criterion.
struct Checker {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    expect(got == want, os.str());
  }
};

std::string str(std::size_t v) { return std::to_string(v); }

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no runtime requirement
  std::function<void(Checker&)> run;
};

// ---- 1 ----
void t2star_q4(Checker& c) {
  const auto m = gqcode::build_model(gqcode::Family::T2star, 4);
  const auto con = gqcode::construct(gqcode::Family::T2star, m);
  c.equal(m.graph.n(), 64u, "vertex count");
  c.equal(con.code.count(), 9u, "pruned code size");
  c.expect(is_identifying(m.graph, con.code), "code is identifying");
  // Independent verification of the code with the brute-force definition.
  {
    const auto a = oracle::adjacency(m.graph);
    std::set<std::vector<std::size_t>> traces;
    bool dominated = true;
    for (std::size_t u = 0; u < a.size(); ++u) {
      std::vector<std::size_t> t;
      for (std::size_t v : oracle::closed(a, u))
        if (con.code.test(v)) t.push_back(v);
      dominated = dominated && !t.empty();
      traces.insert(t);
    }
    c.expect(dominated && traces.size() == a.size(), "oracle confirms the code is identifying");
  }
  const auto rep = bounds::report(m.graph);
  c.equal(rep.best_lower(), 9, "bounds lower bound");
  c.expect(rep.consistent(), "bounds consistent");
  c.expect(static_cast<long>(con.code.count()) == rep.best_lower(), "size meets lower bound (optimal)");
}

// ---- 2 ----
void table_rows(Checker& c) {
  using gqcode::Family;
  struct Row {
    Family f;
    std::uint32_t q;
    long pre, bound;
  };
  for (auto r : {Row{Family::Parabolic, 2, 13, 8}, Row{Family::Parabolic, 3, 18, 13}, Row{Family::Elliptic, 2, 15, 10},
                 Row{Family::Hermitian, 2, 23, 18}}) {
    const std::string tag = std::string(gqcode::family_name(r.f)) + " q=" + std::to_string(r.q);
    const auto m = gqcode::build_model(r.f, r.q);
    const auto con = gqcode::construct(r.f, m);
    c.equal(static_cast<long>(con.pre_prune.count()), r.pre, tag + " pre-prune size");
    c.expect(is_identifying(m.graph, con.pre_prune), tag + " pre-prune identifying");
    c.expect(static_cast<long>(con.code.count()) <= r.bound, tag + " pruned size <= " + std::to_string(r.bound));
    c.expect(is_identifying(m.graph, con.code), tag + " pruned identifying");
    // The removal step reproduces the table size exactly.
    c.equal(static_cast<long>(con.removal.count()), r.bound, tag + " removal-step size");
    c.expect(is_identifying(m.graph, con.removal), tag + " removal-step identifying");
  }
}

// ---- 3 ----
void discharging_values(Checker& c) {
  auto at = [](long q) { return bounds::lb_discharging(q * q * q, (q - 1) * (q + 2)).value_or(-1); };
  c.equal(at(8), 19L, "q=8");
  c.equal(at(16), 42L, "q=16");
  c.equal(at(32), 90L, "q=32");
  c.equal(at(64), 185L, "q=64 equals 3q-7");
  // 3q-7 follows for every q in (32, 64]: the quadratic is negative at 3q-8.
  for (long q = 33; q <= 64; ++q) {
    const long long x = 3 * q - 8, k = (q - 1) * (q + 2);
    c.expect(x * x + (2 * k + 5) * x - 6LL * q * q * q < 0, "3q-7 follows at q=" + std::to_string(q));
    c.expect(at(q) >= 3 * q - 7, "discharging >= 3q-7 at q=" + std::to_string(q));
  }
  c.equal(bounds::t2star_lower_bound(64), 185L, "family bound q=64");
}

// ---- 4 ----
void frac_equal(Checker& c) {
  struct Case {
    Graph g;
    Rational formula;
    std::string name;
  };
  std::vector<Case> cases;
  for (long n = 5; n <= 12; ++n) {
    cases.push_back({fam::cycle_power(n, 1), Rational(n, 2), "C" + std::to_string(n)});
    if (n >= 6) cases.push_back({fam::cycle_power(n, 2), Rational(n, 2), "C" + std::to_string(n) + "^2"});
  }
  cases.push_back({fam::hypercube_power(3, 1), Rational(8, 3 + 1), "hypercube(3,1)"});
  cases.push_back({fam::clique_cartesian(3, 3), Rational(9, 2 * 3 - 2), "K3xK3"});
  cases.push_back({fam::petersen(), Rational(5, 2), "Petersen"});
  cases.push_back({fam::paley(13), Rational(13, 6), "Paley(13)"});
  for (const auto& k : cases) {
    const auto closed = frac_closed_form(k.g);
    const auto lp = frac_lp(build_hitting_instance(k.g));
    c.equal(lp.to_string(), closed.to_string(), k.name + " LP vs closed form");
    c.equal(closed.to_string(), k.formula.to_string(), k.name + " closed form vs formula");
  }
}

// ---- 5, 6 ----
struct Solved {
  std::string name;
  Graph g;
};

std::vector<Solved> solved_instances() {
  std::vector<Solved> out;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 5 + rng() % 8;
    out.push_back({"random#" + std::to_string(i), oracle::random_twin_free(n, 0.3 + 0.02 * (i % 10), rng)});
  }
  out.push_back({"C7", fam::cycle_power(7, 1)});
  out.push_back({"C9", fam::cycle_power(9, 1)});
  out.push_back({"K3xK3", fam::clique_cartesian(3, 3)});
  return out;
}

void solver_oracle(Checker& c) {
  for (const auto& s : solved_instances()) {
    const auto a = oracle::adjacency(s.g);
    const auto expect = oracle::min_subset(s.g.n(), [&](auto m) { return oracle::identifying(a, m); });
    const auto got = exact_min(s.g, Property::Identifying);
    c.equal(got.optimum, static_cast<long>(*expect), s.name + " optimum");
    c.expect(oracle::identifying(a, oracle::mask_of(got.witness)), s.name + " witness");
    if (s.name == "K3xK3") c.equal(got.optimum, 4L, "K3xK3 value");
  }
}

void inequality_chains(Checker& c) {
  auto instances = solved_instances();
  instances.push_back({"Petersen", fam::petersen()});
  instances.push_back({"Paley(13)", fam::paley(13)});
  instances.push_back({"Q(4,2)", fam::gq_parabolic(2).graph});
  instances.push_back({"Q-(5,2)", fam::gq_elliptic(2).graph});
  for (const auto& s : instances) {
    const Graph& g = s.g;
    const long n = static_cast<long>(g.n());
    const long id = exact_min(g, Property::Identifying).optimum;
    const long ld = exact_min(g, Property::LocatingDominating).optimum;
    const long sep = exact_min(g, Property::Separating).optimum;
    const auto frac = frac_lp(build_hitting_instance(g));
    const std::string t = s.name + ": ";

    c.expect(bounds::lb_log(g.n()) <= id && id <= n - 1, t + "log2(n+1) <= ID <= n-1");
    c.expect(frac.value() <= id, t + "frac <= ID");
    c.expect(id <= frac.to_double() * (1 + 2 * std::log(static_cast<double>(n))), t + "ID <= frac(1 + 2 ln n)");
    c.expect(ld <= id && id <= 2 * ld, t + "LD <= ID <= 2 LD");
    c.expect(sep == id || sep == id - 1, t + "separating in {ID-1, ID}");
    const auto rep = bounds::report(g);
    c.expect(rep.best_lower() <= id && id <= rep.best_upper(), t + "reported bounds bracket ID");
    if (is_connected(g) && diameter(g) == 2) {
      const long beta = exact_min(g, Property::Resolving).optimum;
      c.expect(beta <= id && id <= 2 * beta + 2, t + "beta <= ID <= 2 beta + 2");
      c.expect(beta <= ld && ld <= beta + 1, t + "beta <= LD <= beta + 1");
    }
  }
}

// ---- 7 ----
struct GqSpec {
  gqcode::Family f;
  std::uint32_t q;
  long s, t;
};

std::vector<GqSpec> all_supported_gq() {
  using gqcode::Family;
  std::vector<GqSpec> out;
  for (std::uint32_t q : {4u, 8u, 16u}) out.push_back({Family::T2star, q, q - 1L, q + 1L});
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) out.push_back({Family::Parabolic, q, q, q});
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) out.push_back({Family::Elliptic, q, q, static_cast<long>(q) * q});
  for (std::uint32_t q : {2u, 3u, 4u}) out.push_back({Family::Hermitian, q, static_cast<long>(q) * q, q});
  return out;
}

void geometry(Checker& c) {
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
      std::uint64_t expect = 0, power = 1;
      for (std::uint32_t i = 0; i <= n; ++i, power *= q) expect += power;
      c.equal(pg::enumerate_points(n, gf::field_of_order(q)).size(), expect,
              "|PG(" + str(n) + "," + str(q) + ")|");
    }
  for (const auto& s : all_supported_gq()) {
    const std::string tag = std::string(gqcode::family_name(s.f)) + " q=" + str(s.q);
    const auto m = gqcode::build_model(s.f, s.q);
    const long n = (s.s * s.t + 1) * (s.s + 1);
    c.equal(static_cast<long>(m.graph.n()), n, tag + " point count");
    c.expect(m.graph.meta().claimed_gq == GqParams{s.s, s.t}, tag + " claimed GQ parameters");
    if (m.graph.n() <= 1200) {
      const auto p = check_srg(m.graph);
      c.expect(p == SrgParams{n, s.s * (s.t + 1), s.s - 1, s.t + 1}, tag + " srg parameters");
      if (p) c.expect((p->n - p->k - 1) * p->mu == p->k * (p->k - p->lambda - 1), tag + " (n-k-1)mu = k(k-lambda-1)");
    }
  }
  using gqcode::Family;
  for (auto s : {GqSpec{Family::T2star, 4, 3, 5}, GqSpec{Family::Parabolic, 2, 2, 2}, GqSpec{Family::Elliptic, 2, 2, 4},
                 GqSpec{Family::Hermitian, 2, 4, 2}}) {
    const auto m = gqcode::build_model(s.f, s.q);
    const std::string tag = gqcode::family_name(s.f);
    c.expect(fam::check_gq_axioms(m.graph, s.s, s.t).ok(), tag + " quadrangle axioms");
    if (s.f != Family::T2star) {
      const auto rep = gqcode::check_coplanarity_lemmas(m, s.f);
      c.expect(rep.ok() && rep.pairs_checked > 0,
               tag + " coplanarity rank " + str(rep.max_rank) + " <= " + str(rep.allowed_rank));
    }
  }
}

// ---- 8 ----
void srg_and_bracket(Checker& c) {
  std::vector<std::pair<std::string, Graph>> srgs = {
      {"Petersen", fam::petersen()},         {"Paley(5)", fam::paley(5)},
      {"Paley(9)", fam::paley(9)},           {"Paley(13)", fam::paley(13)},
      {"Paley(25)", fam::paley(25)},         {"Paley(29)", fam::paley(29)},
      {"Kneser(6,2)", fam::kneser2(6)},      {"Kneser(8,2)", fam::kneser2(8)},
      {"Johnson(5,2)", fam::johnson2(5)},    {"Johnson(8,2)", fam::johnson2(8)},
      {"K3xK3", fam::clique_cartesian(3, 3)}, {"K5xK5", fam::clique_cartesian(5, 5)},
      {"K4*K4", fam::clique_direct(4, 4)}};
  for (const auto& s : all_supported_gq())
    if ((s.s * s.t + 1) * (s.s + 1) <= 400)
      srgs.push_back({std::string(gqcode::family_name(s.f)) + " q=" + str(s.q), gqcode::build_model(s.f, s.q).graph});
  for (const auto& [name, g] : srgs) {
    const auto p = check_srg(g);
    c.expect(p.has_value(), name + " is strongly regular");
    if (!p) continue;
    const auto a = bounds::srg_analysis(*p);
    c.equal(a.d, static_cast<long>(oracle::min_symdiff(oracle::adjacency(g))), name + " d formula vs brute force");
  }
  for (const auto& s : all_supported_gq()) {
    if (s.s < 2 || s.t < 2) continue;
    const auto a = bounds::gq_analysis(s.s, s.t, true);
    const double f = a.frac->to_double(), n = static_cast<double>(a.n);
    const std::string tag = std::string(gqcode::family_name(s.f)) + " q=" + str(s.q);
    c.expect(a.bracket_ok == true, tag + " bracket (exact)");
    c.expect(std::pow(2.0, -1.25) * std::pow(n, 0.25) <= f && f <= 2 * std::pow(n, 0.4), tag + " bracket (floating)");
  }
  // The closed form read off the graph agrees with the parameter formula.
  for (auto f : {gqcode::Family::T2star, gqcode::Family::Parabolic, gqcode::Family::Elliptic,
                 gqcode::Family::Hermitian}) {
    const auto m = gqcode::build_model(f, f == gqcode::Family::T2star ? 4 : 2);
    const auto gq = *m.graph.meta().claimed_gq;
    c.expect(bounds::gq_analysis(gq.s, gq.t, true).frac == frac_closed_form(m.graph),
             std::string(gqcode::family_name(f)) + " closed form from graph");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "T2*(O) q=4: code of size 9, lower bound 9", 5, t2star_q4},
      {2, "remaining quadrangle rows at smallest q", 60, table_rows},
      {3, "discharging values 19, 42, 90 and 3q-7", 0, discharging_values},
      {4, "fractional closed form equals LP", 600, frac_equal},
      {5, "exact solver equals subset enumeration", 0, solver_oracle},
      {6, "inequality chains on solved instances", 0, inequality_chains},
      {7, "geometry invariants", 300, geometry},
      {8, "srg symmetric difference formula and fractional bracket", 0, srg_and_bracket},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = cr.limit_seconds > 0 && secs > cr.limit_seconds;
    const bool ok = error.empty() && c.failures.empty() && !slow;
    failed += !ok;
    std::printf("criterion %d: %s: %s (%zu checks, %.2f s)\n", cr.id, ok ? "PASS" : "FAIL", cr.title, c.checks, secs);
    if (!error.empty()) std::printf("  exception: %s\n", error.c_str());
    if (slow) std::printf("  runtime above %.0f s\n", cr.limit_seconds);
    for (const auto& f : c.failures) std::printf("  failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
