#include "solve.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "error.hpp"

namespace idcode {

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("IDCODE_NODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100'000'000ull;
}

VertexSet greedy_cover(const HittingInstance& inst) {
  VertexSet chosen(inst.n);
  std::vector<const VertexSet*> unhit;
  for (const auto& c : inst.constraints) {
    if (c.set.none()) fail(ErrorCode::Infeasible, "instance has an empty constraint");
    unhit.push_back(&c.set);
  }
  std::vector<std::size_t> cover(inst.n);
  while (!unhit.empty()) {
    std::fill(cover.begin(), cover.end(), 0);
    for (const auto* c : unhit) c->for_each([&](std::size_t x) { ++cover[x]; });
    const auto best = static_cast<std::size_t>(std::max_element(cover.begin(), cover.end()) - cover.begin());
    chosen.set(best);
    std::erase_if(unhit, [&](const VertexSet* c) { return c->test(best); });
  }
  return chosen;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(std::vector<VertexSet> cons, std::size_t n, std::uint64_t budget)
      : cons_(std::move(cons)), n_(n), budget_(budget) {}

  SolveResult run(VertexSet incumbent) {
    best_ = incumbent;
    best_size_ = incumbent.count();
    VertexSet chosen(n_), allowed(n_);
    allowed.fill();
    std::vector<std::uint32_t> unhit(cons_.size());
    std::iota(unhit.begin(), unhit.end(), 0u);

    SolveResult res;
    const std::size_t root_lb = packing_bound(unhit, allowed);
    if (root_lb >= best_size_) {
      res.proof = SolveResult::Proof::BoundMatched;
      nodes_ = 1;
    } else {
      dfs(chosen, 0, allowed, unhit);
    }
    res.optimum = static_cast<long>(best_size_);
    res.witness = best_;
    res.nodes_explored = nodes_;
    return res;
  }

 private:
  std::size_t packing_bound(const std::vector<std::uint32_t>& unhit, const VertexSet& allowed) {
    std::vector<std::pair<std::size_t, std::uint32_t>> order;
    order.reserve(unhit.size());
    for (auto c : unhit) order.emplace_back(cons_[c].intersection_count(allowed), c);
    std::sort(order.begin(), order.end());
    VertexSet used(n_);
    std::size_t lb = 0;
    for (auto [sz, c] : order) {
      if (sz == 0) return n_ + 1;  // infeasible below this node
      auto avail = cons_[c] & allowed;
      if (!avail.intersects(used)) {
        used |= avail;
        ++lb;
      }
    }
    return lb;
  }

  void dfs(VertexSet& chosen, std::size_t count, VertexSet& allowed, const std::vector<std::uint32_t>& unhit) {
    if (++nodes_ > budget_) fail(ErrorCode::BudgetExceeded, "node budget exhausted");
    if (unhit.empty()) {
      if (count < best_size_) {
        best_size_ = count;
        best_ = chosen;
      }
      return;
    }
    if (count + 1 >= best_size_) return;
    if (count + packing_bound(unhit, allowed) >= best_size_) return;

    std::uint32_t branch = unhit.front();
    std::size_t branch_avail = SIZE_MAX;
    for (auto c : unhit) {
      const std::size_t a = cons_[c].intersection_count(allowed);
      if (a < branch_avail) {
        branch_avail = a;
        branch = c;
      }
    }
    auto candidates = (cons_[branch] & allowed).members();
    std::vector<std::size_t> cover(n_, 0);
    for (auto c : unhit) (cons_[c] & allowed).for_each([&](std::size_t x) { ++cover[x]; });
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) { return cover[a] > cover[b]; });

    std::vector<std::size_t> forbidden;
    std::vector<std::uint32_t> rest;
    for (auto e : candidates) {
      rest.clear();
      for (auto c : unhit)
        if (!cons_[c].test(e)) rest.push_back(c);
      chosen.set(e);
      dfs(chosen, count + 1, allowed, rest);
      chosen.reset(e);
      allowed.reset(e);
      forbidden.push_back(e);
      if (count + 1 >= best_size_) break;
    }
    for (auto e : forbidden) allowed.set(e);
  }

  std::vector<VertexSet> cons_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  VertexSet best_;
  std::size_t best_size_ = 0;
};

}  // namespace

SolveResult exact_min(const HittingInstance& inst, const SolveOptions& opts) {
  for (const auto& c : inst.constraints)
    if (c.set.none()) fail(ErrorCode::Infeasible, "instance has an empty constraint");
  auto incumbent = greedy_cover(inst);
  const std::uint64_t budget = opts.node_budget ? opts.node_budget : default_node_budget();
  BranchAndBound bb(minimal_constraints(inst), inst.n, budget);
  auto res = bb.run(std::move(incumbent));
  if (!inst.hits_all(res.witness)) fail(ErrorCode::Internal, "solver witness misses a constraint");
  return res;
}

SolveResult exact_min(const Graph& g, Property p, const SolveOptions& opts) {
  if (g.n() > opts.max_vertices)
    fail(ErrorCode::SizeGuard, "exact search limited to " + std::to_string(opts.max_vertices) + " vertices");
  auto inst = build_instance(g, p);
  auto res = exact_min(inst, opts);
  if (!satisfies(g, res.witness, p)) fail(ErrorCode::Internal, "solver witness fails the verifier");
  return res;
}

FracResult frac_lp_detailed(const HittingInstance& inst) {
  auto cons = minimal_constraints(inst);
  if (cons.size() > 20000) fail(ErrorCode::BudgetExceeded, "LP limited to 20000 constraints");
  for (const auto& c : cons)
    if (c.none()) fail(ErrorCode::Infeasible, "instance has an empty constraint");

  // Dual packing LP: max sum_j y_j  s.t.  sum_{j : i in C_j} y_j <= 1 (one row
  // per element i), y >= 0. The slack basis is feasible at y = 0.
  const std::size_t rows = inst.n, m = cons.size(), cols = m + rows;
  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols, 0));
  std::vector<mpq_class> rhs(rows, 1), z(cols, 0);
  std::vector<std::size_t> basis(rows);
  for (std::size_t j = 0; j < m; ++j) {
    cons[j].for_each([&](std::size_t i) { t[i][j] = 1; });
    z[j] = 1;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    t[i][m + i] = 1;
    basis[i] = m + i;
  }
  mpq_class objective = 0;
  std::size_t pivots = 0;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(z[j]) > 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = rows;
    mpq_class best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      mpq_class ratio = rhs[i] / t[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) fail(ErrorCode::Internal, "packing LP reported unbounded");

    const mpq_class piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const mpq_class f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    if (sgn(z[enter]) != 0) {
      const mpq_class f = z[enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(t[leave][j]) != 0) z[j] -= f * t[leave][j];
      objective += f * rhs[leave];
    }
    basis[leave] = enter;
    ++pivots;
  }

  // Covering solution: x_i is minus the reduced cost of slack i.
  FracResult res;
  res.value = Rational(objective);
  res.constraints_used = m;
  res.pivots = pivots;
  mpq_class total = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    mpq_class x = -z[m + i];
    if (sgn(x) < 0) fail(ErrorCode::Internal, "LP dual recovery produced a negative value");
    total += x;
    res.primal.emplace_back(x);
  }
  for (const auto& c : cons) {
    mpq_class s = 0;
    c.for_each([&](std::size_t i) { s += res.primal[i].value(); });
    if (s < 1) fail(ErrorCode::Internal, "LP primal recovery violates a constraint");
  }
  if (total != objective) fail(ErrorCode::Internal, "LP primal and dual objectives differ");
  return res;
}

Rational frac_lp(const HittingInstance& inst) { return frac_lp_detailed(inst).value; }

Rational frac_closed_form(const Graph& g) {
  auto [lo, hi] = degrees(g);
  if (lo != hi) fail(ErrorCode::NotRegular, "closed form needs a regular graph");
  if (!g.meta().claimed_vertex_transitive)
    fail(ErrorCode::NotClaimedTransitive, "closed form needs a graph claimed vertex-transitive");
  const std::size_t d = min_symdiff(g);
  if (d == 0) fail(ErrorCode::TwinsPresent, "closed form needs a twin-free graph");
  return Rational(static_cast<long>(g.n()), static_cast<long>(std::min(hi + 1, d)));
}

}  // namespace idcode
