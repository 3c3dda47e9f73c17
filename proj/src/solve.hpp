#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "codes.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace idcode {

struct SolveOptions {
  std::uint64_t node_budget = 0;  // 0: default_node_budget()
  std::size_t max_vertices = 64;  // practical guard; raise explicitly for larger graphs
};

/// 10^8, or IDCODE_NODE_BUDGET when that is set to a positive integer.
std::uint64_t default_node_budget();

struct SolveResult {
  enum class Proof { Exhausted, BoundMatched };

  long optimum = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  Proof proof = Proof::Exhausted;
};

/**
 * Minimum hitting set by branch and bound.
 *
 * Branches on the unhit constraint with the fewest admissible elements, trying
 * its elements by decreasing coverage of unhit constraints (ties: lower index).
 * A greedily built packing of pairwise disjoint unhit constraints gives the
 * lower bound; greedy_cover seeds the incumbent. Single-threaded, so the
 * witness is reproducible.
 *
 * Throws Infeasible (an empty constraint) and BudgetExceeded.
 */
SolveResult exact_min(const HittingInstance& inst, const SolveOptions& opts = {});
/// Throws SizeGuard above opts.max_vertices, TwinsPresent for Identifying on twins.
SolveResult exact_min(const Graph& g, Property p, const SolveOptions& opts = {});

/// Repeatedly takes the element in the most unhit constraints (ties: lowest id).
VertexSet greedy_cover(const HittingInstance& inst);

struct FracResult {
  Rational value;
  std::vector<Rational> primal;  // optimal x_u, one per vertex
  std::size_t constraints_used = 0;
  std::size_t pivots = 0;
};

/// Exact optimum of the LP relaxation of the hitting-set program, via an
/// exact-rational primal simplex (Bland's rule) on the dual packing LP. The
/// primal solution is recovered from the final reduced costs and checked.
/// Throws BudgetExceeded above 20000 constraints.
FracResult frac_lp_detailed(const HittingInstance& inst);
Rational frac_lp(const HittingInstance& inst);

/// |V| / min(k + 1, d) for a claimed vertex-transitive, regular, twin-free graph.
/// Throws NotRegular, NotClaimedTransitive or TwinsPresent.
Rational frac_closed_form(const Graph& g);

}  // namespace idcode
