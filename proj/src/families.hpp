#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "pg.hpp"

namespace idcode::families {

Graph complete(std::size_t n);
Graph path(std::size_t n);

/// r-th power of the n-cycle. n >= 5, 1 <= r < (n-1)/2.
Graph cycle_power(std::size_t n, std::size_t r);
/// Binary words of length l, adjacent iff Hamming distance in [1, r].
/// l >= 3, 1 <= r < l, 2^l <= 2^20.
Graph hypercube_power(std::size_t l, std::size_t r);
/// Paley graph on GF(q), q a prime power with q = 1 mod 4.
Graph paley(std::size_t q);
/// 2-subsets of an m-set, adjacent iff disjoint. m >= 5.
Graph kneser2(std::size_t m);
/// 2-subsets of an m-set, adjacent iff they share one element. m >= 4.
Graph johnson2(std::size_t m);
Graph petersen();

// Products use row-major vertex order: (g index) * n_h + (h index).
Graph cartesian(const Graph& g, const Graph& h);
Graph direct(const Graph& g, const Graph& h);
Graph lexicographic(const Graph& g, const Graph& h);
/// K_p [] K_q with the rook's-graph SRG claim when p == q.
Graph clique_cartesian(std::size_t p, std::size_t q);
/// K_p x K_q with the SRG claim when p == q.
Graph clique_direct(std::size_t p, std::size_t q);

/// A generalized-quadrangle graph together with the geometry it came from.
/// points[i] is vertex i; vertex order is lex on canonical coordinates.
struct GqModel {
  Graph graph;
  std::vector<pg::ProjPoint> points;
  std::optional<pg::FormSpec> form;  // absent for T2*(O)
  gf::FieldPtr field;
  std::uint32_t q = 0;
};

/// T2*(O): affine points of PG(3,q), q = 2^k with 2 < q <= 16; u ~ v iff the
/// line uv meets the hyperconic in the plane at infinity. GQ(q-1, q+1).
GqModel gq_t2star(std::uint32_t q);
/// Points of the parabolic quadric Q(4,q) with collinearity. GQ(q,q).
GqModel gq_parabolic(std::uint32_t q);
/// Points of the elliptic quadric Q-(5,q), q <= 5. GQ(q,q^2).
GqModel gq_elliptic(std::uint32_t q);
/// Points of H(3,q^2), q <= 4. GQ(q^2,q).
GqModel gq_hermitian(std::uint32_t q);

/// Lines of a GQ graph recovered from adjacency: the line through adjacent
/// u, v is {u, v} plus their common neighbours. Sorted, deduplicated.
std::vector<std::vector<std::size_t>> gq_lines(const Graph& g);

struct GqAxiomReport {
  bool points_per_line_ok = false;   // every line has s+1 points
  bool lines_per_point_ok = false;   // every point is on t+1 lines
  bool unique_projection_ok = false; // P not on L => exactly one point of L collinear with P
  std::size_t num_lines = 0;
  bool ok() const { return points_per_line_ok && lines_per_point_ok && unique_projection_ok; }
};
/// Exhaustive check of the three GQ axioms on the adjacency graph.
GqAxiomReport check_gq_axioms(const Graph& g, long s, long t);

}  // namespace idcode::families
