#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace idcode {

/// Subset of the vertices of a graph; also the representation of codes.
using VertexSet = DynamicBitset;

VertexSet make_vertex_set(std::size_t n, const std::vector<std::size_t>& members);

struct SrgParams {
  long n = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
};

struct GqParams {
  long s = 0, t = 0;
  bool operator==(const GqParams&) const = default;
};

/// Family claims attached by generators. Claims are not trusted: anything a
/// closed-form bound relies on is re-checked against the adjacency.
struct FamilyMeta {
  std::string family;
  std::vector<long> params;
  bool claimed_vertex_transitive = false;
  std::optional<SrgParams> claimed_srg;
  std::optional<GqParams> claimed_gq;
  // Extra construction facts (e.g. the elliptic form coefficient).
  std::map<std::string, std::string> notes;
};

/**
 * Immutable simple undirected graph with bitset rows. Both the open and the
 * closed neighbourhood rows are stored; symmetric-difference scans are
 * word-wise XOR + popcount over the closed rows.
 */
class Graph {
 public:
  Graph() = default;

  std::size_t n() const noexcept { return open_.size(); }
  std::size_t num_edges() const noexcept { return m_; }

  bool adjacent(std::size_t u, std::size_t v) const noexcept { return open_[u].test(v); }
  const DynamicBitset& open_row(std::size_t u) const noexcept { return open_[u]; }
  const DynamicBitset& closed_row(std::size_t u) const noexcept { return closed_[u]; }
  std::size_t degree(std::size_t u) const noexcept { return open_[u].count(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  const FamilyMeta& meta() const noexcept { return meta_; }
  FamilyMeta& mutable_meta() noexcept { return meta_; }

  /// Sorted (u < v) edge list.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool operator==(const Graph& o) const;

 private:
  friend class GraphBuilder;

  std::vector<DynamicBitset> open_;
  std::vector<DynamicBitset> closed_;
  std::vector<std::string> labels_;
  FamilyMeta meta_;
  std::size_t m_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  /// Throws BadVertex for out-of-range ids or loops. Duplicate edges are ignored.
  GraphBuilder& add_edge(std::size_t u, std::size_t v);
  GraphBuilder& set_labels(std::vector<std::string> labels);
  GraphBuilder& set_meta(FamilyMeta meta);

  /// Throws BadParams if labels are present but not unique or of the wrong count.
  Graph build() &&;

 private:
  Graph g_;
};

VertexSet closed_nbhd(const Graph& g, std::size_t u);
/// |N[u] xor N[v]|; throws BadVertex for invalid ids and BadParams for u == v.
std::size_t symdiff_size(const Graph& g, std::size_t u, std::size_t v);
/// Worker threads for the pair scans of min_symdiff and check_srg (default 1).
/// Results do not depend on the setting.
void set_scan_threads(std::size_t n);
std::size_t scan_threads();

/// Smallest |N[u] xor N[v]| over distinct pairs; 0 iff twins exist. n >= 2.
std::size_t min_symdiff(const Graph& g);
bool has_twins(const Graph& g);
/// Lexicographically smallest twin pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_twins(const Graph& g);
std::pair<std::size_t, std::size_t> degrees(const Graph& g);
bool is_connected(const Graph& g);
/// Throws Disconnected.
std::size_t diameter(const Graph& g);
/// BFS distances; -1 for unreachable.
std::vector<std::vector<int>> distance_matrix(const Graph& g);
/// (n, k, lambda, mu) iff the graph is strongly regular. The parameter identity
/// (n-k-1) mu = k (k - lambda - 1) is checked and a violation throws Internal.
std::optional<SrgParams> check_srg(const Graph& g);

/// Text format: "n m", then "u v" per edge (sorted), then "#label u <text>".
void write_graph(const Graph& g, std::ostream& os);
Graph read_graph(std::istream& is);

/// VertexSet text format: whitespace-separated sorted ids, one set per line.
void write_vertex_set(const VertexSet& s, std::ostream& os);
std::vector<VertexSet> read_vertex_sets(std::istream& is, std::size_t n);

}  // namespace idcode
