#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace idcode {

enum class Property { Dominating, Separating, Identifying, LocatingDominating, Resolving };

const char* property_name(Property p) noexcept;
/// Accepts "dominating", "separating", "identifying"/"id", "locating-dominating"/"ld",
/// "resolving". Throws BadParams.
Property parse_property(const std::string& s);

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_separating(const Graph& g, const VertexSet& s);
bool is_identifying(const Graph& g, const VertexSet& s);
bool is_locating_dominating(const Graph& g, const VertexSet& s);
/// Throws Disconnected.
bool is_resolving(const Graph& g, const VertexSet& s);
bool satisfies(const Graph& g, const VertexSet& s, Property p);

struct Witness {
  enum class Kind { Undominated, Unseparated };
  Kind kind;
  std::size_t u = 0;
  std::size_t v = 0;  // Unseparated only
  bool twins = false; // Unseparated pair with N[u] == N[v]

  std::string describe() const;
  bool operator==(const Witness&) const = default;
};

/// Absent when the property holds. Domination failures are reported before
/// separation failures; within each, the lexicographically smallest.
std::optional<Witness> witness_failure(const Graph& g, const VertexSet& s, Property p);

/// Inclusion-minimal subset of s with the property, removing candidates in
/// descending vertex order. Throws PropertyViolated if s fails to begin with.
VertexSet prune(const Graph& g, const VertexSet& s, Property p);

struct Constraint {
  enum class Tag { Domination, Separation };
  VertexSet set;
  Tag tag = Tag::Domination;
  std::size_t u = 0, v = 0;
};

/// Hitting-set view of a property: s has the property iff it meets every set.
struct HittingInstance {
  std::size_t n = 0;
  std::vector<Constraint> constraints;  // deduplicated, first occurrence kept
  std::size_t raw_constraints = 0;      // before deduplication
  /// Largest number of (pre-dedup) constraints containing one element.
  std::size_t r = 0;
  /// Same count after deduplication.
  std::size_t r_dedup = 0;

  bool hits_all(const VertexSet& s) const;
};

/// Identifying-code instance: N[u] for every u and N[u] xor N[v] for u < v.
/// Throws TwinsPresent. Checks that each element lies in exactly
/// (n - deg)(deg + 1) raw constraints.
HittingInstance build_hitting_instance(const Graph& g);
/// Instance for any property. For Identifying this is build_hitting_instance.
/// Separating and locating-dominating constraints are built for every pair;
/// Resolving needs a connected graph.
HittingInstance build_instance(const Graph& g, Property p);

/// Drops constraints that contain another constraint (they are implied).
std::vector<VertexSet> minimal_constraints(const HittingInstance& inst);

}  // namespace idcode
