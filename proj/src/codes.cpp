#include "codes.hpp"

#include <algorithm>
#include <unordered_map>

#include "error.hpp"

namespace idcode {

const char* property_name(Property p) noexcept {
  switch (p) {
    case Property::Dominating: return "dominating";
    case Property::Separating: return "separating";
    case Property::Identifying: return "identifying";
    case Property::LocatingDominating: return "locating-dominating";
    case Property::Resolving: return "resolving";
  }
  return "?";
}

Property parse_property(const std::string& s) {
  if (s == "dominating" || s == "dom") return Property::Dominating;
  if (s == "separating" || s == "sep") return Property::Separating;
  if (s == "identifying" || s == "id" || s == "ID") return Property::Identifying;
  if (s == "locating-dominating" || s == "ld" || s == "LD") return Property::LocatingDominating;
  if (s == "resolving" || s == "res" || s == "RESOLVING") return Property::Resolving;
  fail(ErrorCode::BadParams, "unknown property '" + s + "'");
}

namespace {

void check_size(const Graph& g, const VertexSet& s) {
  if (s.size() != g.n()) fail(ErrorCode::BadParams, "vertex set size does not match the graph");
}

std::optional<std::size_t> first_undominated(const Graph& g, const VertexSet& s) {
  for (std::size_t u = 0; u < g.n(); ++u)
    if (!g.closed_row(u).intersects(s)) return u;
  return std::nullopt;
}

/**
 * Lexicographically smallest pair (u, v), u < v, both in `candidates`, whose
 * signatures coincide. Signatures are hashed, so the scan is O(n) bitset ops.
 */
template <typename SignatureFn>
std::optional<std::pair<std::size_t, std::size_t>> first_collision(std::size_t n, const VertexSet& candidates,
                                                                   SignatureFn&& signature) {
  std::unordered_map<DynamicBitset, std::size_t, DynamicBitsetHash> first_seen;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t v = 0; v < n; ++v) {
    if (!candidates.test(v)) continue;
    auto [it, inserted] = first_seen.emplace(signature(v), v);
    if (inserted) continue;
    // The first collision of a class pairs its two smallest members; across
    // classes keep the one with the smallest first member.
    if (!best || it->second < best->first) best = std::make_pair(it->second, v);
  }
  return best;
}

std::optional<std::pair<std::size_t, std::size_t>> first_unseparated(const Graph& g, const VertexSet& s,
                                                                     const VertexSet& candidates) {
  return first_collision(g.n(), candidates, [&](std::size_t v) { return g.closed_row(v) & s; });
}

DynamicBitset all_vertices(std::size_t n) {
  DynamicBitset b(n);
  b.fill();
  return b;
}

std::vector<std::vector<int>> connected_distances(const Graph& g) {
  auto d = distance_matrix(g);
  for (const auto& row : d)
    for (int x : row)
      if (x < 0) fail(ErrorCode::Disconnected, "resolving sets need a connected graph");
  return d;
}

std::optional<std::pair<std::size_t, std::size_t>> first_unresolved(const Graph& g, const VertexSet& s) {
  auto d = connected_distances(g);
  auto members = s.members();
  std::unordered_map<std::string, std::size_t> seen;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t v = 0; v < g.n(); ++v) {
    std::string key;
    key.reserve(members.size() * 2);
    for (auto x : members) {
      key += std::to_string(d[x][v]);
      key += ',';
    }
    auto [it, inserted] = seen.emplace(key, v);
    if (!inserted && (!best || it->second < best->first)) best = std::make_pair(it->second, v);
  }
  return best;
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
  check_size(g, s);
  return !first_undominated(g, s).has_value();
}

bool is_separating(const Graph& g, const VertexSet& s) {
  check_size(g, s);
  return !first_unseparated(g, s, all_vertices(g.n())).has_value();
}

bool is_identifying(const Graph& g, const VertexSet& s) {
  return is_dominating(g, s) && is_separating(g, s);
}

bool is_locating_dominating(const Graph& g, const VertexSet& s) {
  check_size(g, s);
  if (first_undominated(g, s)) return false;
  auto outside = all_vertices(g.n());
  outside.subtract(s);
  return !first_unseparated(g, s, outside).has_value();
}

bool is_resolving(const Graph& g, const VertexSet& s) {
  check_size(g, s);
  return !first_unresolved(g, s).has_value();
}

bool satisfies(const Graph& g, const VertexSet& s, Property p) {
  switch (p) {
    case Property::Dominating: return is_dominating(g, s);
    case Property::Separating: return is_separating(g, s);
    case Property::Identifying: return is_identifying(g, s);
    case Property::LocatingDominating: return is_locating_dominating(g, s);
    case Property::Resolving: return is_resolving(g, s);
  }
  return false;
}

std::string Witness::describe() const {
  if (kind == Kind::Undominated) return "undominated vertex " + std::to_string(u);
  if (twins) return "twins " + std::to_string(u) + "," + std::to_string(v);
  return "unseparated pair " + std::to_string(u) + "," + std::to_string(v);
}

std::optional<Witness> witness_failure(const Graph& g, const VertexSet& s, Property p) {
  check_size(g, s);
  const bool needs_domination =
      p == Property::Dominating || p == Property::Identifying || p == Property::LocatingDominating;
  if (needs_domination) {
    if (auto u = first_undominated(g, s)) return Witness{Witness::Kind::Undominated, *u, 0, false};
  }
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  switch (p) {
    case Property::Dominating:
      return std::nullopt;
    case Property::Separating:
    case Property::Identifying:
      pair = first_unseparated(g, s, all_vertices(g.n()));
      break;
    case Property::LocatingDominating: {
      auto outside = all_vertices(g.n());
      outside.subtract(s);
      pair = first_unseparated(g, s, outside);
      break;
    }
    case Property::Resolving:
      pair = first_unresolved(g, s);
      break;
  }
  if (!pair) return std::nullopt;
  const bool twins = g.closed_row(pair->first) == g.closed_row(pair->second);
  return Witness{Witness::Kind::Unseparated, pair->first, pair->second, twins};
}

VertexSet prune(const Graph& g, const VertexSet& s, Property p) {
  if (!satisfies(g, s, p)) fail(ErrorCode::PropertyViolated, std::string("set is not ") + property_name(p));
  VertexSet cur = s;
  auto members = s.members();
  // Every property here is monotone, so one descending pass is inclusion-minimal.
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    cur.reset(*it);
    if (!satisfies(g, cur, p)) cur.set(*it);
  }
  return cur;
}

bool HittingInstance::hits_all(const VertexSet& s) const {
  return std::all_of(constraints.begin(), constraints.end(), [&](const Constraint& c) { return c.set.intersects(s); });
}

namespace {

void finish(HittingInstance& inst, std::vector<Constraint> raw) {
  inst.raw_constraints = raw.size();
  std::vector<std::size_t> raw_degree(inst.n, 0);
  for (const auto& c : raw) c.set.for_each([&](std::size_t x) { ++raw_degree[x]; });
  inst.r = raw_degree.empty() ? 0 : *std::max_element(raw_degree.begin(), raw_degree.end());

  std::unordered_map<DynamicBitset, std::size_t, DynamicBitsetHash> seen;
  for (auto& c : raw) {
    if (seen.emplace(c.set, inst.constraints.size()).second) inst.constraints.push_back(std::move(c));
  }
  std::vector<std::size_t> degree(inst.n, 0);
  for (const auto& c : inst.constraints) c.set.for_each([&](std::size_t x) { ++degree[x]; });
  inst.r_dedup = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

}  // namespace

HittingInstance build_hitting_instance(const Graph& g) {
  if (auto tw = find_twins(g))
    fail(ErrorCode::TwinsPresent,
         "twins " + std::to_string(tw->first) + "," + std::to_string(tw->second) + " admit no identifying code");
  HittingInstance inst;
  inst.n = g.n();
  std::vector<Constraint> raw;
  raw.reserve(g.n() * (g.n() + 1) / 2);
  for (std::size_t u = 0; u < g.n(); ++u) raw.push_back({g.closed_row(u), Constraint::Tag::Domination, u, u});
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v)
      raw.push_back({g.closed_row(u) ^ g.closed_row(v), Constraint::Tag::Separation, u, v});

  // Element x lies in N[w] for its deg+1 closed neighbours and in N[w] xor N[z]
  // exactly when one of w, z is in N[x]: (deg+1)(n-deg-1) pairs.
  std::vector<std::size_t> count(g.n(), 0);
  for (const auto& c : raw) c.set.for_each([&](std::size_t x) { ++count[x]; });
  for (std::size_t x = 0; x < g.n(); ++x) {
    const std::size_t k = g.degree(x);
    if (count[x] != (g.n() - k) * (k + 1))
      fail(ErrorCode::Internal, "hypergraph degree of element " + std::to_string(x) + " is inconsistent");
  }
  finish(inst, std::move(raw));
  return inst;
}

HittingInstance build_instance(const Graph& g, Property p) {
  if (p == Property::Identifying) return build_hitting_instance(g);
  HittingInstance inst;
  inst.n = g.n();
  std::vector<Constraint> raw;
  if (p == Property::Dominating || p == Property::LocatingDominating)
    for (std::size_t u = 0; u < g.n(); ++u) raw.push_back({g.closed_row(u), Constraint::Tag::Domination, u, u});
  std::vector<std::vector<int>> dist;
  if (p == Property::Resolving) dist = connected_distances(g);
  if (p != Property::Dominating) {
    for (std::size_t u = 0; u < g.n(); ++u)
      for (std::size_t v = u + 1; v < g.n(); ++v) {
        VertexSet c(g.n());
        if (p == Property::Resolving) {
          for (std::size_t x = 0; x < g.n(); ++x)
            if (dist[x][u] != dist[x][v]) c.set(x);
        } else {
          c = g.closed_row(u) ^ g.closed_row(v);
          // A pair containing a code vertex needs no further separation.
          if (p == Property::LocatingDominating) {
            c.set(u);
            c.set(v);
          }
        }
        raw.push_back({std::move(c), Constraint::Tag::Separation, u, v});
      }
  }
  finish(inst, std::move(raw));
  return inst;
}

std::vector<VertexSet> minimal_constraints(const HittingInstance& inst) {
  std::vector<VertexSet> sets;
  sets.reserve(inst.constraints.size());
  for (const auto& c : inst.constraints) sets.push_back(c.set);
  std::stable_sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
  std::vector<VertexSet> kept;
  for (auto& s : sets) {
    bool implied = false;
    for (const auto& k : kept)
      if (k.is_subset_of(s)) {
        implied = true;
        break;
      }
    if (!implied) kept.push_back(std::move(s));
  }
  return kept;
}

}  // namespace idcode
