// Brute-force reference implementations used by the tests. They work from
// adjacency queries only and share no code with the library's verifiers,
// hitting-set builder or solvers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "graph.hpp"

namespace oracle {

using Adj = std::vector<std::vector<bool>>;

inline Adj adjacency(const idcode::Graph& g) {
  Adj a(g.n(), std::vector<bool>(g.n(), false));
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = 0; v < g.n(); ++v) a[u][v] = g.adjacent(u, v);
  return a;
}

inline std::vector<std::size_t> closed(const Adj& a, std::size_t u) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (v == u || a[u][v]) out.push_back(v);
  return out;
}

// Trace of N[u] on the set given as a bitmask (n <= 64).
inline std::uint64_t trace(const Adj& a, std::size_t u, std::uint64_t mask) {
  std::uint64_t t = 0;
  for (std::size_t v : closed(a, u))
    if (mask >> v & 1) t |= std::uint64_t{1} << v;
  return t;
}

inline bool dominating(const Adj& a, std::uint64_t mask) {
  for (std::size_t u = 0; u < a.size(); ++u)
    if (trace(a, u, mask) == 0) return false;
  return true;
}

inline bool separating(const Adj& a, std::uint64_t mask) {
  std::set<std::uint64_t> seen;
  for (std::size_t u = 0; u < a.size(); ++u)
    if (!seen.insert(trace(a, u, mask)).second) return false;
  return true;
}

inline bool identifying(const Adj& a, std::uint64_t mask) { return dominating(a, mask) && separating(a, mask); }

inline bool locating_dominating(const Adj& a, std::uint64_t mask) {
  if (!dominating(a, mask)) return false;
  std::set<std::uint64_t> seen;
  for (std::size_t u = 0; u < a.size(); ++u)
    if (!(mask >> u & 1) && !seen.insert(trace(a, u, mask)).second) return false;
  return true;
}

inline std::vector<std::vector<int>> distances(const Adj& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v)
        if (a[u][v] && d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

inline bool resolving(const std::vector<std::vector<int>>& d, std::uint64_t mask) {
  std::set<std::vector<int>> seen;
  for (std::size_t u = 0; u < d.size(); ++u) {
    std::vector<int> vec;
    for (std::size_t w = 0; w < d.size(); ++w)
      if (mask >> w & 1) vec.push_back(d[u][w]);
    if (!seen.insert(vec).second) return false;
  }
  return true;
}

inline bool twin_free(const Adj& a) {
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t u = 0; u < a.size(); ++u)
    if (!seen.insert(closed(a, u)).second) return false;
  return true;
}

// Smallest subset size satisfying pred, by enumerating masks in order of size.
template <typename Pred>
std::optional<int> min_subset(std::size_t n, Pred pred) {
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<long>(size), pick.end(), true);
    do {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) mask |= std::uint64_t{1} << i;
      if (pred(mask)) return static_cast<int>(size);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

inline std::uint64_t mask_of(const idcode::VertexSet& s) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.test(i)) m |= std::uint64_t{1} << i;
  return m;
}

inline idcode::Graph from_adjacency(const Adj& a) {
  idcode::GraphBuilder b(a.size());
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = u + 1; v < a.size(); ++v)
      if (a[u][v]) b.add_edge(u, v);
  return std::move(b).build();
}

// Random twin-free graph on n vertices with at least one edge.
inline idcode::Graph random_twin_free(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    Adj a(n, std::vector<bool>(n, false));
    bool any = false;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (coin(rng)) a[u][v] = a[v][u] = any = true;
    if (any && twin_free(a)) return from_adjacency(a);
  }
}

// Minimum |N[u] ^ N[v]| over pairs.
inline std::size_t min_symdiff(const Adj& a) {
  std::size_t best = SIZE_MAX;
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = u + 1; v < a.size(); ++v) {
      std::size_t diff = 0;
      for (std::size_t w = 0; w < a.size(); ++w) {
        const bool in_u = w == u || a[u][w], in_v = w == v || a[v][w];
        diff += in_u != in_v;
      }
      best = std::min(best, diff);
    }
  return best;
}

// srg parameters by direct counting, or nullopt.
inline std::optional<idcode::SrgParams> srg(const Adj& a) {
  const long n = static_cast<long>(a.size());
  std::set<long> deg, lam, mu;
  for (std::size_t u = 0; u < a.size(); ++u) {
    deg.insert(static_cast<long>(std::count(a[u].begin(), a[u].end(), true)));
    for (std::size_t v = u + 1; v < a.size(); ++v) {
      long common = 0;
      for (std::size_t w = 0; w < a.size(); ++w) common += a[u][w] && a[v][w];
      (a[u][v] ? lam : mu).insert(common);
    }
  }
  if (deg.size() != 1 || lam.size() > 1 || mu.size() != 1) return std::nullopt;
  return idcode::SrgParams{n, *deg.begin(), lam.empty() ? 0 : *lam.begin(), *mu.begin()};
}

}  // namespace oracle
