#include "graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "error.hpp"

namespace idcode {

VertexSet make_vertex_set(std::size_t n, const std::vector<std::size_t>& members) {
  VertexSet s(n);
  for (auto v : members) {
    if (v >= n) fail(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n(); ++u)
    open_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool Graph::operator==(const Graph& o) const {
  return open_ == o.open_ && labels_ == o.labels_;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  g_.open_.assign(n, DynamicBitset(n));
}

GraphBuilder& GraphBuilder::add_edge(std::size_t u, std::size_t v) {
  const std::size_t n = g_.open_.size();
  if (u >= n || v >= n) fail(ErrorCode::BadVertex, "edge endpoint out of range");
  if (u == v) fail(ErrorCode::BadVertex, "loops are not allowed");
  g_.open_[u].set(v);
  g_.open_[v].set(u);
  return *this;
}

GraphBuilder& GraphBuilder::set_labels(std::vector<std::string> labels) {
  g_.labels_ = std::move(labels);
  return *this;
}

GraphBuilder& GraphBuilder::set_meta(FamilyMeta meta) {
  g_.meta_ = std::move(meta);
  return *this;
}

Graph GraphBuilder::build() && {
  const std::size_t n = g_.open_.size();
  if (!g_.labels_.empty()) {
    if (g_.labels_.size() != n) fail(ErrorCode::BadParams, "label count does not match vertex count");
    std::unordered_set<std::string> seen(g_.labels_.begin(), g_.labels_.end());
    if (seen.size() != n) fail(ErrorCode::BadParams, "vertex labels must be unique");
  }
  g_.closed_ = g_.open_;
  std::size_t deg_sum = 0;
  for (std::size_t u = 0; u < n; ++u) {
    g_.closed_[u].set(u);
    deg_sum += g_.open_[u].count();
  }
  g_.m_ = deg_sum / 2;
  return std::move(g_);
}

namespace {

void check_vertex(const Graph& g, std::size_t u) {
  if (u >= g.n()) fail(ErrorCode::BadVertex, "vertex " + std::to_string(u) + " out of range");
}

}  // namespace

VertexSet closed_nbhd(const Graph& g, std::size_t u) {
  check_vertex(g, u);
  return g.closed_row(u);
}

std::size_t symdiff_size(const Graph& g, std::size_t u, std::size_t v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) fail(ErrorCode::BadParams, "symmetric difference needs distinct vertices");
  return g.closed_row(u).xor_count(g.closed_row(v));
}

namespace {

std::atomic<std::size_t> g_scan_threads{1};

// Runs body(u) for u = t, t + T, t + 2T, ... on T threads, one result per thread.
template <typename Result, typename Body>
std::vector<Result> strided(std::size_t n, Body body) {
  const std::size_t threads = std::max<std::size_t>(1, std::min(g_scan_threads.load(), n));
  std::vector<Result> out(threads);
  if (threads == 1) {
    for (std::size_t u = 0; u < n; ++u) body(u, out[0]);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t u = t; u < n; u += threads) body(u, out[t]);
    });
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

void set_scan_threads(std::size_t n) { g_scan_threads = std::max<std::size_t>(1, n); }
std::size_t scan_threads() { return g_scan_threads; }

std::size_t min_symdiff(const Graph& g) {
  if (g.n() < 2) fail(ErrorCode::BadParams, "min_symdiff needs at least two vertices");
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  struct Best {
    std::size_t value = kMax;
  };
  auto parts = strided<Best>(g.n(), [&](std::size_t u, Best& best) {
    for (std::size_t v = u + 1; v < g.n() && best.value > 0; ++v)
      best.value = std::min(best.value, g.closed_row(u).xor_count(g.closed_row(v)));
  });
  std::size_t best = kMax;
  for (const auto& p : parts) best = std::min(best, p.value);
  return best;
}

std::optional<std::pair<std::size_t, std::size_t>> find_twins(const Graph& g) {
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v)
      if (g.closed_row(u) == g.closed_row(v)) return std::make_pair(u, v);
  return std::nullopt;
}

bool has_twins(const Graph& g) { return find_twins(g).has_value(); }

std::pair<std::size_t, std::size_t> degrees(const Graph& g) {
  if (g.n() == 0) return {0, 0};
  std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
  for (std::size_t u = 0; u < g.n(); ++u) {
    lo = std::min(lo, g.degree(u));
    hi = std::max(hi, g.degree(u));
  }
  return {lo, hi};
}

namespace {

std::vector<int> bfs(const Graph& g, std::size_t src) {
  std::vector<int> dist(g.n(), -1);
  std::deque<std::size_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    g.open_row(u).for_each([&](std::size_t v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

}  // namespace

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.n());
  for (std::size_t u = 0; u < g.n(); ++u) d.push_back(bfs(g, u));
  return d;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  auto d = bfs(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::size_t diameter(const Graph& g) {
  std::size_t diam = 0;
  for (std::size_t u = 0; u < g.n(); ++u) {
    for (int x : bfs(g, u)) {
      if (x < 0) fail(ErrorCode::Disconnected, "diameter of a disconnected graph");
      diam = std::max(diam, static_cast<std::size_t>(x));
    }
  }
  return diam;
}

std::optional<SrgParams> check_srg(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 2) return std::nullopt;
  auto [lo, hi] = degrees(g);
  if (lo != hi) return std::nullopt;
  struct Counts {
    long lambda = -1, mu = -1;
    bool ok = true;
  };
  auto merge = [](long& slot, long value) {
    if (slot < 0) slot = value;
    return slot == value;
  };
  auto parts = strided<Counts>(n, [&](std::size_t u, Counts& c) {
    for (std::size_t v = u + 1; v < n && c.ok; ++v) {
      const long common = static_cast<long>(g.open_row(u).intersection_count(g.open_row(v)));
      c.ok = merge(g.adjacent(u, v) ? c.lambda : c.mu, common);
    }
  });
  long lambda = -1, mu = -1;
  for (const auto& c : parts) {
    if (!c.ok) return std::nullopt;
    if (c.lambda >= 0 && !merge(lambda, c.lambda)) return std::nullopt;
    if (c.mu >= 0 && !merge(mu, c.mu)) return std::nullopt;
  }
  // Complete or empty graphs leave one count undefined; they are not SRGs here.
  if (lambda < 0 || mu < 0) return std::nullopt;
  SrgParams p{static_cast<long>(n), static_cast<long>(lo), lambda, mu};
  if ((p.n - p.k - 1) * p.mu != p.k * (p.k - p.lambda - 1))
    fail(ErrorCode::Internal, "strongly regular parameters violate the edge-count identity");
  return p;
}

void write_graph(const Graph& g, std::ostream& os) {
  os << g.n() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  for (std::size_t u = 0; u < g.labels().size(); ++u) os << "#label " << u << ' ' << g.labels()[u] << '\n';
}

Graph read_graph(std::istream& is) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(is, out)) {
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (!out.empty()) return true;
    }
    return false;
  };
  if (!next_line(line)) fail(ErrorCode::Parse, "empty graph file");
  std::size_t n = 0, m = 0;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m)) fail(ErrorCode::Parse, "bad header line '" + line + "'");
  }
  GraphBuilder b(n);
  std::vector<std::string> labels;
  std::size_t edges_read = 0;
  while (next_line(line)) {
    if (line.rfind("#label ", 0) == 0) {
      std::istringstream ls(line.substr(7));
      std::size_t u = 0;
      if (!(ls >> u) || u >= n) fail(ErrorCode::Parse, "bad label line '" + line + "'");
      std::string text;
      std::getline(ls >> std::ws, text);
      if (labels.empty()) labels.resize(n);
      labels[u] = text;
      continue;
    }
    if (line[0] == '#') continue;
    std::istringstream es(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra) || u < 0 || v < 0)
      fail(ErrorCode::Parse, "bad edge line '" + line + "'");
    try {
      b.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    } catch (const Error& e) {
      fail(ErrorCode::Parse, std::string("bad edge: ") + e.what());
    }
    ++edges_read;
  }
  if (edges_read != m)
    fail(ErrorCode::Parse, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges_read));
  if (!labels.empty()) b.set_labels(std::move(labels));
  try {
    return std::move(b).build();
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

void write_vertex_set(const VertexSet& s, std::ostream& os) {
  bool first = true;
  s.for_each([&](std::size_t v) {
    if (!first) os << ' ';
    os << v;
    first = false;
  });
  os << '\n';
}

std::vector<VertexSet> read_vertex_sets(std::istream& is, std::size_t n) {
  std::vector<VertexSet> out;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    VertexSet s(n);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (...) {
        used = 0;
      }
      if (used != tok.size() || v < 0 || static_cast<std::size_t>(v) >= n)
        fail(ErrorCode::Parse, "bad vertex id '" + tok + "'");
      s.set(static_cast<std::size_t>(v));
    }
    // Every line is one set; a blank line is the empty set.
    out.push_back(std::move(s));
  }
  if (out.empty()) out.emplace_back(n);
  return out;
}

}  // namespace idcode
