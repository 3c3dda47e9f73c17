#include "families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "error.hpp"

namespace idcode::families {

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string srg_string(const SrgParams& p) {
  std::ostringstream os;
  os << p.n << ',' << p.k << ',' << p.lambda << ',' << p.mu;
  return os.str();
}

// Re-derives the claimed SRG parameters from the adjacency.
Graph verified(Graph g) {
  if (!g.meta().claimed_srg) return g;
  auto found = check_srg(g);
  if (!found || !(*found == *g.meta().claimed_srg))
    fail(ErrorCode::Internal, g.meta().family + ": claimed strongly regular parameters do not hold");
  g.mutable_meta().notes["verified_srg"] = srg_string(*found);
  return g;
}

FamilyMeta meta(std::string family, std::vector<long> params, bool vt) {
  FamilyMeta m;
  m.family = std::move(family);
  m.params = std::move(params);
  m.claimed_vertex_transitive = vt;
  return m;
}

std::string label_or_index(const Graph& g, std::size_t u) {
  return g.has_labels() ? g.labels()[u] : std::to_string(u);
}

std::vector<std::string> product_labels(const Graph& g, const Graph& h) {
  std::vector<std::string> labels;
  labels.reserve(g.n() * h.n());
  for (std::size_t a = 0; a < g.n(); ++a)
    for (std::size_t b = 0; b < h.n(); ++b)
      labels.push_back("(" + label_or_index(g, a) + "," + label_or_index(h, b) + ")");
  return labels;
}

std::string coords_label(const pg::ProjPoint& p) { return p.to_string(); }

SrgParams gq_srg(long s, long t) { return {(s * t + 1) * (s + 1), s * (t + 1), s - 1, t + 1}; }

FamilyMeta gq_meta(std::string family, std::uint32_t q, long s, long t) {
  auto m = meta(std::move(family), {static_cast<long>(q)}, true);
  m.claimed_gq = GqParams{s, t};
  m.claimed_srg = gq_srg(s, t);
  return m;
}

// Collinearity graph of a polar variety via the polar pairing.
GqModel polar_model(const pg::FormSpec& form, std::uint32_t q, FamilyMeta m) {
  GqModel model;
  model.points = pg::variety_points(form);
  model.form = form;
  model.field = form.field;
  model.q = q;
  const auto& f = *form.field;
  const std::size_t n = model.points.size();
  const std::size_t dim = form.n + 1;

  // Each point becomes a linear functional y -> B(x, y) for the quadric, or
  // its coordinate-wise conjugate for the Hermitian pairing.
  std::vector<pg::Coords> functional(n, pg::Coords(dim, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = model.points[i].coords;
    if (form.kind == pg::FormSpec::Kind::Hermitian) {
      for (std::size_t j = 0; j < dim; ++j) functional[i][j] = f.conj(x[j], form.base_q);
      continue;
    }
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = a; b < dim; ++b) {
        const auto c = form.coef[a][b];
        if (!c) continue;
        if (a == b) {
          functional[i][a] = f.add(functional[i][a], f.mul(f.add(c, c), x[a]));
        } else {
          functional[i][b] = f.add(functional[i][b], f.mul(c, x[a]));
          functional[i][a] = f.add(functional[i][a], f.mul(c, x[b]));
        }
      }
  }

  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      gf::Elem acc = 0;
      const auto& y = model.points[v].coords;
      for (std::size_t j = 0; j < dim; ++j) acc = f.add(acc, f.mul(y[j], functional[u][j]));
      if (acc == 0) b.add_edge(u, v);
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : model.points) labels.push_back(coords_label(p));
  b.set_labels(std::move(labels)).set_meta(std::move(m));
  model.graph = verified(std::move(b).build());
  return model;
}

void require_prime_power(std::uint64_t q, const char* what) {
  if (gf::prime_power(q).first == 0)
    fail(ErrorCode::BadParams, std::string(what) + ": q must be a prime power");
}

}  // namespace

Graph complete(std::size_t n) {
  if (n == 0) fail(ErrorCode::BadParams, "complete graph needs n >= 1");
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) b.add_edge(u, v);
  b.set_meta(meta("complete", {static_cast<long>(n)}, true));
  return std::move(b).build();
}

Graph path(std::size_t n) {
  if (n == 0) fail(ErrorCode::BadParams, "path needs n >= 1");
  GraphBuilder b(n);
  for (std::size_t u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  b.set_meta(meta("path", {static_cast<long>(n)}, n <= 2));
  return std::move(b).build();
}

Graph cycle_power(std::size_t n, std::size_t r) {
  if (n < 5 || r < 1 || 2 * r >= n - 1)
    fail(ErrorCode::BadParams, "cycle power needs n >= 5 and 1 <= r < (n-1)/2");
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t d = 1; d <= r; ++d) b.add_edge(u, (u + d) % n);
  b.set_meta(meta("cycle", {static_cast<long>(n), static_cast<long>(r)}, true));
  return std::move(b).build();
}

Graph hypercube_power(std::size_t l, std::size_t r) {
  if (l < 3 || r < 1 || r >= l) fail(ErrorCode::BadParams, "hypercube power needs l >= 3 and 1 <= r < l");
  if (l > 14) fail(ErrorCode::SizeGuard, "hypercube dimension above 14 exceeds the bitset-graph guard");
  const std::size_t n = std::size_t{1} << l;
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (static_cast<std::size_t>(std::popcount(u ^ v)) <= r) b.add_edge(u, v);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::string w(l, '0');
    for (std::size_t i = 0; i < l; ++i)
      if ((u >> (l - 1 - i)) & 1u) w[i] = '1';
    labels.push_back(w);
  }
  b.set_labels(std::move(labels)).set_meta(meta("hypercube", {static_cast<long>(l), static_cast<long>(r)}, true));
  return std::move(b).build();
}

Graph paley(std::size_t q) {
  auto [p, k] = gf::prime_power(q);
  if (p == 0 || q % 4 != 1) fail(ErrorCode::BadParams, "Paley graph needs a prime power q = 1 mod 4");
  auto field = gf::field(p, k);
  const auto& f = *field;
  GraphBuilder b(q);
  for (gf::Elem a = 0; a < q; ++a)
    for (gf::Elem c = a + 1; c < q; ++c)
      if (f.is_square(f.sub(a, c))) b.add_edge(a, c);
  std::vector<std::string> labels;
  for (gf::Elem a = 0; a < q; ++a) labels.push_back(f.to_string(a));
  auto m = meta("paley", {static_cast<long>(q)}, true);
  const long lq = static_cast<long>(q);
  m.claimed_srg = SrgParams{lq, (lq - 1) / 2, (lq - 5) / 4, (lq - 1) / 4};
  b.set_labels(std::move(labels)).set_meta(std::move(m));
  return verified(std::move(b).build());
}

namespace {

std::vector<std::pair<long, long>> pairs_of(std::size_t m) {
  std::vector<std::pair<long, long>> out;
  for (long i = 0; i < static_cast<long>(m); ++i)
    for (long j = i + 1; j < static_cast<long>(m); ++j) out.emplace_back(i, j);
  return out;
}

Graph two_subset_graph(std::size_t m, bool kneser, FamilyMeta fm) {
  auto subsets = pairs_of(m);
  GraphBuilder b(subsets.size());
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < subsets.size(); ++u) {
    auto [a, c] = subsets[u];
    labels.push_back("{" + std::to_string(a) + "," + std::to_string(c) + "}");
    for (std::size_t v = u + 1; v < subsets.size(); ++v) {
      auto [x, y] = subsets[v];
      const int shared = (a == x) + (a == y) + (c == x) + (c == y);
      if ((kneser && shared == 0) || (!kneser && shared == 1)) b.add_edge(u, v);
    }
  }
  b.set_labels(std::move(labels)).set_meta(std::move(fm));
  return verified(std::move(b).build());
}

}  // namespace

Graph kneser2(std::size_t m) {
  if (m < 5) fail(ErrorCode::BadParams, "Kneser K(m,2) needs m >= 5");
  const long lm = static_cast<long>(m);
  auto fm = meta("kneser", {lm}, true);
  fm.claimed_srg = SrgParams{binom(lm, 2), binom(lm - 2, 2), binom(lm - 4, 2), binom(lm - 3, 2)};
  return two_subset_graph(m, true, std::move(fm));
}

Graph johnson2(std::size_t m) {
  if (m < 4) fail(ErrorCode::BadParams, "Johnson J(m,2) needs m >= 4");
  const long lm = static_cast<long>(m);
  auto fm = meta("johnson", {lm}, true);
  fm.claimed_srg = SrgParams{binom(lm, 2), 2 * (lm - 2), lm - 2, 4};
  return two_subset_graph(m, false, std::move(fm));
}

Graph petersen() { return kneser2(5); }

namespace {

enum class ProductKind { Cartesian, Direct, Lexicographic };

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
  if (g.n() == 0 || h.n() == 0) fail(ErrorCode::BadParams, "product of an empty graph");
  const std::size_t nh = h.n();
  const std::size_t n = g.n() * nh;
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t ug = u / nh, uh = u % nh;
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::size_t vg = v / nh, vh = v % nh;
      bool adj = false;
      switch (kind) {
        case ProductKind::Cartesian:
          adj = (ug == vg && h.adjacent(uh, vh)) || (uh == vh && g.adjacent(ug, vg));
          break;
        case ProductKind::Direct:
          adj = ug != vg && uh != vh && g.adjacent(ug, vg) && h.adjacent(uh, vh);
          break;
        case ProductKind::Lexicographic:
          adj = (ug != vg && g.adjacent(ug, vg)) || (ug == vg && h.adjacent(uh, vh));
          break;
      }
      if (adj) b.add_edge(u, v);
    }
  }
  static const char* names[] = {"cartesian", "direct", "lexicographic"};
  FamilyMeta fm;
  fm.family = names[static_cast<int>(kind)];
  fm.params = {static_cast<long>(g.n()), static_cast<long>(h.n())};
  fm.claimed_vertex_transitive = g.meta().claimed_vertex_transitive && h.meta().claimed_vertex_transitive;
  fm.notes["left"] = g.meta().family;
  fm.notes["right"] = h.meta().family;
  b.set_labels(product_labels(g, h)).set_meta(std::move(fm));
  return std::move(b).build();
}

}  // namespace

Graph cartesian(const Graph& g, const Graph& h) { return product(g, h, ProductKind::Cartesian); }
Graph direct(const Graph& g, const Graph& h) { return product(g, h, ProductKind::Direct); }
Graph lexicographic(const Graph& g, const Graph& h) { return product(g, h, ProductKind::Lexicographic); }

Graph clique_cartesian(std::size_t p, std::size_t q) {
  if (p < 2 || q < 2) fail(ErrorCode::BadParams, "clique product needs p, q >= 2");
  auto g = cartesian(complete(p), complete(q));
  auto& m = g.mutable_meta();
  m.family = "clique-cartesian";
  m.params = {static_cast<long>(p), static_cast<long>(q)};
  const long lp = static_cast<long>(p);
  if (p == q) m.claimed_srg = SrgParams{lp * lp, 2 * lp - 2, lp - 2, 2};
  return verified(std::move(g));
}

Graph clique_direct(std::size_t p, std::size_t q) {
  if (p < 2 || q < 2) fail(ErrorCode::BadParams, "clique product needs p, q >= 2");
  auto g = direct(complete(p), complete(q));
  auto& m = g.mutable_meta();
  m.family = "clique-direct";
  m.params = {static_cast<long>(p), static_cast<long>(q)};
  const long lp = static_cast<long>(p);
  if (p == q && p >= 3) m.claimed_srg = SrgParams{lp * lp, (lp - 1) * (lp - 1), (lp - 2) * (lp - 2), (lp - 2) * (lp - 1)};
  return verified(std::move(g));
}

GqModel gq_t2star(std::uint32_t q) {
  if (q <= 2 || q > 16 || !std::has_single_bit(q))
    fail(ErrorCode::BadParams, "T2*(O) needs q = 2^k with 2 < q <= 16");
  GqModel model;
  model.field = gf::field(2, static_cast<std::uint32_t>(std::countr_zero(q)));
  model.q = q;
  const auto& f = *model.field;
  const auto oval = pg::hyperconic(model.field);

  // Directions of O as raw affine offsets (d1, d2, d3).
  std::vector<pg::Coords> dirs;
  for (const auto& c : oval.conic) dirs.push_back({c.coords[1], c.coords[2], c.coords[3]});
  dirs.push_back({0, 1, 0});

  const std::size_t n = static_cast<std::size_t>(q) * q * q;
  auto index = [q](gf::Elem a, gf::Elem b, gf::Elem c) {
    return (static_cast<std::size_t>(a) * q + b) * q + c;
  };
  model.points.reserve(n);
  for (gf::Elem a = 0; a < q; ++a)
    for (gf::Elem b = 0; b < q; ++b)
      for (gf::Elem c = 0; c < q; ++c) model.points.push_back({model.field, {1, a, b, c}});

  GraphBuilder builder(n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto& x = model.points[u].coords;
    for (const auto& d : dirs)
      for (gf::Elem lam = 1; lam < q; ++lam) {
        const std::size_t v = index(f.add(x[1], f.mul(lam, d[0])), f.add(x[2], f.mul(lam, d[1])),
                                    f.add(x[3], f.mul(lam, d[2])));
        if (v > u) builder.add_edge(u, v);
      }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : model.points) labels.push_back(coords_label(p));
  const long lq = static_cast<long>(q);
  builder.set_labels(std::move(labels)).set_meta(gq_meta("gq-t2star", q, lq - 1, lq + 1));
  model.graph = verified(std::move(builder).build());
  return model;
}

GqModel gq_parabolic(std::uint32_t q) {
  require_prime_power(q, "parabolic quadric");
  if (q > 16) fail(ErrorCode::SizeGuard, "parabolic quadric limited to q <= 16");
  const long lq = static_cast<long>(q);
  return polar_model(pg::parabolic_form(gf::field_of_order(q)), q, gq_meta("gq-parabolic", q, lq, lq));
}

GqModel gq_elliptic(std::uint32_t q) {
  require_prime_power(q, "elliptic quadric");
  if (q > 5) fail(ErrorCode::SizeGuard, "elliptic quadric limited to q <= 5");
  const long lq = static_cast<long>(q);
  auto form = pg::elliptic_form(gf::field_of_order(q));
  auto fm = gq_meta("gq-elliptic", q, lq, lq * lq);
  fm.notes["d"] = form.field->to_string(form.coef[0][0]);
  return polar_model(form, q, std::move(fm));
}

GqModel gq_hermitian(std::uint32_t q) {
  require_prime_power(q, "Hermitian variety");
  if (q > 4) fail(ErrorCode::SizeGuard, "Hermitian variety limited to q <= 4");
  const long lq = static_cast<long>(q);
  auto form = pg::hermitian_form(gf::field_of_order(static_cast<std::uint64_t>(q) * q), q);
  return polar_model(form, q, gq_meta("gq-hermitian", q, lq * lq, lq));
}

std::vector<std::vector<std::size_t>> gq_lines(const Graph& g) {
  std::set<std::vector<std::size_t>> lines;
  for (std::size_t u = 0; u < g.n(); ++u)
    g.open_row(u).for_each([&](std::size_t v) {
      if (v <= u) return;
      auto line = g.open_row(u) & g.open_row(v);
      line.set(u);
      line.set(v);
      // Only record a line from its two smallest points.
      auto first = line.find_first();
      auto second = line.find_next(first + 1);
      if (first == u && second == v) lines.insert(line.members());
    });
  return {lines.begin(), lines.end()};
}

GqAxiomReport check_gq_axioms(const Graph& g, long s, long t) {
  GqAxiomReport r;
  auto lines = gq_lines(g);
  r.num_lines = lines.size();
  r.points_per_line_ok = true;
  std::vector<long> lines_at(g.n(), 0);
  std::vector<VertexSet> line_sets;
  line_sets.reserve(lines.size());
  for (const auto& line : lines) {
    if (static_cast<long>(line.size()) != s + 1) r.points_per_line_ok = false;
    // Points of a line must be pairwise collinear.
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j)
        if (!g.adjacent(line[i], line[j])) r.points_per_line_ok = false;
    for (auto p : line) ++lines_at[p];
    line_sets.push_back(make_vertex_set(g.n(), line));
  }
  r.lines_per_point_ok = std::all_of(lines_at.begin(), lines_at.end(), [t](long c) { return c == t + 1; });
  r.unique_projection_ok = true;
  for (std::size_t p = 0; p < g.n() && r.unique_projection_ok; ++p)
    for (const auto& line : line_sets) {
      if (line.test(p)) continue;
      if (g.open_row(p).intersection_count(line) != 1) {
        r.unique_projection_ok = false;
        break;
      }
    }
  return r;
}

}  // namespace idcode::families
