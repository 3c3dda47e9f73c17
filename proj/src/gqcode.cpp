#include "gqcode.hpp"

#include <algorithm>
#include <random>

#include "codes.hpp"
#include "error.hpp"

namespace idcode::gqcode {

using families::GqModel;
using Line = std::vector<std::size_t>;

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::T2star: return "t2star";
    case Family::Parabolic: return "parabolic";
    case Family::Elliptic: return "elliptic";
    case Family::Hermitian: return "hermitian";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  const std::string k = s.rfind("gq-", 0) == 0 ? s.substr(3) : s;
  if (k == "t2star") return Family::T2star;
  if (k == "parabolic") return Family::Parabolic;
  if (k == "elliptic") return Family::Elliptic;
  if (k == "hermitian") return Family::Hermitian;
  fail(ErrorCode::BadParams, "unknown quadrangle family '" + s + "'");
}

GqModel build_model(Family f, std::uint32_t q) {
  switch (f) {
    case Family::T2star: return families::gq_t2star(q);
    case Family::Parabolic: return families::gq_parabolic(q);
    case Family::Elliptic: return families::gq_elliptic(q);
    case Family::Hermitian: return families::gq_hermitian(q);
  }
  fail(ErrorCode::BadParams, "unknown quadrangle family");
}

namespace {

bool disjoint(const Line& a, const Line& b) {
  for (auto x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

bool contains(const Line& l, std::size_t v) { return std::find(l.begin(), l.end(), v) != l.end(); }

std::vector<pg::Coords> coords_of(const GqModel& m, const Line& l) {
  std::vector<pg::Coords> rows;
  for (auto v : l) rows.push_back(m.points[v].coords);
  return rows;
}

// Drops the first point x of lines[base] not adjacent to any of `avoid`
// together with its projections (unique neighbours) on the other lines,
// provided the result is still identifying.
void remove_point_and_projections(const Graph& g, Construction& c, std::size_t base,
                                  const std::vector<std::size_t>& avoid) {
  for (auto x : c.lines[base]) {
    if (std::any_of(avoid.begin(), avoid.end(), [&](std::size_t a) { return g.adjacent(x, a); })) continue;
    std::vector<std::size_t> removed{x};
    bool unique = true;
    for (std::size_t i = 0; i < c.lines.size() && unique; ++i) {
      if (i == base) continue;
      std::vector<std::size_t> proj;
      for (auto y : c.lines[i])
        if (g.adjacent(x, y)) proj.push_back(y);
      if (proj.size() != 1 || std::find(removed.begin(), removed.end(), proj[0]) != removed.end())
        unique = false;
      else
        removed.push_back(proj[0]);
    }
    if (!unique) continue;
    VertexSet s = c.pre_prune;
    for (auto v : removed) s.reset(v);
    if (!is_identifying(g, s)) continue;
    c.removal = std::move(s);
    c.removed = std::move(removed);
    c.removal_identifying = true;
    return;
  }
  c.removal = VertexSet(g.n());
}

Construction finish(const GqModel& m, Family f, std::vector<Line> lines, long expected_pre, long target,
                    std::size_t base, std::vector<std::size_t> avoid = {}) {
  const Graph& g = m.graph;
  Construction c;
  c.family = f;
  c.q = m.q;
  c.expected_pre_size = expected_pre;
  c.target_size = target;
  c.pre_prune = VertexSet(g.n());
  for (const auto& l : lines)
    for (auto v : l) c.pre_prune.set(v);
  c.lines = std::move(lines);
  c.pre_identifying = is_identifying(g, c.pre_prune);
  if (!c.pre_identifying)
    fail(ErrorCode::ConstructionFailed, std::string(family_name(f)) + ": chosen lines do not form an identifying code");
  c.code = prune(g, c.pre_prune, Property::Identifying);
  c.code_identifying = is_identifying(g, c.code);
  remove_point_and_projections(g, c, base, avoid);
  return c;
}

void require_field_q(const GqModel& m, std::uint32_t max_q, const char* what) {
  if (m.q > max_q)
    fail(ErrorCode::SizeGuard, std::string(what) + " construction limited to q <= " + std::to_string(max_q));
}

void require_family(const GqModel& m, const char* family) {
  if (m.graph.meta().family != family)
    fail(ErrorCode::BadParams, std::string("expected a ") + family + " model, got " + m.graph.meta().family);
}

}  // namespace

Construction code_t2star(const GqModel& m) {
  require_family(m, "gq-t2star");
  const std::uint32_t q = m.q;
  const auto& f = m.field;
  // Affine points (1, a, b, c) with fixed (a, c) form the line through N.
  auto line_at = [q](std::size_t a, std::size_t c) {
    Line l;
    for (std::size_t b = 0; b < q; ++b) l.push_back((a * q + b) * q + c);
    return l;
  };
  const pg::Coords nucleus{0, 0, 1, 0};
  const std::size_t slots = static_cast<std::size_t>(q) * q;
  for (std::size_t i = 0; i < slots; ++i)
    for (std::size_t j = i + 1; j < slots; ++j)
      for (std::size_t k = j + 1; k < slots; ++k) {
        std::vector<pg::Coords> rows{nucleus};
        for (auto s : {i, j, k})
          rows.push_back({1, static_cast<gf::Elem>(s / q), 0, static_cast<gf::Elem>(s % q)});
        if (pg::rank_of(*f, rows) != 4) continue;
        const long lq = q;
        return finish(m, Family::T2star, {line_at(i / q, i % q), line_at(j / q, j % q), line_at(k / q, k % q)}, 3 * lq,
                      3 * lq - 3, 0);
      }
  fail(ErrorCode::ConstructionFailed, "no three lines through the nucleus span PG(3,q)");
}

Construction code_parabolic(const GqModel& m) {
  require_family(m, "gq-parabolic");
  require_field_q(m, 5, "parabolic");
  const auto lines = families::gq_lines(m.graph);
  auto in_section = [&](const Line& l) {
    return std::all_of(l.begin(), l.end(), [&](std::size_t v) { return m.points[v].coords[0] == 0; });
  };
  std::vector<Line> grid;
  for (const auto& l : lines)
    if (in_section(l)) grid.push_back(l);

  std::vector<Line> chosen;
  for (const auto& l : grid)
    if (std::all_of(chosen.begin(), chosen.end(), [&](const Line& c) { return disjoint(c, l); })) {
      chosen.push_back(l);
      if (chosen.size() == 3) break;
    }
  if (chosen.size() < 3) fail(ErrorCode::ConstructionFailed, "hyperbolic section has no three disjoint lines");

  const Line l2 = chosen[2];
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t p = l2[i];
    auto it = std::find_if(lines.begin(), lines.end(), [&](const Line& l) { return contains(l, p) && !in_section(l); });
    if (it == lines.end()) fail(ErrorCode::ConstructionFailed, "no line leaves the section through P");
    chosen.push_back(*it);
  }
  const long lq = m.q;
  return finish(m, Family::Parabolic, std::move(chosen), 5 * lq + 3, 5 * lq - 2, 0, {l2[0], l2[1]});
}

Construction code_elliptic(const GqModel& m) {
  require_family(m, "gq-elliptic");
  require_field_q(m, 4, "elliptic");
  const auto& f = *m.field;
  const auto lines = families::gq_lines(m.graph);
  const std::size_t hyperbolic = static_cast<std::size_t>(m.q + 1) * (m.q + 1);
  const Line& l0 = lines.front();
  const auto l0_rows = coords_of(m, l0);

  // 3-spaces through l0 spanned with a second line skew to it; such a section
  // contains two skew lines, so it is hyperbolic exactly when it has (q+1)^2 points.
  struct Space {
    std::vector<pg::Coords> basis;
    VertexSet members;
  };
  std::vector<Space> spaces;
  for (const auto& l : lines) {
    if (!disjoint(l, l0)) continue;
    auto basis = l0_rows;
    for (auto& r : coords_of(m, l)) basis.push_back(r);
    if (pg::rank_of(f, basis) != 4) continue;
    Space s{basis, VertexSet(m.graph.n())};
    for (std::size_t v = 0; v < m.points.size(); ++v) {
      auto rows = basis;
      rows.push_back(m.points[v].coords);
      if (pg::rank_of(f, rows) == 4) s.members.set(v);
    }
    if (s.members.count() != hyperbolic) continue;
    if (std::any_of(spaces.begin(), spaces.end(), [&](const Space& o) { return o.members == s.members; })) continue;
    spaces.push_back(std::move(s));
  }

  auto pick_pair = [&](const Space& s) -> std::vector<Line> {
    std::vector<Line> picked;
    for (const auto& l : lines) {
      if (!std::all_of(l.begin(), l.end(), [&](std::size_t v) { return s.members.test(v); })) continue;
      if (!disjoint(l, l0)) continue;
      if (std::all_of(picked.begin(), picked.end(), [&](const Line& c) { return disjoint(c, l); })) {
        picked.push_back(l);
        if (picked.size() == 2) break;
      }
    }
    return picked;
  };

  for (std::size_t a = 0; a < spaces.size(); ++a)
    for (std::size_t b = a + 1; b < spaces.size(); ++b) {
      auto all = spaces[a].basis;
      for (auto& r : spaces[b].basis) all.push_back(r);
      if (pg::rank_of(f, all) != 6) continue;  // they must meet exactly in l0
      auto p1 = pick_pair(spaces[a]);
      auto p2 = pick_pair(spaces[b]);
      if (p1.size() < 2 || p2.size() < 2) continue;
      const long lq = m.q;
      return finish(m, Family::Elliptic, {l0, p1[0], p1[1], p2[0], p2[1]}, 5 * lq + 5, 5 * lq, 0);
    }
  fail(ErrorCode::ConstructionFailed, "no pair of hyperbolic 3-spaces meeting only in the first line");
}

Construction code_hermitian(const GqModel& m) {
  require_family(m, "gq-hermitian");
  require_field_q(m, 3, "hermitian");
  const auto lines = families::gq_lines(m.graph);
  const std::size_t L = lines.size();
  // Lex-first disjoint triple (L0, L1, L2) admitting two points of L0 each on a
  // further line that misses L1 and L2.
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j) {
      if (!disjoint(lines[i], lines[j])) continue;
      for (std::size_t k = j + 1; k < L; ++k) {
        if (!disjoint(lines[i], lines[k]) || !disjoint(lines[j], lines[k])) continue;
        const Line& l0 = lines[i];
        std::vector<Line> through;
        std::vector<std::size_t> feet;
        for (auto p : l0) {
          auto it = std::find_if(lines.begin(), lines.end(), [&](const Line& l) {
            return contains(l, p) && l != l0 && disjoint(l, lines[j]) && disjoint(l, lines[k]);
          });
          if (it != lines.end()) {
            through.push_back(*it);
            feet.push_back(p);
          }
          if (through.size() == 2) break;
        }
        if (through.size() < 2) continue;
        const long lq = m.q;
        return finish(m, Family::Hermitian, {l0, lines[j], lines[k], through[0], through[1]}, 5 * lq * lq + 3,
                      5 * lq * lq - 2, 1, feet);
      }
    }
  fail(ErrorCode::ConstructionFailed, "no admissible disjoint triple of lines");
}

Construction construct(Family f, const GqModel& m) {
  switch (f) {
    case Family::T2star: return code_t2star(m);
    case Family::Parabolic: return code_parabolic(m);
    case Family::Elliptic: return code_elliptic(m);
    case Family::Hermitian: return code_hermitian(m);
  }
  fail(ErrorCode::BadParams, "unknown quadrangle family");
}

Construction construct(Family f, std::uint32_t q) {
  // Check the construction guard before building a large model.
  if ((f == Family::Parabolic && q > 5) || (f == Family::Elliptic && q > 4) || (f == Family::Hermitian && q > 3))
    fail(ErrorCode::SizeGuard, std::string(family_name(f)) + " construction outside its size guard");
  return construct(f, build_model(f, q));
}

CoplanarityReport check_coplanarity_lemmas(const GqModel& m, Family f, std::size_t sample) {
  CoplanarityReport r;
  switch (f) {
    case Family::Parabolic: r.allowed_rank = 3; break;
    case Family::Elliptic: r.allowed_rank = 4; break;
    case Family::Hermitian: r.allowed_rank = 2; break;
    case Family::T2star: fail(ErrorCode::BadParams, "no coplanarity statement for T2*(O)");
  }
  const Graph& g = m.graph;
  const auto& field = *m.field;
  auto check = [&](std::size_t u, std::size_t v) {
    if (u == v || g.adjacent(u, v)) return;
    std::vector<pg::Coords> rows;
    (g.open_row(u) & g.open_row(v)).for_each([&](std::size_t w) { rows.push_back(m.points[w].coords); });
    r.max_rank = std::max(r.max_rank, pg::rank_of(field, rows));
    ++r.pairs_checked;
  };
  if (sample == 0) {
    for (std::size_t u = 0; u < g.n(); ++u)
      for (std::size_t v = u + 1; v < g.n(); ++v) check(u, v);
  } else {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> pick(0, g.n() - 1);
    for (std::size_t i = 0; i < sample; ++i) check(pick(rng), pick(rng));
  }
  return r;
}

}  // namespace idcode::gqcode
