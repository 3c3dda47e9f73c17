#include "pg.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace idcode::pg {

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i];
  }
  os << ')';
  return os.str();
}

bool normalize_in_place(const gf::FieldSpec& f, Coords& v) noexcept {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) return false;
  if (v[lead] != 1) {
    const Elem s = f.inv(v[lead]);
    for (std::size_t i = lead; i < v.size(); ++i) v[i] = f.mul(v[i], s);
  }
  return true;
}

ProjPoint normalize(const FieldPtr& field, Coords v) {
  if (!normalize_in_place(*field, v)) fail(ErrorCode::BadParams, "zero vector is not a projective point");
  return {field, std::move(v)};
}

std::uint64_t point_key(const gf::FieldSpec& f, const Coords& v) noexcept {
  std::uint64_t key = 0;
  for (auto c : v) key = key * f.q() + c;
  return key;
}

std::uint64_t num_points(std::uint32_t n, std::uint32_t q) noexcept {
  std::uint64_t total = 0, pw = 1;
  for (std::uint32_t i = 0; i <= n; ++i) {
    total += pw;
    pw *= q;
  }
  return total;
}

std::vector<ProjPoint> enumerate_points(std::uint32_t n, const FieldPtr& field) {
  const std::uint32_t q = field->q();
  if (n > 5 || q > 16)
    fail(ErrorCode::SizeGuard, "PG(" + std::to_string(n) + "," + std::to_string(q) + ") exceeds the size guard");
  std::vector<ProjPoint> out;
  out.reserve(num_points(n, q));
  // Leading 1 at position `lead`; larger lead means more leading zeros and
  // therefore a lexicographically smaller vector.
  for (std::uint32_t lead = n + 1; lead-- > 0;) {
    const std::uint32_t free = n - lead;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < free; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coords c(n + 1, 0);
      c[lead] = 1;
      std::uint64_t t = idx;
      for (std::uint32_t i = n + 1; i-- > lead + 1;) {
        c[i] = static_cast<Elem>(t % q);
        t /= q;
      }
      out.push_back({field, std::move(c)});
    }
  }
  return out;
}

LineSet line_through(const ProjPoint& a, const ProjPoint& b) {
  if (a.field != b.field || a.coords.size() != b.coords.size())
    fail(ErrorCode::SpecMismatch, "points from different spaces");
  if (a == b) fail(ErrorCode::EqualPoints, "a line needs two distinct points");
  const auto& f = *a.field;
  LineSet line{{}, a, b};
  line.points.push_back(a);
  for (Elem t = 0; t < f.q(); ++t) {
    Coords c(b.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(b.coords[i], f.mul(t, a.coords[i]));
    line.points.push_back(normalize(a.field, std::move(c)));
  }
  std::sort(line.points.begin(), line.points.end());
  return line;
}

std::size_t rank_of(const gf::FieldSpec& f, std::vector<Coords> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Elem s = f.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(x, s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Elem m = rows[r][col];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(m, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::size_t span_rank(const std::vector<ProjPoint>& points) {
  if (points.empty()) fail(ErrorCode::BadParams, "span_rank of an empty point list");
  std::vector<Coords> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(p.coords);
  return rank_of(*points[0].field, std::move(rows));
}

Elem FormSpec::eval(const Coords& x) const {
  const auto& f = *field;
  Elem acc = 0;
  if (kind == Kind::Hermitian) {
    for (auto xi : x) acc = f.add(acc, f.pow(xi, base_q + 1));
    return acc;
  }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      if (coef[i][j]) acc = f.add(acc, f.mul(coef[i][j], f.mul(x[i], x[j])));
  return acc;
}

Elem FormSpec::polar(const Coords& x, const Coords& y) const {
  const auto& f = *field;
  Elem acc = 0;
  if (kind == Kind::Hermitian) {
    for (std::size_t i = 0; i <= n; ++i) acc = f.add(acc, f.mul(x[i], f.pow(y[i], base_q)));
    return acc;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (coef[i][i]) acc = f.add(acc, f.mul(f.add(coef[i][i], coef[i][i]), f.mul(x[i], y[i])));
    for (std::size_t j = i + 1; j <= n; ++j)
      if (coef[i][j])
        acc = f.add(acc, f.mul(coef[i][j], f.add(f.mul(x[i], y[j]), f.mul(x[j], y[i]))));
  }
  return acc;
}

namespace {

FormSpec empty_quadratic(const FieldPtr& field, std::uint32_t n, std::string name) {
  FormSpec form;
  form.kind = FormSpec::Kind::Quadratic;
  form.n = n;
  form.field = field;
  form.coef.assign(n + 1, std::vector<Elem>(n + 1, 0));
  form.name = std::move(name);
  return form;
}

}  // namespace

FormSpec parabolic_form(const FieldPtr& field) {
  auto form = empty_quadratic(field, 4, "parabolic Q(4,q)");
  form.coef[0][0] = 1;
  form.coef[1][2] = 1;
  form.coef[3][4] = 1;
  return form;
}

Elem elliptic_d(const gf::FieldSpec& f) {
  for (Elem d = 0; d < f.q(); ++d) {
    bool has_root = false;
    for (Elem y = 0; y < f.q() && !has_root; ++y)
      has_root = f.add(d, f.add(y, f.mul(y, y))) == 0;
    if (!has_root) return d;
  }
  fail(ErrorCode::Internal, "no irreducible binary quadratic form found");
}

FormSpec elliptic_form(const FieldPtr& field) {
  auto form = empty_quadratic(field, 5, "elliptic Q-(5,q)");
  form.coef[0][0] = elliptic_d(*field);
  form.coef[0][1] = 1;
  form.coef[1][1] = 1;
  form.coef[2][3] = 1;
  form.coef[4][5] = 1;
  return form;
}

FormSpec hermitian_form(const FieldPtr& field_q2, std::uint32_t base_q) {
  if (static_cast<std::uint64_t>(base_q) * base_q != field_q2->q())
    fail(ErrorCode::OrderMismatch, "Hermitian form needs a field of order base_q^2");
  FormSpec form;
  form.kind = FormSpec::Kind::Hermitian;
  form.n = 3;
  form.field = field_q2;
  form.base_q = base_q;
  form.name = "Hermitian H(3,q^2)";
  return form;
}

std::vector<ProjPoint> variety_points(const FormSpec& form) {
  auto all = enumerate_points(form.n, form.field);
  std::vector<ProjPoint> out;
  for (auto& p : all)
    if (form.eval(p.coords) == 0) out.push_back(std::move(p));
  return out;
}

bool collinear_on_variety(const FormSpec& form, const ProjPoint& a, const ProjPoint& b) {
  if (a == b) fail(ErrorCode::EqualPoints, "collinearity needs two distinct points");
  if (form.eval(a.coords) != 0 || form.eval(b.coords) != 0)
    fail(ErrorCode::NotOnVariety, "point not on the variety");
  return form.polar(a.coords, b.coords) == 0;
}

bool line_on_variety(const FormSpec& form, const ProjPoint& a, const ProjPoint& b) {
  for (const auto& p : line_through(a, b).points)
    if (form.eval(p.coords) != 0) return false;
  return true;
}

Hyperconic hyperconic(const FieldPtr& field) {
  if (field->p() != 2) fail(ErrorCode::OddCharacteristic, "hyperconic needs even characteristic");
  const auto& f = *field;
  Hyperconic h{{}, normalize(field, {0, 0, 1, 0})};
  for (const auto& p : enumerate_points(3, field)) {
    if (p.coords[0] != 0) continue;
    const auto& c = p.coords;
    if (f.sub(f.mul(c[1], c[3]), f.mul(c[2], c[2])) == 0) h.conic.push_back(p);
  }
  return h;
}

PointIndex::PointIndex(const std::vector<ProjPoint>& points) {
  if (points.empty()) return;
  field_ = points[0].field.get();
  map_.reserve(points.size() * 2);
  for (std::size_t i = 0; i < points.size(); ++i)
    map_.emplace(point_key(*field_, points[i].coords), static_cast<long>(i));
}

long PointIndex::find(const Coords& canonical) const {
  if (!field_) return -1;
  auto it = map_.find(point_key(*field_, canonical));
  return it == map_.end() ? -1 : it->second;
}

}  // namespace idcode::pg
