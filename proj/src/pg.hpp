#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace idcode::pg {

using gf::Elem;
using gf::FieldPtr;
using Coords = std::vector<Elem>;

/// A point of PG(n, q) in canonical form: leftmost nonzero coordinate is 1.
struct ProjPoint {
  FieldPtr field;
  Coords coords;

  std::size_t dim() const noexcept { return coords.size() - 1; }
  std::string to_string() const;

  bool operator==(const ProjPoint& o) const noexcept {
    return field == o.field && coords == o.coords;
  }
  bool operator<(const ProjPoint& o) const noexcept { return coords < o.coords; }
};

/// Canonicalizes a nonzero vector. Throws BadParams on the zero vector.
ProjPoint normalize(const FieldPtr& field, Coords v);
/// In-place variant on raw coordinates; returns false for the zero vector.
bool normalize_in_place(const gf::FieldSpec& f, Coords& v) noexcept;

/// Packs canonical coordinates into one integer (base-q digits); used as a
/// hash key for point lookup.
std::uint64_t point_key(const gf::FieldSpec& f, const Coords& v) noexcept;

/// Number of points of PG(n, q): (q^{n+1} - 1) / (q - 1).
std::uint64_t num_points(std::uint32_t n, std::uint32_t q) noexcept;

/// All points of PG(n, q), lexicographic in canonical coordinates.
/// Guard: n <= 5 and q <= 16 (SizeGuard otherwise).
std::vector<ProjPoint> enumerate_points(std::uint32_t n, const FieldPtr& field);

/// q + 1 points of a projective line plus its defining pair.
struct LineSet {
  std::vector<ProjPoint> points;  // sorted
  ProjPoint a, b;
};

LineSet line_through(const ProjPoint& a, const ProjPoint& b);

/// Rank over GF(q) of the coordinate matrix whose rows are the points.
std::size_t span_rank(const std::vector<ProjPoint>& points);
std::size_t rank_of(const gf::FieldSpec& f, std::vector<Coords> rows);

/**
 * A quadratic form Q(x) = sum_{i<=j} c_ij x_i x_j (upper-triangular
 * coefficients) or the diagonal Hermitian form sum_i x_i^{base_q + 1} over
 * GF(base_q^2). The polar pairing is B(x,y) = Q(x+y) - Q(x) - Q(y) for
 * quadrics and sum_i x_i conj(y_i) for the Hermitian case.
 */
struct FormSpec {
  enum class Kind { Quadratic, Hermitian };

  Kind kind = Kind::Quadratic;
  std::uint32_t n = 0;  // ambient projective dimension
  FieldPtr field;
  std::vector<std::vector<Elem>> coef;  // quadratic only, (n+1) x (n+1), i <= j used
  std::uint32_t base_q = 0;             // hermitian only
  std::string name;

  Elem eval(const Coords& x) const;
  Elem polar(const Coords& x, const Coords& y) const;
};

/// X0^2 + X1 X2 + X3 X4 in PG(4, q).
FormSpec parabolic_form(const FieldPtr& field);
/// d X0^2 + X0 X1 + X1^2 + X2 X3 + X4 X5 in PG(5, q), d the smallest element
/// making the binary part irreducible.
FormSpec elliptic_form(const FieldPtr& field);
/// Smallest d (by element index) with d X^2 + X Y + Y^2 irreducible over GF(q).
Elem elliptic_d(const gf::FieldSpec& f);
/// X0^{q+1} + X1^{q+1} + X2^{q+1} + X3^{q+1} in PG(3, q^2); field has order q^2.
FormSpec hermitian_form(const FieldPtr& field_q2, std::uint32_t base_q);

/// Points with form value 0, lexicographic.
std::vector<ProjPoint> variety_points(const FormSpec& form);

/// Collinearity of two distinct variety points via the polar pairing.
/// Throws EqualPoints for a == b and NotOnVariety if either point is off it.
bool collinear_on_variety(const FormSpec& form, const ProjPoint& a, const ProjPoint& b);

/// Explicit check: every point of line ab lies on the variety. O(q).
bool line_on_variety(const FormSpec& form, const ProjPoint& a, const ProjPoint& b);

/// Conic X1 X3 - X2^2 = 0 in the plane X0 = 0 of PG(3, q), q even, plus its
/// nucleus (0,0,1,0). Throws OddCharacteristic for odd q.
struct Hyperconic {
  std::vector<ProjPoint> conic;
  ProjPoint nucleus;
};
Hyperconic hyperconic(const FieldPtr& field);

/// Lookup table from canonical coordinates to position in a point list.
class PointIndex {
 public:
  PointIndex() = default;
  explicit PointIndex(const std::vector<ProjPoint>& points);
  /// -1 when absent.
  long find(const Coords& canonical) const;

 private:
  const gf::FieldSpec* field_ = nullptr;
  std::unordered_map<std::uint64_t, long> map_;
};

}  // namespace idcode::pg
