#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"

namespace idcode::gqcode {

enum class Family { T2star, Parabolic, Elliptic, Hermitian };

const char* family_name(Family f) noexcept;
/// "t2star", "parabolic", "elliptic", "hermitian" (also with a "gq-" prefix).
Family parse_family(const std::string& s);

/// Builds the generalized-quadrangle graph of a family with its geometry.
families::GqModel build_model(Family f, std::uint32_t q);

struct Construction {
  Family family = Family::T2star;
  std::uint32_t q = 0;
  std::vector<std::vector<std::size_t>> lines;  // vertex lists of the chosen lines
  VertexSet pre_prune;  // union of the chosen lines
  VertexSet code;       // pruned
  // Union of the lines minus one point of a base line and its projections on
  // the other lines; empty when no point of the base line qualifies.
  VertexSet removal;
  std::vector<std::size_t> removed;
  bool pre_identifying = false;
  bool code_identifying = false;
  bool removal_identifying = false;
  long expected_pre_size = 0;  // 3q, 5q+3, 5q+5, 5q^2+3
  long target_size = 0;        // 3q-3, 5q-2, 5q, 5q^2-2
};

/**
 * Three lines through the nucleus N spanning PG(3,q), lex-first in the
 * (X1, X3) coordinates of their affine points. q = 2^k with 2 < q <= 16.
 */
Construction code_t2star(const families::GqModel& m);
/// Three disjoint lines of the hyperbolic section X0 = 0 and two lines leaving it
/// through distinct points of the third one. q <= 5.
Construction code_parabolic(const families::GqModel& m);
/// A line and two pairs of lines in two hyperbolic 3-spaces meeting only in it. q <= 4.
Construction code_elliptic(const families::GqModel& m);
/// Three disjoint lines L0, L1, L2 and lines M1, M2 through distinct points of
/// L0 missing L1 and L2. q <= 3.
Construction code_hermitian(const families::GqModel& m);

Construction construct(Family f, std::uint32_t q);
Construction construct(Family f, const families::GqModel& m);

struct CoplanarityReport {
  std::size_t pairs_checked = 0;
  std::size_t max_rank = 0;
  std::size_t allowed_rank = 0;  // 3 parabolic, 4 elliptic, 2 hermitian
  bool ok() const { return max_rank <= allowed_rank; }
};

/// Span rank of the common neighbours of non-adjacent pairs. All pairs when
/// sample == 0, otherwise that many pseudo-random pairs from a fixed seed.
CoplanarityReport check_coplanarity_lemmas(const families::GqModel& m, Family f, std::size_t sample = 0);

}  // namespace idcode::gqcode
