#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqcode.hpp"
#include "rational.hpp"

namespace idcode {

/// One row of the quadrangle results table, every cell computed live.
struct Table2Row {
  gqcode::Family family = gqcode::Family::T2star;
  std::string name;  // "T2*(O)", "Q(4,q)", ...
  std::uint32_t q = 0;
  long s = 0, t = 0;

  long n = 0, n_formula = 0;
  long pre_size = 0, pre_formula = 0;
  long removal_size = 0;  // lines minus a point and its projections
  long upper_formula = 0;
  long pruned_size = 0;
  bool codes_verified = false;  // pre-prune, removal and pruned sets all identifying

  long lower_printed = 0;        // family lower bound as stated
  bool lower_printed_valid = false;  // the stated bound follows at this q
  std::optional<long> discharging;
  long best_lower = 0;               // largest applicable lower bound in the report
  Rational frac;
  std::string order;  // "n^(1/3)", ...
  double order_exponent = 0.0;

  bool formulas_ok() const;    // n, pre-prune and removal sizes match their formulas
  bool bounds_consistent() const;  // printed lower bound <= best verified code
  bool ok() const { return formulas_ok() && codes_verified && pruned_size <= upper_formula && bounds_consistent(); }
};

/// Rows T2*(O) q=4, Q(4,q) q=2,3, Q-(5,q) q=2, H(3,q^2) q=2.
std::vector<Table2Row> compute_table2();
Table2Row compute_table2_row(gqcode::Family f, std::uint32_t q);

}  // namespace idcode
