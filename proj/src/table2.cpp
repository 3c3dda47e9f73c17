#include "table2.hpp"

#include <algorithm>

#include "bounds.hpp"
#include "codes.hpp"

namespace idcode {

bool Table2Row::formulas_ok() const {
  return n == n_formula && pre_size == pre_formula && removal_size == upper_formula;
}

bool Table2Row::bounds_consistent() const {
  const long best_code = std::min(pruned_size, removal_size);
  return lower_printed <= best_code && best_lower <= best_code;
}

Table2Row compute_table2_row(gqcode::Family f, std::uint32_t q) {
  Table2Row row;
  row.family = f;
  row.q = q;
  const long lq = q;
  switch (f) {
    case gqcode::Family::T2star:
      row.name = "T2*(O)";
      row.s = lq - 1, row.t = lq + 1;
      row.n_formula = lq * lq * lq;
      row.order = "n^(1/3)", row.order_exponent = 1.0 / 3;
      break;
    case gqcode::Family::Parabolic:
      row.name = "Q(4,q)";
      row.s = lq, row.t = lq;
      row.n_formula = (lq * lq + 1) * (lq + 1);
      row.order = "n^(1/3)", row.order_exponent = 1.0 / 3;
      break;
    case gqcode::Family::Elliptic:
      row.name = "Q-(5,q)";
      row.s = lq, row.t = lq * lq;
      row.n_formula = (lq * lq * lq + 1) * (lq + 1);
      row.order = "n^(1/4)", row.order_exponent = 1.0 / 4;
      break;
    case gqcode::Family::Hermitian:
      row.name = "H(3,q^2)";
      row.s = lq * lq, row.t = lq;
      row.n_formula = (lq * lq * lq + 1) * (lq * lq + 1);
      row.order = "n^(2/5)", row.order_exponent = 2.0 / 5;
      break;
  }

  const auto model = gqcode::build_model(f, q);
  const Graph& g = model.graph;
  const auto c = gqcode::construct(f, model);
  row.n = static_cast<long>(g.n());
  row.pre_size = static_cast<long>(c.pre_prune.count());
  row.pre_formula = c.expected_pre_size;
  row.removal_size = c.removal_identifying ? static_cast<long>(c.removal.count()) : -1;
  row.upper_formula = c.target_size;
  row.pruned_size = static_cast<long>(c.code.count());
  row.codes_verified = c.pre_identifying && c.code_identifying && c.removal_identifying &&
                       is_identifying(g, c.pre_prune) && is_identifying(g, c.code) && is_identifying(g, c.removal);

  const std::string family = g.meta().family;
  auto fb = bounds::family_bounds(family, lq);
  row.lower_printed = fb->lower;
  row.lower_printed_valid = fb->lower_follows;
  row.discharging = bounds::lb_discharging(g.n(), degrees(g).second);
  const auto rep = bounds::report(g);
  row.best_lower = rep.best_lower();
  row.frac = rep.frac_value.value_or(Rational(0));
  return row;
}

std::vector<Table2Row> compute_table2() {
  using gqcode::Family;
  return {compute_table2_row(Family::T2star, 4), compute_table2_row(Family::Parabolic, 2),
          compute_table2_row(Family::Parabolic, 3), compute_table2_row(Family::Elliptic, 2),
          compute_table2_row(Family::Hermitian, 2)};
}

}  // namespace idcode
