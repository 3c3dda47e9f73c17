#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bounds.hpp"
#include "codes.hpp"
#include "families.hpp"
#include "gqcode.hpp"
#include "solve.hpp"
#include "test_support.hpp"

using namespace idcode;
namespace fam = idcode::families;

TEST_CASE("simple lower bounds") {
  CHECK(bounds::lb_log(7) == 3);
  CHECK(bounds::lb_log(8) == 4);
  CHECK(bounds::lb_log(1) == 1);
  CHECK(bounds::lb_degree(64, 18) == 7);
  CHECK(bounds::lb_degree(10, 4) == 4);
  CHECK(bounds::lb_degree(8, 3) == 4);
  CHECK(bounds::lb_degree_counting(8, 2) == 4);
  CHECK(bounds::lb_degree_counting(64, 18) == 7);
  // 6n <= c^2 + (2k+5)c by direct search.
  for (std::size_t n : {27u, 64u, 512u, 4096u})
    for (std::size_t k : {4u, 10u, 40u, 300u}) {
      long c = 0;
      while (static_cast<long long>(c) * c + (2LL * k + 5) * c < 6LL * n) ++c;
      const auto got = bounds::lb_discharging(n, k);
      if (c <= static_cast<long>(k) - 1)
        CHECK(got == c);
      else
        CHECK_FALSE(got.has_value());
    }
}

TEST_CASE("discharging values for GQ(q-1,q+1)") {
  auto at = [](long q) { return bounds::lb_discharging(q * q * q, (q - 1) * (q + 2)); };
  CHECK(at(8) == 19);
  CHECK(at(16) == 42);
  CHECK(at(32) == 90);
  CHECK(at(64) == 3 * 64 - 7);
  CHECK(bounds::t2star_lower_bound(4) == 9);
  CHECK(bounds::t2star_lower_bound(8) == 19);
  CHECK(bounds::t2star_lower_bound(64) == 185);
}

TEST_CASE("stated family bounds and where they follow") {
  for (long q = 2; q <= 16; ++q) CHECK(bounds::family_lower_bound_follows("gq-parabolic", q));
  for (long q : {2L, 3L, 4L}) CHECK(bounds::family_lower_bound_follows("gq-hermitian", q));
  CHECK_FALSE(bounds::family_lower_bound_follows("gq-elliptic", 2));
  CHECK_FALSE(bounds::family_lower_bound_follows("gq-elliptic", 4));
  CHECK(bounds::family_lower_bound_follows("gq-elliptic", 5));
  CHECK_FALSE(bounds::family_bounds("cycle", 5).has_value());
  const auto fb = bounds::family_bounds("gq-hermitian", 2);
  REQUIRE(fb);
  CHECK(fb->lower == 6);
  CHECK(fb->upper == 18);
  CHECK(fb->upper_basis.find("5q^2-2") != std::string::npos);
}

TEST_CASE("report on the T2*(O) graph for q = 4") {
  const auto g = fam::gq_t2star(4).graph;
  const auto r = bounds::report(g);
  CHECK(r.best_lower() == 9);
  CHECK(r.best_upper() == 9);
  CHECK(r.consistent());
  REQUIRE(r.frac_value);
  CHECK(*r.frac_value == Rational(64, 19));
  REQUIRE(r.gq_info);
  CHECK(r.gq_info->bracket_ok == true);
}

TEST_CASE("report on H(3,4) includes 2q^2-2") {
  const auto r = bounds::report(fam::gq_hermitian(2).graph);
  bool found = false;
  for (const auto& e : r.lower_bounds) found = found || (e.name == "family" && e.applicable && e.value == 6);
  CHECK(found);
  CHECK(r.consistent());
}

TEST_CASE("report marks the elliptic bound inapplicable at q = 2") {
  const auto g = fam::gq_elliptic(2).graph;
  const auto r = bounds::report(g);
  for (const auto& e : r.lower_bounds)
    if (e.name == "family") CHECK_FALSE(e.applicable);
  CHECK(r.best_lower() <= exact_min(g, Property::Identifying).optimum);
}

TEST_CASE("report skips bounds on graphs with twins") {
  const auto r = bounds::report(fam::complete(4));
  CHECK_FALSE(r.twin_free);
  for (const auto& e : r.lower_bounds) CHECK_FALSE(e.applicable);
}

TEST_CASE("fractional bracket on quadrangles with s, t > 1") {
  struct P {
    long s, t;
  };
  for (auto p : {P{2, 2}, P{3, 3}, P{4, 4}, P{5, 5}, P{2, 4}, P{3, 9}, P{4, 16}, P{4, 2}, P{9, 3}, P{16, 4}, P{3, 5},
                 P{7, 9}, P{15, 17}}) {
    const auto a = bounds::gq_analysis(p.s, p.t, true);
    REQUIRE(a.frac);
    CHECK(a.bracket_ok == true);
    const double f = a.frac->to_double(), n = static_cast<double>(a.n);
    CHECK(std::pow(2.0, -1.25) * std::pow(n, 0.25) <= f);
    CHECK(f <= 2.0 * std::pow(n, 0.4));
  }
  for (auto m : {fam::gq_t2star(4), fam::gq_parabolic(3), fam::gq_elliptic(2), fam::gq_hermitian(2)}) {
    const auto gq = *m.graph.meta().claimed_gq;
    CHECK(bounds::gq_analysis(gq.s, gq.t, true).frac == frac_closed_form(m.graph));
  }
}

TEST_CASE("constructions reproduce the table sizes") {
  using gqcode::Family;
  struct Row {
    Family f;
    std::uint32_t q;
    long pre, target;
  };
  for (auto r : {Row{Family::T2star, 4, 12, 9}, Row{Family::T2star, 8, 24, 21}, Row{Family::Parabolic, 2, 13, 8},
                 Row{Family::Parabolic, 3, 18, 13}, Row{Family::Parabolic, 4, 23, 18},
                 Row{Family::Parabolic, 5, 28, 23}, Row{Family::Elliptic, 2, 15, 10},
                 Row{Family::Elliptic, 3, 20, 15}, Row{Family::Hermitian, 2, 23, 18},
                 Row{Family::Hermitian, 3, 48, 43}}) {
    CAPTURE(gqcode::family_name(r.f));
    CAPTURE(r.q);
    const auto m = gqcode::build_model(r.f, r.q);
    const auto c = gqcode::construct(r.f, m);
    CHECK(static_cast<long>(c.pre_prune.count()) == r.pre);
    CHECK(c.expected_pre_size == r.pre);
    CHECK(is_identifying(m.graph, c.pre_prune));
    CHECK(is_identifying(m.graph, c.code));
    CHECK(is_identifying(m.graph, c.removal));
    CHECK(static_cast<long>(c.removal.count()) == r.target);
    CHECK(static_cast<long>(c.code.count()) <= r.target);
    CHECK(c.code.is_subset_of(c.pre_prune));
  }
  CHECK(error_code_of([] { gqcode::construct(gqcode::Family::Hermitian, 4); }) == ErrorCode::SizeGuard);
  CHECK(error_code_of([] { gqcode::parse_family("orthogonal"); }) == ErrorCode::BadParams);
}

TEST_CASE("coplanarity of common neighbours, exhaustive at the smallest order") {
  using gqcode::Family;
  for (auto f : {Family::Parabolic, Family::Elliptic, Family::Hermitian}) {
    const auto m = gqcode::build_model(f, 2);
    const auto rep = gqcode::check_coplanarity_lemmas(m, f);
    CAPTURE(gqcode::family_name(f));
    CHECK(rep.pairs_checked > 0);
    CHECK(rep.ok());
  }
  const auto m3 = gqcode::build_model(Family::Parabolic, 3);
  CHECK(gqcode::check_coplanarity_lemmas(m3, Family::Parabolic, 200).ok());
}

TEST_CASE("the k+1 degree form is not used as a bound") {
  // C8: 2n/(k+1) would claim 6, yet an identifying code of size 4 exists.
  const auto c8 = fam::cycle_power(8, 1);
  CHECK(bounds::lb_degree(8, 2) == 6);
  CHECK(exact_min(c8, Property::Identifying).optimum == 4);
  const auto r = bounds::report(c8);
  CHECK(r.best_lower() <= 4);
  for (const auto& e : r.lower_bounds)
    if (e.name == "degree-k+1") CHECK_FALSE(e.applicable);
}

TEST_CASE("reported bounds bracket the exact optimum") {
  std::vector<Graph> graphs = {fam::cycle_power(7, 1), fam::cycle_power(10, 1), fam::cycle_power(11, 2),
                               fam::petersen(),        fam::paley(13),         fam::clique_cartesian(3, 4),
                               fam::hypercube_power(4, 1), fam::johnson2(5),   fam::gq_parabolic(2).graph};
  for (const auto& g : graphs) {
    CAPTURE(g.meta().family);
    const auto r = bounds::report(g);
    const long opt = exact_min(g, Property::Identifying).optimum;
    CHECK(r.best_lower() <= opt);
    CHECK(opt <= r.best_upper());
  }
}
