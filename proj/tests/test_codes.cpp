#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "codes.hpp"
#include "families.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace idcode;
namespace fam = idcode::families;

namespace {

VertexSet random_set(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  VertexSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) s.set(i);
  return s;
}

bool oracle_holds(const oracle::Adj& a, std::uint64_t mask, Property p) {
  switch (p) {
    case Property::Dominating: return oracle::dominating(a, mask);
    case Property::Separating: return oracle::separating(a, mask);
    case Property::Identifying: return oracle::identifying(a, mask);
    case Property::LocatingDominating: return oracle::locating_dominating(a, mask);
    case Property::Resolving: return oracle::resolving(oracle::distances(a), mask);
  }
  return false;
}

}  // namespace

TEST_CASE("verifiers agree with the definitions on random graphs and sets") {
  std::mt19937_64 rng(11);
  const Property props[] = {Property::Dominating, Property::Separating, Property::Identifying,
                            Property::LocatingDominating, Property::Resolving};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 12;
    const auto g = oracle::random_twin_free(n, 0.45, rng);
    const auto a = oracle::adjacency(g);
    const bool connected = is_connected(g);
    for (int k = 0; k < 15; ++k) {
      const auto s = random_set(n, 0.2 + 0.05 * k, rng);
      for (auto p : props) {
        if (p == Property::Resolving && !connected) continue;
        CAPTURE(property_name(p));
        const bool holds = satisfies(g, s, p);
        CHECK(holds == oracle_holds(a, oracle::mask_of(s), p));
        CHECK(witness_failure(g, s, p).has_value() == !holds);
      }
    }
  }
}

TEST_CASE("witnesses are lexicographically smallest") {
  const auto c7 = fam::cycle_power(7, 1);
  const auto w = witness_failure(c7, VertexSet(7), Property::Dominating);
  REQUIRE(w);
  CHECK(w->describe() == "undominated vertex 0");

  const auto k2 = fam::complete(2);
  const auto tw = witness_failure(k2, make_vertex_set(2, {0, 1}), Property::Identifying);
  REQUIRE(tw);
  CHECK(tw->twins);
  CHECK(tw->describe() == "twins 0,1");

  // C7 with code {0}: vertices 1..5 except 1 and 6 are undominated; 2 is first.
  const auto w2 = witness_failure(c7, make_vertex_set(7, {0}), Property::Identifying);
  REQUIRE(w2);
  CHECK(w2->kind == Witness::Kind::Undominated);
  CHECK(w2->u == 2);
  // Dominating but 1 and 6 both see only 0.
  const auto w3 = witness_failure(c7, make_vertex_set(7, {0, 3, 4}), Property::Identifying);
  REQUIRE(w3);
  CHECK(w3->kind == Witness::Kind::Unseparated);
  CHECK(w3->describe().find("unseparated pair") == 0);
}

TEST_CASE("hitting instance captures the identifying property") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + rng() % 10;
    const auto g = oracle::random_twin_free(n, 0.4, rng);
    const auto inst = build_hitting_instance(g);
    CHECK(inst.raw_constraints == n + n * (n - 1) / 2);
    for (int k = 0; k < 20; ++k) {
      const auto s = random_set(n, 0.5, rng);
      CHECK(inst.hits_all(s) == is_identifying(g, s));
    }
  }
  const auto c5 = build_hitting_instance(fam::cycle_power(5, 1));
  CHECK(c5.raw_constraints == 15);
  CHECK(error_code_of([] { build_hitting_instance(fam::complete(2)); }) == ErrorCode::TwinsPresent);
}

TEST_CASE("each property's instance matches its verifier") {
  std::mt19937_64 rng(9);
  const Property props[] = {Property::Dominating, Property::Separating, Property::LocatingDominating,
                            Property::Resolving};
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + rng() % 7;
    const auto g = oracle::random_twin_free(n, 0.5, rng);
    if (!is_connected(g)) continue;
    for (auto p : props) {
      const auto inst = build_instance(g, p);
      for (int k = 0; k < 20; ++k) {
        const auto s = random_set(n, 0.45, rng);
        CHECK(inst.hits_all(s) == satisfies(g, s, p));
      }
    }
  }
}

TEST_CASE("supersets of identifying codes are identifying") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 6 + rng() % 10;
    const auto g = oracle::random_twin_free(n, 0.4, rng);
    VertexSet all(n);
    all.fill();
    const auto code = prune(g, all, Property::Identifying);
    REQUIRE(is_identifying(g, code));
    for (int k = 0; k < 10; ++k) CHECK(is_identifying(g, code | random_set(n, 0.3, rng)));
  }
}

TEST_CASE("prune reaches an inclusion-minimal set") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 6 + rng() % 10;
    const auto g = oracle::random_twin_free(n, 0.45, rng);
    VertexSet all(n);
    all.fill();
    for (auto p : {Property::Identifying, Property::Dominating, Property::LocatingDominating}) {
      const auto s = prune(g, all, p);
      CHECK(satisfies(g, s, p));
      for (std::size_t v : s.members()) {
        auto smaller = s;
        smaller.reset(v);
        CHECK_FALSE(satisfies(g, smaller, p));
      }
    }
  }
  CHECK(error_code_of([] {
          prune(fam::cycle_power(7, 1), VertexSet(7), Property::Identifying);
        }) == ErrorCode::PropertyViolated);
}

TEST_CASE("property names parse") {
  CHECK(parse_property("id") == Property::Identifying);
  CHECK(parse_property("locating-dominating") == Property::LocatingDominating);
  CHECK(parse_property("res") == Property::Resolving);
  CHECK(error_code_of([] { parse_property("nope"); }) == ErrorCode::BadParams);
}
