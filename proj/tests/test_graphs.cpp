#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "bounds.hpp"
#include "families.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace idcode;
namespace fam = idcode::families;

TEST_CASE("bitset operations") {
  DynamicBitset a(130), b(130);
  for (std::size_t i : {0u, 5u, 64u, 129u}) a.set(i);
  for (std::size_t i : {5u, 63u, 64u}) b.set(i);
  CHECK(a.count() == 4);
  CHECK(a.intersection_count(b) == 2);
  CHECK(a.xor_count(b) == 3);
  CHECK((a ^ b).count() == 3);
  CHECK((a & b).members() == std::vector<std::size_t>{5, 64});
  CHECK((a | b).count() == 5);
  CHECK(a.find_first() == 0);
  CHECK(a.find_next(5) == 5);
  CHECK(a.find_next(6) == 64);
  CHECK((a & b).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  DynamicBitset c = a;
  c.reset(0);
  CHECK(c.count() == 3);
  CHECK(c != a);
}

TEST_CASE("graph text format round-trips") {
  const auto g = fam::petersen();
  std::stringstream ss;
  write_graph(g, ss);
  const auto h = read_graph(ss);
  CHECK(h == g);
  CHECK(h.num_edges() == 15);

  std::istringstream bad_header("x y\n");
  CHECK(error_code_of([&] { read_graph(bad_header); }) == ErrorCode::Parse);
  std::istringstream short_edges("3 2\n0 1\n");
  CHECK(error_code_of([&] { read_graph(short_edges); }) == ErrorCode::Parse);
  std::istringstream loop("2 1\n1 1\n");
  CHECK(error_code_of([&] { read_graph(loop); }) == ErrorCode::Parse);

  std::stringstream sets;
  write_vertex_set(make_vertex_set(10, {1, 4, 7}), sets);
  CHECK(read_vertex_sets(sets, 10).front().members() == std::vector<std::size_t>{1, 4, 7});
  std::istringstream out_of_range("3 12\n");
  CHECK(error_code_of([&] { read_vertex_sets(out_of_range, 10); }).has_value());
}

TEST_CASE("pair scans agree with brute force on random graphs, any thread count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 25;
    oracle::Adj a(n, std::vector<bool>(n, false));
    std::bernoulli_distribution coin(0.4);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (coin(rng)) a[u][v] = a[v][u] = true;
    const auto g = oracle::from_adjacency(a);
    for (std::size_t threads : {1u, 3u}) {
      set_scan_threads(threads);
      CHECK(min_symdiff(g) == oracle::min_symdiff(a));
      CHECK(has_twins(g) == !oracle::twin_free(a));
      CHECK(check_srg(g) == oracle::srg(a));
    }
    set_scan_threads(1);
    const auto d = oracle::distances(a);
    bool connected = true;
    for (auto x : d[0]) connected = connected && x >= 0;
    CHECK(is_connected(g) == connected);
    if (connected) CHECK(distance_matrix(g) == d);
  }
}

TEST_CASE("basic families") {
  CHECK(fam::complete(6).num_edges() == 15);
  CHECK(fam::path(6).num_edges() == 5);
  const auto c = fam::cycle_power(9, 2);
  CHECK(degrees(c) == std::pair<std::size_t, std::size_t>{4, 4});
  CHECK(fam::hypercube_power(4, 1).num_edges() == 32);
  CHECK(degrees(fam::hypercube_power(4, 2)).first == 10);
  CHECK(error_code_of([] { fam::hypercube_power(15, 1); }) == ErrorCode::SizeGuard);
  CHECK(error_code_of([] { fam::cycle_power(5, 2); }) == ErrorCode::BadParams);
  CHECK(error_code_of([] { fam::paley(7); }) == ErrorCode::BadParams);

  CHECK(check_srg(fam::paley(13)) == SrgParams{13, 6, 2, 3});
  CHECK(check_srg(fam::paley(9)) == SrgParams{9, 4, 1, 2});
  CHECK(check_srg(fam::petersen()) == SrgParams{10, 3, 0, 1});
  CHECK(check_srg(fam::kneser2(7)) == SrgParams{21, 10, 3, 6});
  CHECK(check_srg(fam::johnson2(6)) == SrgParams{15, 8, 4, 4});
  CHECK(check_srg(fam::clique_cartesian(4, 4)) == SrgParams{16, 6, 2, 2});
  CHECK(check_srg(fam::clique_direct(4, 4)) == SrgParams{16, 9, 4, 6});
  CHECK(fam::clique_cartesian(3, 5).n() == 15);
}

TEST_CASE("products") {
  const auto p3 = fam::path(3), k2 = fam::complete(2);
  const auto box = fam::cartesian(p3, k2);
  CHECK(box.n() == 6);
  CHECK(box.num_edges() == 7);
  const auto cross = fam::direct(p3, k2);
  CHECK(cross.num_edges() == 4);
  const auto lex = fam::lexicographic(p3, k2);
  CHECK(lex.num_edges() == 3 + 2 * 4);
  // K3 x K3 in the Cartesian sense equals the clique-cartesian family.
  CHECK(check_srg(fam::cartesian(fam::complete(3), fam::complete(3))) == check_srg(fam::clique_cartesian(3, 3)));
}

namespace {

struct GqCase {
  const char* name;
  std::uint32_t q;
  long s, t;
};

fam::GqModel build(const std::string& name, std::uint32_t q) {
  if (name == "t2star") return fam::gq_t2star(q);
  if (name == "parabolic") return fam::gq_parabolic(q);
  if (name == "elliptic") return fam::gq_elliptic(q);
  return fam::gq_hermitian(q);
}

}  // namespace

TEST_CASE("quadrangle point counts and strong regularity") {
  const GqCase cases[] = {{"t2star", 4, 3, 5},      {"t2star", 8, 7, 9},      {"parabolic", 2, 2, 2},
                          {"parabolic", 3, 3, 3},   {"parabolic", 4, 4, 4},   {"parabolic", 5, 5, 5},
                          {"elliptic", 2, 2, 4},    {"elliptic", 3, 3, 9},    {"hermitian", 2, 4, 2},
                          {"hermitian", 3, 9, 3}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    CAPTURE(c.q);
    const auto m = build(c.name, c.q);
    const long n = (c.s * c.t + 1) * (c.s + 1);
    CHECK(static_cast<long>(m.graph.n()) == n);
    CHECK(check_srg(m.graph) == SrgParams{n, c.s * (c.t + 1), c.s - 1, c.t + 1});
    CHECK(m.graph.meta().claimed_gq == GqParams{c.s, c.t});
  }
}

TEST_CASE("quadrangle axioms at the smallest order of each family") {
  const GqCase cases[] = {{"t2star", 4, 3, 5}, {"parabolic", 2, 2, 2}, {"elliptic", 2, 2, 4}, {"hermitian", 2, 4, 2}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto m = build(c.name, c.q);
    const auto rep = fam::check_gq_axioms(m.graph, c.s, c.t);
    CHECK(rep.ok());
    CHECK(static_cast<long>(rep.num_lines) == (c.s * c.t + 1) * (c.t + 1));
  }
}

TEST_CASE("srg symmetric-difference formula equals brute force") {
  std::vector<Graph> graphs = {fam::petersen(), fam::paley(5), fam::paley(9), fam::paley(13), fam::paley(17),
                               fam::kneser2(6), fam::kneser2(7), fam::johnson2(5), fam::johnson2(7),
                               fam::clique_cartesian(3, 3), fam::clique_cartesian(5, 5), fam::clique_direct(3, 3),
                               fam::gq_t2star(4).graph, fam::gq_parabolic(3).graph, fam::gq_elliptic(2).graph,
                               fam::gq_hermitian(2).graph};
  for (const auto& g : graphs) {
    CAPTURE(g.meta().family);
    const auto p = check_srg(g);
    REQUIRE(p);
    const auto a = bounds::srg_analysis(*p);
    CHECK(a.d == static_cast<long>(oracle::min_symdiff(oracle::adjacency(g))));
    CHECK(a.complement == check_srg(oracle::from_adjacency([&] {
            auto adj = oracle::adjacency(g);
            for (std::size_t u = 0; u < adj.size(); ++u)
              for (std::size_t v = 0; v < adj.size(); ++v) adj[u][v] = u != v && !adj[u][v];
            return adj;
          }())));
  }
  CHECK(error_code_of([] { bounds::srg_analysis({10, 3, 0, 2}); }) == ErrorCode::SrgIdentityViolated);
}
