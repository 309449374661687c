#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "support.hpp"
#include "tricross/error.hpp"
#include "tricross/planar_map.hpp"

using namespace tricross;

namespace {

using id_map = std::unordered_map<std::int64_t, std::int64_t>;

// One vertex with darts 1..6 in ccw order; pairs are chords of the hexagon.
planar_map single_vertex(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::int64_t> darts{1, 2, 3, 4, 5, 6};
  id_map alpha, sigma;
  for (int d = 1; d <= 6; ++d) sigma[d] = d % 6 + 1;
  for (auto [a, b] : pairs) {
    alpha[a] = b;
    alpha[b] = a;
  }
  return build_map(darts, alpha, sigma);
}

errc code_of(auto&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::give_up;
}

// Two 4-valent vertices a0..a3 and b0..b3 joined by four parallel edges.
planar_map hopf_shadow() {
  std::vector<std::int64_t> darts{10, 11, 12, 13, 20, 21, 22, 23};
  id_map alpha, sigma;
  for (int i = 0; i < 4; ++i) {
    sigma[10 + i] = 10 + (i + 1) % 4;
    sigma[20 + i] = 20 + (i + 1) % 4;
    alpha[10 + i] = 20 + (4 - i) % 4;
    alpha[20 + (4 - i) % 4] = 10 + i;
  }
  return build_map(darts, alpha, sigma);
}

}  // namespace

TEST_CASE("build_map on a vertex with three non-crossing loops") {
  auto m = single_vertex({{1, 2}, {3, 4}, {5, 6}});
  CHECK(m.vertex_count() == 1);
  CHECK(m.edge_count() == 3);
  CHECK(m.face_count() == 4);
  CHECK(m.valence() == 6);
}

TEST_CASE("build_map rejects crossing chords") {
  CHECK(code_of([] { single_vertex({{1, 4}, {2, 5}, {3, 6}}); }) == errc::not_sphere);
}

TEST_CASE("build_map on the Hopf shadow") {
  auto m = hopf_shadow();
  CHECK(m.vertex_count() == 2);
  CHECK(m.edge_count() == 4);
  CHECK(m.face_count() == 4);
  CHECK(find_strand_components(m).count == 2);
}

TEST_CASE("build_map errors") {
  SUBCASE("alpha with a fixed point") {
    CHECK(code_of([] {
            std::vector<int> alpha{0, 2, 1, 3}, sigma{1, 2, 3, 0};
            planar_map::from_permutations(alpha, sigma);
          }) == errc::not_involution);
  }
  SUBCASE("alpha not an involution") {
    CHECK(code_of([] {
            std::vector<int> alpha{1, 2, 3, 0}, sigma{1, 2, 3, 0};
            planar_map::from_permutations(alpha, sigma);
          }) == errc::not_involution);
  }
  SUBCASE("valence 5") {
    CHECK(code_of([] {
            std::vector<int> alpha{1, 0, 3, 2, 5, 4}, sigma{1, 2, 3, 4, 0, 5};
            planar_map::from_permutations(alpha, sigma);
          }) == errc::wrong_valence);
  }
  SUBCASE("mixed valence") {
    // a 4-valent and a 6-valent vertex
    std::vector<int> sigma{1, 2, 3, 0, 5, 6, 7, 8, 9, 4};
    std::vector<int> alpha{4, 5, 6, 7, 0, 1, 2, 3, 9, 8};
    CHECK(code_of([&] { planar_map::from_permutations(alpha, sigma); }) == errc::wrong_valence);
  }
  SUBCASE("two separate kinks") {
    std::vector<int> sigma{1, 2, 3, 0, 5, 6, 7, 4};
    std::vector<int> alpha{1, 0, 3, 2, 5, 4, 7, 6};
    CHECK(code_of([&] { planar_map::from_permutations(alpha, sigma); }) == errc::disconnected);
  }
  SUBCASE("undefined dart") {
    CHECK(code_of([] {
            std::vector<std::int64_t> darts{1, 2, 3, 4};
            id_map alpha{{1, 2}, {2, 1}, {3, 4}}, sigma{{1, 2}, {2, 3}, {3, 4}, {4, 1}};
            build_map(darts, alpha, sigma);
          }) == errc::not_involution);
  }
}

TEST_CASE("faces of small maps") {
  auto kink = planar_map::from_permutations({1, 0, 3, 2}, {1, 2, 3, 0});
  CHECK(kink.face_count() == 3);
  for (const auto& tri : testing::enumerate_triple_diagrams(1)) CHECK(tri.diagram.map().face_count() == 4);
  for (const auto& tri : testing::enumerate_triple_diagrams(2)) CHECK(tri.diagram.map().face_count() == 6);
}

TEST_CASE("face cycles partition the darts and follow phi") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto d = testing::random_triple_diagram(1 + seed % 6, seed).diagram;
    const auto& m = d.map();
    std::vector<int> seen(m.dart_count(), 0);
    for (int f = 0; f < m.face_count(); ++f) {
      const auto& cyc = m.faces()[f];
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        ++seen[cyc[i]];
        CHECK(m.face_of(cyc[i]) == f);
        CHECK(m.phi(cyc[i]) == cyc[(i + 1) % cyc.size()]);
      }
    }
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("strand components of braid closures") {
  CHECK(find_strand_components(braid_closure(parse_braid("2: 1 1 1")).diagram.map()).count == 1);
  CHECK(find_strand_components(braid_closure(parse_braid("2: 1 1")).diagram.map()).count == 2);
  CHECK(braid_closure(parse_braid("1:")).diagram.crossingless_loops() == 1);
}

TEST_CASE("strand components agree with braid permutation cycles") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const int p = 2 + static_cast<int>(rng() % 5);
    auto w = testing::random_connected_braid(p, static_cast<int>(rng() % 8), rng);
    auto closure = braid_closure(w);
    CHECK(find_strand_components(closure.diagram.map()).count == testing::braid_cycles_by_tracking(w));
  }
}

TEST_CASE("opposite is sigma to the half valence") {
  auto d = testing::random_triple_diagram(4, 11).diagram;
  const auto& m = d.map();
  for (int e = 0; e < m.dart_count(); ++e) {
    CHECK(m.opposite(e) == m.sigma(m.sigma(m.sigma(e))));
    CHECK(m.sigma_inv(m.sigma(e)) == e);
  }
}
