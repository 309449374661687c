#include <doctest.h>

#include <array>
#include <set>

#include "support.hpp"
#include "tricross/error.hpp"
#include "tricross/reduce.hpp"

using namespace tricross;

namespace {

using hexagon = std::array<int, 6>;

bool chords_cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  auto inside = [&](int x) { return a < x && x < b; };
  return inside(c) != inside(d);
}

// All perfect matchings of six points on a circle without crossing chords.
std::vector<hexagon> non_crossing_matchings() {
  std::vector<hexagon> out;
  hexagon partner{};
  auto rec = [&](auto&& self, std::array<bool, 6> used) -> void {
    int first = 0;
    while (first < 6 && used[first]) ++first;
    if (first == 6) {
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          if (chords_cross(i, partner[i], j, partner[j])) return;
        }
      }
      out.push_back(partner);
      return;
    }
    for (int j = first + 1; j < 6; ++j) {
      if (used[j]) continue;
      auto next = used;
      next[first] = next[j] = true;
      partner[first] = j;
      partner[j] = first;
      self(self, next);
    }
  };
  rec(rec, {});
  return out;
}

// Orbits of (matching, strand heights) under rotating the single vertex.
int one_vertex_orbits(bool heights) {
  std::set<std::pair<hexagon, hexagon>> reps;
  for (const auto& m : non_crossing_matchings()) {
    std::array<int, 3> perm{0, 1, 2};
    do {
      hexagon h{};
      for (int i = 0; i < 6; ++i) h[i] = heights ? perm[i % 3] : 0;
      std::pair<hexagon, hexagon> best{m, h};
      auto cur = best;
      for (int r = 0; r < 6; ++r) {
        std::pair<hexagon, hexagon> next;
        for (int i = 0; i < 6; ++i) {
          next.first[(i + 1) % 6] = (cur.first[i] + 1) % 6;
          next.second[(i + 1) % 6] = cur.second[i];
        }
        cur = next;
        best = std::min(best, cur);
      }
      reps.insert(best);
    } while (heights && std::next_permutation(perm.begin(), perm.end()));
  }
  return static_cast<int>(reps.size());
}

}  // namespace

TEST_CASE("hand oracles for one vertex") {
  CHECK(non_crossing_matchings().size() == 5);
  CHECK(one_vertex_orbits(false) == 2);
  CHECK(one_vertex_orbits(true) == 8);
}

TEST_CASE("planar pairings of one vertex") {
  CHECK(count_planar_pairings(1) == static_cast<std::int64_t>(non_crossing_matchings().size()));
  CHECK(count_planar_pairings(2, 1) == count_planar_pairings(2, 4));
}

TEST_CASE("enumeration at n=1") {
  auto all = enumerate_triple_diagrams(1);
  CHECK(all.size() == static_cast<std::size_t>(one_vertex_orbits(true)));
  CHECK(enumerate_shadows(1).size() == static_cast<std::size_t>(one_vertex_orbits(false)));
  for (const auto& e : all) {
    auto cert = theorem1_pipeline(e.diagram);
    CHECK_FALSE((cert.r == 1 && cert.g > 0));
  }
}

TEST_CASE("enumeration output is sorted, unique and parallel-safe") {
  auto seq = enumerate_triple_diagrams(2, {1, false});
  auto par = enumerate_triple_diagrams(2, {4, false});
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].code == par[i].code);
    CHECK(canonical_code(seq[i].diagram) == seq[i].code);
    if (i) CHECK(seq[i - 1].code < seq[i].code);
  }
}

TEST_CASE("enumeration is closed under mirror") {
  for (int n = 1; n <= 2; ++n) {
    auto all = enumerate_triple_diagrams(n);
    std::set<std::string> codes;
    for (const auto& e : all) codes.insert(e.code);
    for (const auto& e : all) CHECK(codes.count(canonical_code(mirror(e.diagram))) == 1);
  }
}

TEST_CASE("reflection merges mirror embeddings") {
  for (int n = 1; n <= 2; ++n) {
    auto plain = enumerate_triple_diagrams(n);
    auto refl = enumerate_triple_diagrams(n, {1, true});
    CHECK(refl.size() <= plain.size());
    std::set<std::string> codes;
    for (const auto& e : plain) codes.insert(canonical_code(e.diagram, true));
    CHECK(codes.size() == refl.size());
  }
}

TEST_CASE("enumeration cap") {
  try {
    enumerate_triple_diagrams(max_enumeration_crossings + 1);
    FAIL("expected TooLarge");
  } catch (const error& e) {
    CHECK(e.code() == errc::too_large);
  }
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::vector<triple_diagram> samples;
  for (const auto& e : enumerate_triple_diagrams(2)) {
    if (samples.size() < 5) samples.push_back(e.diagram);
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) samples.push_back(random_triple_diagram(3 + seed, seed).diagram);
  for (const auto& d : samples) {
    const auto code = canonical_code(d);
    const auto refl = canonical_code(d, true);
    for (std::uint64_t s = 0; s < 100; ++s) {
      auto r = relabel(d, s);
      CHECK(canonical_code(r) == code);
      CHECK(canonical_code(r, true) == refl);
    }
  }
}

TEST_CASE("canonical code separates heights and shadows") {
  auto a = parse_triple_pd("T(1,2,2,1,3,3)/TMB");
  auto b = parse_triple_pd("T(1,2,2,1,3,3)/MTB");
  CHECK(canonical_code(a) != canonical_code(b));
  CHECK(shadow_code(a.map()) == shadow_code(b.map()));
}

TEST_CASE("canonical code for classical diagrams") {
  auto tre = braid_closure(parse_braid("2: 1 1 1")).diagram;
  auto pd = parse_double_pd(serialize(tre));
  CHECK(canonical_code(pd) == canonical_code(tre));
  CHECK(canonical_code(mirror(tre)) != canonical_code(tre));
  CHECK(canonical_code(mirror(tre), true) == canonical_code(tre, true));
}

TEST_CASE("random_triple_diagram") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto r = random_triple_diagram(1, seed, {sample_strategy::rejection});
    CHECK(r.diagram.crossing_count() == 1);
    CHECK(r.attempts >= 1);
  }
  int total = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    total += random_triple_diagram(1, seed, {sample_strategy::rejection}).attempts;
  }
  CHECK(total < 300 * 10);

  CHECK(random_triple_diagram(5, 42).diagram == random_triple_diagram(5, 42).diagram);
  for (int n = 1; n <= 10; ++n) {
    auto d = random_triple_diagram(n, 7 * n).diagram;
    CHECK(d.crossing_count() == n);
    CHECK(d.map().face_count() == 2 * n + 2);
    CHECK_NOTHROW(theorem1_pipeline(d));
  }
  CHECK_THROWS_AS(random_triple_diagram(0, 1), error);
  CHECK_THROWS_AS(random_triple_diagram(11, 1), error);
}

TEST_CASE("rejection sampling gives up within its budget") {
  try {
    random_triple_diagram(8, 1, {sample_strategy::rejection, 3});
    FAIL("expected GiveUp");
  } catch (const error& e) {
    CHECK(e.code() == errc::give_up);
  }
}

TEST_CASE("growth sampler reaches every n=2 class") {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 20000 && seen.size() < 342; ++seed) {
    seen.insert(canonical_code(random_triple_diagram(2, seed, {sample_strategy::growth}).diagram));
  }
  std::set<std::string> all;
  for (const auto& e : enumerate_triple_diagrams(2)) all.insert(e.code);
  for (const auto& c : seen) CHECK(all.count(c) == 1);
  CHECK(seen.size() == all.size());
}
