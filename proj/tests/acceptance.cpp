// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "tricross/bounds.hpp"
#include "tricross/error.hpp"
#include "tricross/reduce.hpp"

#ifndef TRICROSS_DATA_DIR
#define TRICROSS_DATA_DIR "data"
#endif

using namespace tricross;

namespace {

struct outcome {
  bool ok = true;
  std::string detail;
};

struct criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<outcome()> run;
};

const std::vector<triple_diagram>& corpus() {
  static const std::vector<triple_diagram> cached = [] {
    std::vector<triple_diagram> out;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const int n = 1 + static_cast<int>(seed % 8);
      out.push_back(random_triple_diagram(n, seed).diagram);
    }
    return out;
  }();
  return cached;
}

std::string fmt(const char* f, long a, long b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

outcome face_count_law() {
  long bad = 0, total = 0;
  for (const auto& d : corpus()) {
    const int n = d.crossing_count();
    ++total;
    if (n < 1 || n > 8 || d.map().edge_count() != 3 * n || d.map().face_count() != 2 * n + 2) ++bad;
  }
  return {bad == 0, fmt("%ld diagrams, %ld exceptions", total, bad)};
}

outcome pipeline_properties() {
  long bad = 0, total = 0;
  for (const auto& d : corpus()) {
    ++total;
    const int n = d.crossing_count();
    try {
      const auto t = run_theorem1(d);
      const auto& c = t.certificate;
      const bool ok = t.reduced.diagram.crossing_count() == 3 * n && c.c == 3 * n &&
                      c.white_out == c.white_in + n && c.s == c.white_out && t.seifert.count == c.s &&
                      2 * c.g + c.r - 1 <= n;
      bad += !ok;
    } catch (const error&) {
      ++bad;
    }
  }
  return {bad == 0, fmt("%ld diagrams, %ld exceptions", total, bad)};
}

outcome torus_results() {
  long checked = 0, bad = 0;
  for (int p = 2; p <= 9; ++p) {
    for (int q = p + 1; q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++checked;
      const int expect = (p - 1) * (q - 1);
      const auto w = torus_word(p, q);
      const auto cl = braid_closure(w);
      const int s = seifert_smooth(cl.diagram, cl.orient).count;
      const int g = canonical_genus(cl.diagram, cl.orient);
      if (torus_c3(p, q) != expect || positive_braid_c3(w) != expect || 2 * closure_genus(w) != expect ||
          2 * g != expect || s != p) {
        ++bad;
      }
    }
  }
  return {bad == 0, fmt("%ld coprime pairs, %ld mismatches", checked, bad)};
}

outcome trefoil_realization() {
  const auto tre = braid_closure(parse_braid("2: 1 1 1"));
  const auto target = normalized(tre.diagram, tre.orient);
  const auto all = enumerate_triple_diagrams(2);
  long witnesses = 0, bound_two = 0;
  for (const auto& e : all) {
    const auto t = run_theorem1(e.diagram);
    if (t.certificate.r != 1 || normalized(t.reduced.diagram, t.reduced.orient) != target) continue;
    ++witnesses;
    bound_two += t.certificate.bound == 2;
  }
  const bool ok = witnesses >= 1 && bound_two == witnesses && lower_theorem1(1, 1) == 2;
  return {ok, fmt("%ld enumerated, %ld trefoil witnesses", static_cast<long>(all.size()), witnesses)};
}

const std::vector<std::string> listed_up_to_ten{
    "8_2",    "8_5",    "8_7",    "8_9",    "8_10",   "8_16",   "8_17",   "8_18",   "10_2",
    "10_5",   "10_9",   "10_17",  "10_46",  "10_47",  "10_48",  "10_62",  "10_64",  "10_79",
    "10_82",  "10_85",  "10_91",  "10_94",  "10_99",  "10_100", "10_104", "10_106", "10_109",
    "10_112", "10_116", "10_118", "10_123", "10_139", "10_152"};

const std::vector<std::string> listed_twelve{
    "12a_146",  "12a_369",  "12a_576",  "12a_716",  "12a_722",  "12a_805",  "12a_815",  "12a_819",
    "12a_824",  "12a_835",  "12a_838",  "12a_850",  "12a_859",  "12a_864",  "12a_869",  "12a_878",
    "12a_898",  "12a_909",  "12a_916",  "12a_920",  "12a_981",  "12a_984",  "12a_999",  "12a_1002",
    "12a_1011", "12a_1013", "12a_1027", "12a_1047", "12a_1051", "12a_1114", "12a_1120", "12a_1128",
    "12a_1134", "12a_1168", "12a_1176", "12a_1191", "12a_1199", "12a_1203", "12a_1209", "12a_1210",
    "12a_1211", "12a_1212", "12a_1214", "12a_1215", "12a_1218", "12a_1219", "12a_1220", "12a_1221",
    "12a_1222", "12a_1223", "12a_1225", "12a_1226", "12a_1227", "12a_1229", "12a_1230", "12a_1231",
    "12a_1233", "12a_1235", "12a_1238", "12a_1246", "12a_1248", "12a_1249", "12a_1250", "12a_1253",
    "12a_1254", "12a_1255", "12a_1258", "12a_1260", "12a_1273", "12a_1283", "12a_1288", "12n_242",
    "12n_472",  "12n_574",  "12n_679",  "12n_688",  "12n_725",  "12n_888"};

std::map<std::string, knot_record> table() {
  std::map<std::string, knot_record> out;
  for (auto& r : load_knot_table(std::string(TRICROSS_DATA_DIR) + "/knot_table.csv")) out[r.name] = r;
  return out;
}

long certified_exact(const std::map<std::string, knot_record>& t, const std::vector<std::string>& names) {
  long hits = 0;
  for (const auto& name : names) {
    auto it = t.find(name);
    if (it == t.end()) continue;
    const auto c = certify(it->second);
    const auto& r = it->second;
    hits += c.exact && *c.exact == r.c2 - 2 && *c.exact == 2 * r.genus;
  }
  return hits;
}

outcome listed_knot_certification() {
  const auto t = table();
  const long low = certified_exact(t, listed_up_to_ten);
  const long twelve = certified_exact(t, listed_twelve);
  const auto c82 = certify(t.at("8_2"));
  const auto c139 = certify(t.at("10_139"));
  const bool ok = listed_up_to_ten.size() == 33 && low == 33 && c82.exact == 6 && c139.exact == 8;
  return {ok, fmt("%ld/33 listed knots up to 10 crossings exact", low, 0) +
                  fmt(" (12 crossings: %ld/%ld)", twelve, static_cast<long>(listed_twelve.size()))};
}

outcome connected_sums() {
  const auto t = table();
  const auto torus = connected_sum({certify(torus_record(2, 3)), certify(torus_record(3, 4))}, {1, 3});
  const auto listed = connected_sum({certify(t.at("8_2")), certify(t.at("10_139"))},
                                    {t.at("8_2").genus, t.at("10_139").genus});
  const bool ok = torus.exact == 8 && listed.exact == 14;
  return {ok, fmt("T(2,3)#T(3,4) -> %ld, 8_2#10_139 -> %ld", torus.exact.value_or(-1), listed.exact.value_or(-1))};
}

outcome oracle_self_consistency() {
  long kinks = 0, kink_bad = 0, sums = 0, sum_bad = 0, mirrors = 0, mirror_bad = 0;
  const auto one = laurent_poly::constant(1);

  // Every dart, side and over choice for one and two kinks, sampled for three.
  std::vector<double_diagram> level{double_diagram::unlink(1)};
  for (int depth = 1; depth <= 3; ++depth) {
    std::vector<double_diagram> next;
    std::mt19937_64 rng(depth);
    for (const auto& d : level) {
      const int darts = d.map().empty() ? 1 : d.map().dart_count();
      for (int dart = 0; dart < darts; ++dart) {
        for (auto side : {kink_side::left, kink_side::right}) {
          for (bool over_first : {true, false}) {
            if (depth == 3 && rng() % 4) continue;
            next.push_back(add_kink(d, dart, side, over_first));
          }
        }
      }
    }
    for (const auto& d : next) {
      ++kinks;
      kink_bad += testing::normalized_auto(d) != one;
    }
    level = std::move(next);
  }

  std::vector<double_diagram> small;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const int p = 2 + static_cast<int>(rng() % 5);
    auto w = testing::random_connected_braid(p, static_cast<int>(rng() % (11 - p + 1)), rng);
    small.push_back(braid_closure(w).diagram);
  }
  for (int n = 1; n <= 2; ++n) {
    for (const auto& e : enumerate_triple_diagrams(n)) small.push_back(run_theorem1(e.diagram).reduced.diagram);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    small.push_back(run_theorem1(random_triple_diagram(3, seed).diagram).reduced.diagram);
  }
  for (const auto& d : level) small.push_back(d);
  for (const auto& d : small) {
    if (d.crossing_count() > 10) continue;
    ++sums;
    sum_bad += bracket(d) != bracket_naive(d);
    ++mirrors;
    mirror_bad += testing::normalized_auto(mirror(d)) != testing::normalized_auto(d).inverted();
  }
  const bool ok = kink_bad == 0 && sum_bad == 0 && mirror_bad == 0 && kinks > 0 && sums > 0;
  return {ok, fmt("kinked unknots %ld/%ld", kinks - kink_bad, kinks) + fmt(", naive=optimized %ld/%ld", sums - sum_bad, sums) +
                  fmt(", mirror %ld/%ld", mirrors - mirror_bad, mirrors)};
}

outcome coloring_orientation_evidence() {
  long bad = 0, total = 0;
  for (const auto& d : corpus()) {
    ++total;
    try {
      const auto c = majority_white(checkerboard(d.map()));
      const auto o = natural_orientation(d, c);
      if (!is_proper(d.map(), c) || !white_faces_coherent(d.map(), c, o) || !is_alternating(d.map(), o) ||
          !is_strand_consistent(d.map(), o)) {
        ++bad;
      }
    } catch (const error&) {
      ++bad;
    }
  }
  return {bad == 0, fmt("%ld diagrams, %ld failures", total, bad)};
}

}  // namespace

int main() {
  const std::vector<criterion> criteria{
      {1, "face-count law", 10, face_count_law},
      {2, "pipeline properties", 60, pipeline_properties},
      {3, "torus results", 5, torus_results},
      {4, "trefoil realization", 120, trefoil_realization},
      {5, "listed knot certification", 1, listed_knot_certification},
      {6, "connected sums", 1, connected_sums},
      {7, "oracle self-consistency", 60, oracle_self_consistency},
      {8, "coloring and orientation evidence", 60, coloring_orientation_evidence},
  };
  corpus();  // sampling time is shared, not charged to one criterion
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.ok && secs < c.limit_seconds;
    failures += !pass;
    std::printf("[%s] criterion %d: %s: %s (%.3fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                out.detail.c_str(), secs, c.limit_seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
