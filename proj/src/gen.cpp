#include "tricross/gen.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "tricross/error.hpp"

namespace tricross {

namespace {

// --- raw 6-valent shadows: vertex v owns darts 6v..6v+5 in ccw order ------

int raw_sigma(int d) { return d - d % 6 + (d % 6 + 1) % 6; }

bool is_valid_raw_shadow(const std::vector<int>& alpha, std::vector<char>& seen) {
  const int darts = static_cast<int>(alpha.size());
  const int n = darts / 6;
  seen.assign(darts, 0);
  int faces = 0;
  for (int d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    ++faces;
    for (int e = d; !seen[e]; e = raw_sigma(alpha[e])) seen[e] = 1;
  }
  if (faces != 2 * n + 2) return false;
  // vertex connectivity
  std::array<int, 64> parent{};
  std::iota(parent.begin(), parent.begin() + n, 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (int d = 0; d < darts; ++d) {
    const int a = find(d / 6), b = find(alpha[d] / 6);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<int> raw_sigma_permutation(int darts) {
  std::vector<int> sigma(darts);
  for (int d = 0; d < darts; ++d) sigma[d] = raw_sigma(d);
  return sigma;
}

std::vector<height> random_heights(int n, std::mt19937_64& rng) {
  std::vector<height> heights(6 * n);
  for (int v = 0; v < n; ++v) {
    std::array<height, 3> h{height::top, height::middle, height::bottom};
    std::shuffle(h.begin(), h.end(), rng);
    for (int i = 0; i < 6; ++i) heights[6 * v + i] = h[i % 3];
  }
  return heights;
}

std::vector<int> random_pairing(int darts, std::mt19937_64& rng) {
  std::vector<int> order(darts);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> alpha(darts);
  for (int i = 0; i < darts; i += 2) {
    alpha[order[i]] = order[i + 1];
    alpha[order[i + 1]] = order[i];
  }
  return alpha;
}

std::vector<int> sample_by_rejection(int n, std::mt19937_64& rng, int max_attempts, int& attempts) {
  std::vector<char> scratch;
  for (attempts = 1; attempts <= max_attempts; ++attempts) {
    auto alpha = random_pairing(6 * n, rng);
    if (is_valid_raw_shadow(alpha, scratch)) return alpha;
  }
  throw error(errc::give_up, "no planar pairing for n=" + std::to_string(n) + " in " +
                                 std::to_string(max_attempts) + " attempts");
}

// Places a new vertex inside a random face. It is wired to k cut points on
// distinct boundary edges (in boundary order, so nothing crosses); its
// remaining 6 - 2k darts close up as nested or side-by-side loops.
void grow_once(std::vector<int>& alpha, std::mt19937_64& rng) {
  const int old_darts = static_cast<int>(alpha.size());
  std::uniform_int_distribution<int> pick_dart(0, old_darts - 1);
  std::vector<int> boundary;
  const int start = pick_dart(rng);
  int e = start;
  do {
    boundary.push_back(e);
    e = raw_sigma(alpha[e]);
  } while (e != start);

  // occurrences per edge along the boundary
  std::map<int, std::vector<int>> positions;
  for (int j = 0; j < static_cast<int>(boundary.size()); ++j) {
    const int b = boundary[j];
    positions[std::min(b, alpha[b])].push_back(j);
  }
  std::vector<int> edges;
  for (const auto& [edge, pos] : positions) edges.push_back(edge);
  const int max_k = std::min<int>(3, static_cast<int>(edges.size()));
  const int k = std::uniform_int_distribution<int>(1, max_k)(rng);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<int> cuts;  // boundary positions
  for (int i = 0; i < k; ++i) {
    const auto& pos = positions[edges[i]];
    cuts.push_back(pos[std::uniform_int_distribution<int>(0, static_cast<int>(pos.size()) - 1)(rng)]);
  }
  std::sort(cuts.begin(), cuts.end());

  // Slot contents, ccw: boundary points appear in reverse boundary order,
  // each as (towards alpha side, towards own side). Negative tags are loops.
  struct slot {
    int cut = -1;      // index into cuts
    bool own = false;  // wired to the boundary dart itself
    int loop = -1;
  };
  std::vector<slot> conn;
  for (int t = k - 1; t >= 0; --t) {
    conn.push_back({t, false, -1});
    conn.push_back({t, true, -1});
  }
  std::vector<slot> layout;
  auto loop_pair = [](int id) { return std::array<slot, 2>{slot{-1, false, id}, slot{-1, false, id}}; };
  if (k == 3) {
    layout = conn;
  } else if (k == 2) {
    const int gap = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < 4; ++i) {
      layout.push_back(conn[i]);
      if (i == gap) {
        auto p = loop_pair(0);
        layout.insert(layout.end(), p.begin(), p.end());
      }
    }
  } else {
    const int shape = std::uniform_int_distribution<int>(0, 4)(rng);
    auto four = [&](bool nested) {
      if (nested) return std::vector<slot>{{-1, false, 0}, {-1, false, 1}, {-1, false, 1}, {-1, false, 0}};
      return std::vector<slot>{{-1, false, 0}, {-1, false, 0}, {-1, false, 1}, {-1, false, 1}};
    };
    if (shape < 4) {
      const int gap = shape / 2;
      auto loops = four(shape % 2 == 1);
      for (int i = 0; i < 2; ++i) {
        layout.push_back(conn[i]);
        if (i == gap) layout.insert(layout.end(), loops.begin(), loops.end());
      }
    } else {
      for (int i = 0; i < 2; ++i) {
        layout.push_back(conn[i]);
        auto p = loop_pair(i);
        layout.insert(layout.end(), p.begin(), p.end());
      }
    }
  }

  const int rot = std::uniform_int_distribution<int>(0, 5)(rng);
  alpha.resize(old_darts + 6);
  std::array<int, 2> loop_first{-1, -1};
  std::vector<int> partner_before(old_darts);
  for (int d = 0; d < old_darts; ++d) partner_before[d] = alpha[d];
  for (int p = 0; p < 6; ++p) {
    const slot& s = layout[(p + rot) % 6];
    const int x = old_darts + p;
    if (s.loop >= 0) {
      if (loop_first[s.loop] < 0) {
        loop_first[s.loop] = x;
      } else {
        alpha[x] = loop_first[s.loop];
        alpha[loop_first[s.loop]] = x;
      }
      continue;
    }
    const int b = boundary[cuts[s.cut]];
    const int target = s.own ? b : partner_before[b];
    alpha[x] = target;
    alpha[target] = x;
  }
}

std::vector<int> sample_by_growth(int n, std::mt19937_64& rng, int max_attempts, int& attempts) {
  auto alpha = sample_by_rejection(1, rng, max_attempts, attempts);
  for (int v = 1; v < n; ++v) grow_once(alpha, rng);
  return alpha;
}

// --- canonical codes --------------------------------------------------------

struct code_view {
  const std::vector<int>* alpha;
  const std::vector<int>* rotation;  // sigma or its inverse
  int valence;
};

// Labels darts by breadth-first discovery from root, one whole vertex at a
// time in rotation order, and writes the alpha images as labels.
void traverse(const code_view& v, int root, std::vector<int>& label, std::vector<int>& order,
              std::vector<int>& code) {
  const int n = static_cast<int>(v.alpha->size());
  label.assign(n, -1);
  order.clear();
  auto claim_vertex = [&](int d) {
    int e = d;
    for (int i = 0; i < v.valence; ++i) {
      label[e] = static_cast<int>(order.size());
      order.push_back(e);
      e = (*v.rotation)[e];
    }
  };
  claim_vertex(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int a = (*v.alpha)[order[i]];
    if (label[a] < 0) claim_vertex(a);
  }
  code.resize(n);
  for (int i = 0; i < n; ++i) code[i] = label[(*v.alpha)[order[i]]];
}

template <class Decoration>
std::vector<int> minimal_code(const planar_map& map, bool with_reflection, Decoration decorate) {
  const std::vector<int>& alpha = map.alpha_permutation();
  std::vector<int> sigma_inv(map.dart_count());
  for (int d = 0; d < map.dart_count(); ++d) sigma_inv[d] = map.sigma_inv(d);
  std::vector<code_view> views{{&alpha, &map.sigma_permutation(), map.valence()}};
  if (with_reflection) views.push_back({&alpha, &sigma_inv, map.valence()});

  std::vector<int> best, code, label, order;
  for (const auto& view : views) {
    for (int root = 0; root < map.dart_count(); ++root) {
      traverse(view, root, label, order, code);
      decorate(order, code);
      if (best.empty() || code < best) best = code;
    }
  }
  return best;
}

std::string to_text(const std::vector<int>& code, int darts, int valence, const std::string& deco) {
  std::string out = std::to_string(valence) + ":";
  for (int i = 0; i < darts; ++i) {
    if (i > 0) out += ',';
    out += std::to_string(code[i]);
  }
  if (!deco.empty()) out += "/" + deco;
  return out;
}

template <class Work>
void run_parallel(int tasks, int jobs, Work work) {
  jobs = std::max(1, std::min(jobs, tasks));
  if (jobs == 1) {
    for (int t = 0; t < tasks; ++t) work(t);
    return;
  }
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      for (int t = j; t < tasks; t += jobs) work(t);
    });
  }
  for (auto& th : pool) th.join();
}

// Calls visit(alpha) for every valid pairing whose dart 0 is paired with
// first_partner.
template <class Visit>
void for_each_valid_pairing(int n, int first_partner, Visit visit) {
  const int darts = 6 * n;
  std::vector<int> alpha(darts, -1);
  std::vector<char> scratch;
  alpha[0] = first_partner;
  alpha[first_partner] = 0;
  auto fill = [&](auto&& self) -> void {
    int d = 0;
    while (d < darts && alpha[d] >= 0) ++d;
    if (d == darts) {
      if (is_valid_raw_shadow(alpha, scratch)) visit(alpha);
      return;
    }
    for (int e = d + 1; e < darts; ++e) {
      if (alpha[e] >= 0) continue;
      alpha[d] = e;
      alpha[e] = d;
      self(self);
      alpha[d] = alpha[e] = -1;
    }
  };
  fill(fill);
}

void check_enumeration_size(int n) {
  if (n < 1) throw error(errc::bad_parameters, "enumeration needs n >= 1");
  if (n > max_enumeration_crossings) {
    throw error(errc::too_large, "enumeration is capped at n=" + std::to_string(max_enumeration_crossings));
  }
}

}  // namespace

sample_result random_triple_diagram(int n, std::uint64_t seed, sample_options opts) {
  if (n < 1) throw error(errc::bad_parameters, "random diagrams need n >= 1");
  if (n > 10) throw error(errc::too_large, "random diagrams are limited to 10 vertices");
  std::mt19937_64 rng(seed);
  auto strategy = opts.strategy;
  if (strategy == sample_strategy::automatic) {
    strategy = n <= 2 ? sample_strategy::rejection : sample_strategy::growth;
  }
  sample_result out;
  auto alpha = strategy == sample_strategy::rejection
                   ? sample_by_rejection(n, rng, opts.max_attempts, out.attempts)
                   : sample_by_growth(n, rng, opts.max_attempts, out.attempts);
  auto heights = random_heights(n, rng);
  auto map = planar_map::from_permutations(std::move(alpha), raw_sigma_permutation(6 * n));
  out.diagram = relabel(triple_diagram(std::move(map), std::move(heights)), rng());
  return out;
}

triple_diagram relabel(const triple_diagram& d, std::uint64_t seed) {
  const auto& map = d.map();
  if (map.empty()) return d;
  const int n = map.dart_count();
  std::mt19937_64 rng(seed);
  std::vector<int> to(n);
  std::iota(to.begin(), to.end(), 0);
  std::shuffle(to.begin(), to.end(), rng);
  std::vector<int> alpha(n), sigma(n);
  std::vector<height> heights(n);
  for (int e = 0; e < n; ++e) {
    alpha[to[e]] = to[map.alpha(e)];
    sigma[to[e]] = to[map.sigma(e)];
    heights[to[e]] = d.height_of(e);
  }
  return triple_diagram(planar_map::from_permutations(std::move(alpha), std::move(sigma)), std::move(heights));
}

std::string shadow_code(const planar_map& map, bool with_reflection) {
  if (map.empty()) return "empty";
  auto code = minimal_code(map, with_reflection, [](const std::vector<int>&, std::vector<int>&) {});
  return to_text(code, map.dart_count(), map.valence(), "");
}

std::string canonical_code(const triple_diagram& d, bool with_reflection) {
  const auto& map = d.map();
  if (map.empty()) return "loops=1";
  const int n = map.dart_count();
  auto code = minimal_code(map, with_reflection, [&](const std::vector<int>& order, std::vector<int>& code) {
    for (int i = 0; i < n; i += 6) {
      for (int j = 0; j < 3; ++j) code.push_back(static_cast<int>(d.height_of(order[i + j])));
    }
  });
  std::string deco;
  for (int i = n; i < static_cast<int>(code.size()); ++i) deco += to_char(static_cast<height>(code[i]));
  return to_text(code, n, 6, deco);
}

std::string canonical_code(const double_diagram& d, bool with_reflection) {
  const auto& map = d.map();
  const std::string loops = "loops=" + std::to_string(d.crossingless_loops());
  if (map.empty()) return loops;
  const int n = map.dart_count();
  auto code = minimal_code(map, with_reflection, [&](const std::vector<int>& order, std::vector<int>& code) {
    for (int i = 0; i < n; i += 4) code.push_back(d.is_over(order[i]) ? 0 : 1);
  });
  std::string deco;
  for (int i = n; i < static_cast<int>(code.size()); ++i) deco += static_cast<char>('0' + code[i]);
  auto text = to_text(code, n, 4, deco);
  if (d.crossingless_loops() > 0) text += ";" + loops;
  return text;
}

std::int64_t count_planar_pairings(int n, int jobs) {
  check_enumeration_size(n);
  std::vector<std::int64_t> counts(6 * n, 0);
  run_parallel(6 * n - 1, jobs, [&](int t) {
    for_each_valid_pairing(n, t + 1, [&](const std::vector<int>&) { ++counts[t]; });
  });
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::vector<planar_map> enumerate_shadows(int n, enumerate_options opts) {
  check_enumeration_size(n);
  const int tasks = 6 * n - 1;
  std::vector<std::map<std::string, std::vector<int>>> found(tasks);
  run_parallel(tasks, opts.jobs, [&](int t) {
    for_each_valid_pairing(n, t + 1, [&](const std::vector<int>& alpha) {
      auto map = planar_map::from_permutations(alpha, raw_sigma_permutation(6 * n));
      found[t].try_emplace(shadow_code(map, opts.with_reflection), alpha);
    });
  });
  std::map<std::string, std::vector<int>> merged;
  for (auto& part : found) merged.merge(part);
  std::vector<planar_map> out;
  for (auto& [code, alpha] : merged) {
    out.push_back(planar_map::from_permutations(alpha, raw_sigma_permutation(6 * n)));
  }
  return out;
}

std::vector<enumerated_diagram> enumerate_triple_diagrams(int n, enumerate_options opts) {
  const auto shadows = enumerate_shadows(n, opts);
  int labelings = 1;
  for (int v = 0; v < n; ++v) labelings *= 6;
  static constexpr std::array<std::array<height, 3>, 6> perms{{
      {height::top, height::middle, height::bottom},
      {height::top, height::bottom, height::middle},
      {height::middle, height::top, height::bottom},
      {height::middle, height::bottom, height::top},
      {height::bottom, height::top, height::middle},
      {height::bottom, height::middle, height::top},
  }};
  std::vector<std::map<std::string, triple_diagram>> found(shadows.size());
  run_parallel(static_cast<int>(shadows.size()), opts.jobs, [&](int s) {
    const auto& map = shadows[s];
    for (int code = 0; code < labelings; ++code) {
      std::vector<height> heights(map.dart_count());
      for (int v = 0, rest = code; v < n; ++v, rest /= 6) {
        const auto& p = perms[rest % 6];
        auto darts = map.vertex_darts(v);
        for (int i = 0; i < 6; ++i) heights[darts[i]] = p[i % 3];
      }
      triple_diagram d(map, std::move(heights));
      found[s].try_emplace(canonical_code(d, opts.with_reflection), std::move(d));
    }
  });
  std::map<std::string, triple_diagram> merged;
  for (auto& part : found) merged.merge(part);
  std::vector<enumerated_diagram> out;
  out.reserve(merged.size());
  for (auto& [code, d] : merged) out.push_back({code, std::move(d)});
  return out;
}

}  // namespace tricross
