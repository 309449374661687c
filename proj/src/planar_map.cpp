#include "tricross/planar_map.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tricross/error.hpp"

namespace tricross {

namespace {

void check_permutation(const std::vector<int>& perm, const char* name) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    const int image = perm[d];
    if (image < 0 || image >= n || seen[image]) {
      throw error(errc::not_involution, std::string(name) + " is not a permutation of the darts");
    }
    seen[image] = 1;
  }
}

}  // namespace

planar_map planar_map::from_permutations(std::vector<int> alpha, std::vector<int> sigma) {
  const int n = static_cast<int>(alpha.size());
  if (n == 0 || sigma.size() != alpha.size()) {
    throw error(errc::not_involution, "alpha and sigma must cover the same non-empty dart set");
  }
  check_permutation(alpha, "alpha");
  for (int d = 0; d < n; ++d) {
    if (alpha[d] == d || alpha[alpha[d]] != d) {
      throw error(errc::not_involution, "alpha is not a fixed-point-free involution at dart " +
                                            std::to_string(d));
    }
  }
  check_permutation(sigma, "sigma");

  planar_map m;
  m.alpha_ = std::move(alpha);
  m.sigma_ = std::move(sigma);
  m.sigma_inv_.assign(n, -1);
  for (int d = 0; d < n; ++d) m.sigma_inv_[m.sigma_[d]] = d;

  // vertices: sigma orbits
  m.vertex_of_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (m.vertex_of_[d] >= 0) continue;
    const int v = static_cast<int>(m.vertex_start_.size());
    m.vertex_start_.push_back(static_cast<int>(m.vertex_order_.size()));
    int e = d;
    do {
      m.vertex_of_[e] = v;
      m.vertex_order_.push_back(e);
      e = m.sigma_[e];
    } while (e != d);
    const int size = static_cast<int>(m.vertex_order_.size()) - m.vertex_start_.back();
    if (size != 4 && size != 6) {
      throw error(errc::wrong_valence,
                  "vertex of valence " + std::to_string(size) + " (expected 4 or 6)");
    }
    if (m.valence_ == 0) {
      m.valence_ = size;
    } else if (m.valence_ != size) {
      throw error(errc::wrong_valence, "mixed 4- and 6-valent vertices");
    }
  }

  const int half = m.valence_ / 2;
  m.opposite_.resize(n);
  for (int d = 0; d < n; ++d) {
    int e = d;
    for (int i = 0; i < half; ++i) e = m.sigma_[e];
    m.opposite_[d] = e;
  }

  // faces: phi orbits
  m.face_of_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (m.face_of_[d] >= 0) continue;
    const int f = static_cast<int>(m.faces_.size());
    auto& cycle = m.faces_.emplace_back();
    int e = d;
    do {
      m.face_of_[e] = f;
      cycle.push_back(e);
      e = m.phi(e);
    } while (e != d);
  }

  // connectivity under <alpha, sigma>
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int e : {m.alpha_[d], m.sigma_[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) throw error(errc::disconnected, "diagram shadow is not connected");

  const int euler = m.vertex_count() - m.edge_count() + m.face_count();
  if (euler != 2) {
    throw error(errc::not_sphere, "V - E + F = " + std::to_string(euler) + ", expected 2");
  }
  return m;
}

std::span<const int> planar_map::vertex_darts(int v) const {
  return std::span<const int>(vertex_order_).subspan(vertex_start_[v], valence_);
}

planar_map build_map(std::span<const std::int64_t> darts,
                     const std::unordered_map<std::int64_t, std::int64_t>& alpha,
                     const std::unordered_map<std::int64_t, std::int64_t>& sigma) {
  std::vector<std::int64_t> ids(darts.begin(), darts.end());
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw error(errc::not_involution, "duplicate dart identifier");
  }
  std::unordered_map<std::int64_t, int> dense;
  for (std::size_t i = 0; i < ids.size(); ++i) dense.emplace(ids[i], static_cast<int>(i));

  auto lookup = [&](const std::unordered_map<std::int64_t, std::int64_t>& perm, std::int64_t d,
                    const char* name) {
    auto it = perm.find(d);
    if (it == perm.end()) {
      throw error(errc::not_involution, std::string(name) + " undefined at dart " + std::to_string(d));
    }
    auto target = dense.find(it->second);
    if (target == dense.end()) {
      throw error(errc::not_involution,
                  std::string(name) + " maps outside the dart set at " + std::to_string(d));
    }
    return target->second;
  };

  std::vector<int> a(ids.size()), s(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    a[i] = lookup(alpha, ids[i], "alpha");
    s[i] = lookup(sigma, ids[i], "sigma");
  }
  return planar_map::from_permutations(std::move(a), std::move(s));
}

strand_components find_strand_components(const planar_map& map) {
  const int n = map.dart_count();
  strand_components out;
  out.component_of.assign(n, -1);
  // Orbits of d -> opposite(alpha(d)) are directed strand walks; a walk and
  // its reverse (through alpha) are the same component.
  std::vector<int> walk(n, -1);
  int walks = 0;
  for (int d = 0; d < n; ++d) {
    if (walk[d] >= 0) continue;
    int e = d;
    do {
      walk[e] = walks;
      e = map.opposite(map.alpha(e));
    } while (e != d);
    ++walks;
  }
  std::vector<int> component_of_walk(walks, -1);
  for (int d = 0; d < n; ++d) {
    const int w = walk[d];
    if (component_of_walk[w] >= 0) continue;
    const int reverse = walk[map.alpha(d)];
    if (component_of_walk[reverse] >= 0) {
      component_of_walk[w] = component_of_walk[reverse];
    } else {
      component_of_walk[w] = component_of_walk[reverse] = out.count++;
    }
  }
  for (int d = 0; d < n; ++d) out.component_of[d] = component_of_walk[walk[d]];
  return out;
}

}  // namespace tricross
