#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace tricross {

// Half-edge (dart) map on the sphere.
//
// Darts are dense indices 0..N-1. alpha pairs the two darts of an edge,
// sigma is the counterclockwise successor around a vertex. Faces are the
// orbits of phi(d) = sigma(alpha(d)); the face of d lies to the right of d
// when travelling away from its vertex, so face cycles run clockwise.
//
// A default-constructed map is empty (no crossings). Any other instance has
// passed validation: fixed-point-free alpha, uniform vertex valence 4 or 6,
// connected, and V - E + F = 2.
class planar_map {
 public:
  planar_map() = default;

  static planar_map from_permutations(std::vector<int> alpha, std::vector<int> sigma);

  bool empty() const noexcept { return alpha_.empty(); }
  int dart_count() const noexcept { return static_cast<int>(alpha_.size()); }
  int vertex_count() const noexcept { return static_cast<int>(vertex_start_.size()); }
  int edge_count() const noexcept { return dart_count() / 2; }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int valence() const noexcept { return valence_; }

  int alpha(int d) const { return alpha_[d]; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  int phi(int d) const { return sigma_[alpha_[d]]; }

  // The dart that continues the strand entering through d.
  int opposite(int d) const { return opposite_[d]; }

  int vertex_of(int d) const { return vertex_of_[d]; }
  int face_of(int d) const { return face_of_[d]; }

  // Darts around vertex v in counterclockwise order, starting from the
  // smallest dart index of that vertex.
  std::span<const int> vertex_darts(int v) const;

  // Face cycles in phi order; faces are numbered by their smallest dart.
  const std::vector<std::vector<int>>& faces() const noexcept { return faces_; }

  const std::vector<int>& alpha_permutation() const noexcept { return alpha_; }
  const std::vector<int>& sigma_permutation() const noexcept { return sigma_; }

  friend bool operator==(const planar_map& a, const planar_map& b) {
    return a.alpha_ == b.alpha_ && a.sigma_ == b.sigma_;
  }

 private:
  std::vector<int> alpha_;
  std::vector<int> sigma_;
  std::vector<int> sigma_inv_;
  std::vector<int> opposite_;
  std::vector<int> vertex_of_;
  std::vector<int> vertex_start_;
  std::vector<int> vertex_order_;  // darts grouped by vertex, ccw
  std::vector<int> face_of_;
  std::vector<std::vector<int>> faces_;
  int valence_ = 0;
};

// Builds a map over arbitrary integer dart identifiers. Identifiers are
// renumbered densely in increasing order.
planar_map build_map(std::span<const std::int64_t> darts,
                     const std::unordered_map<std::int64_t, std::int64_t>& alpha,
                     const std::unordered_map<std::int64_t, std::int64_t>& sigma);

struct strand_components {
  std::vector<int> component_of;  // per dart
  int count = 0;
};

// Link components of the curve drawn by the map: a strand entering a
// vertex through d leaves through opposite(d).
strand_components find_strand_components(const planar_map& map);

}  // namespace tricross
