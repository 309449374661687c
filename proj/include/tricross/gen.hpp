#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tricross/diagram.hpp"

namespace tricross {

enum class sample_strategy {
  automatic,  // rejection for n <= 2, growth above
  rejection,  // random pairing of all 6n darts, resampled until planar
  growth,     // insert vertices one at a time into faces of a planar map
};

struct sample_options {
  sample_strategy strategy = sample_strategy::automatic;
  int max_attempts = 100000;
};

struct sample_result {
  triple_diagram diagram;
  int attempts = 0;  // rejection draws (growth always succeeds on the first)
};

// Deterministic for a fixed (n, seed, options).
sample_result random_triple_diagram(int n, std::uint64_t seed, sample_options opts = {});

// Random renumbering of darts and vertices; the result is isomorphic.
triple_diagram relabel(const triple_diagram& d, std::uint64_t seed);

// Minimal traversal code over all root darts. Equal codes iff the decorated
// maps are isomorphic by an orientation-preserving sphere map; with
// reflections, the mirror embedding (reversed rotations) is also tried.
std::string canonical_code(const triple_diagram& d, bool with_reflection = false);
std::string canonical_code(const double_diagram& d, bool with_reflection = false);
std::string shadow_code(const planar_map& map, bool with_reflection = false);

struct enumerate_options {
  int jobs = 1;
  bool with_reflection = false;
};

struct enumerated_diagram {
  std::string code;
  triple_diagram diagram;
};

constexpr int max_enumeration_crossings = 3;

// Valid connected triple diagrams with n crossings up to isomorphism,
// sorted by canonical code.
std::vector<enumerated_diagram> enumerate_triple_diagrams(int n, enumerate_options opts = {});

// Distinct 6-valent shadows with n vertices (no heights), sorted by code.
std::vector<planar_map> enumerate_shadows(int n, enumerate_options opts = {});

// Number of dart pairings on n labelled 6-valent vertices that pass
// validation.
std::int64_t count_planar_pairings(int n, int jobs = 1);

}  // namespace tricross
