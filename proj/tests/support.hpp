#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tricross/braid.hpp"
#include "tricross/bracket.hpp"
#include "tricross/diagram.hpp"
#include "tricross/gen.hpp"

namespace testing {

using namespace tricross;

inline orientation strand_orientation(const double_diagram& d) {
  if (d.map().empty()) return {};
  return component_orientation(d.map(), find_strand_components(d.map()));
}

inline laurent_poly normalized_auto(const double_diagram& d) {
  return normalized(d, strand_orientation(d));
}

// Unknot drawn with `kinks` Reidemeister-I loops of random handedness.
inline double_diagram kinked_unknot(int kinks, std::mt19937_64& rng) {
  double_diagram d = double_diagram::unlink(1);
  for (int i = 0; i < kinks; ++i) {
    const int dart = d.map().empty() ? 0 : static_cast<int>(rng() % d.map().dart_count());
    d = add_kink(d, dart, rng() % 2 ? kink_side::left : kink_side::right, rng() % 2 == 0);
  }
  return d;
}

// Positive braid using every generator at least once.
inline braid_word random_connected_braid(int strands, int extra, std::mt19937_64& rng) {
  std::vector<int> letters;
  for (int i = 1; i < strands; ++i) letters.push_back(i);
  for (int i = 0; i < extra; ++i) letters.push_back(1 + static_cast<int>(rng() % (strands - 1)));
  std::shuffle(letters.begin(), letters.end(), rng);
  return braid_word(strands, letters);
}

// Brute-force strand cycle count of a braid permutation, tracking one
// strand at a time through the word.
inline int braid_cycles_by_tracking(const braid_word& w) {
  const int p = w.strands();
  std::vector<int> perm(p);
  for (int start = 0; start < p; ++start) {
    int pos = start;
    for (int g : w.letters()) {
      if (pos == g - 1) {
        pos = g;
      } else if (pos == g) {
        pos = g - 1;
      }
    }
    perm[start] = pos;
  }
  std::vector<bool> seen(p, false);
  int cycles = 0;
  for (int s = 0; s < p; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int x = s; !seen[x]; x = perm[x]) seen[x] = true;
  }
  return cycles;
}

}  // namespace testing
