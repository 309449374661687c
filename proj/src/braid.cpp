#include "tricross/braid.hpp"

#include <numeric>
#include <sstream>

#include "tricross/error.hpp"
#include "tricross/reduce.hpp"

namespace tricross {

braid_word::braid_word(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw error(errc::bad_parameters, "a braid needs at least one strand");
  for (int i : letters_) {
    if (i < 1 || i >= strands_) {
      throw error(errc::bad_parameters, "generator " + std::to_string(i) + " out of range for " +
                                            std::to_string(strands_) + " strands");
    }
  }
}

braid_word parse_braid(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw error(errc::parse_error, "braid must look like 'p: i1 i2 ...'");
  std::istringstream head{std::string(text.substr(0, colon))};
  std::istringstream body{std::string(text.substr(colon + 1))};
  int strands = 0;
  if (!(head >> strands) || !(head >> std::ws).eof()) throw error(errc::parse_error, "bad strand count");
  std::vector<int> letters;
  int i = 0;
  while (body >> i) letters.push_back(i);
  if (!body.eof()) throw error(errc::parse_error, "bad generator in braid word");
  return braid_word(strands, std::move(letters));
}

std::string to_string(const braid_word& w) {
  std::string out = std::to_string(w.strands()) + ":";
  for (int i : w.letters()) out += " " + std::to_string(i);
  return out;
}

braid_word torus_word(int p, int q) {
  if (p < 2 || q < 1) throw error(errc::bad_parameters, "torus word needs p >= 2 and q >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(p - 1) * q);
  for (int k = 0; k < q; ++k) {
    for (int i = 1; i < p; ++i) letters.push_back(i);
  }
  return braid_word(p, std::move(letters));
}

int permutation_cycles(const braid_word& w) {
  std::vector<int> at(w.strands());  // strand currently at each position
  std::iota(at.begin(), at.end(), 0);
  for (int i : w.letters()) std::swap(at[i - 1], at[i]);
  std::vector<char> seen(w.strands(), 0);
  int cycles = 0;
  for (int s = 0; s < w.strands(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int t = s; !seen[t]; t = at[t]) seen[t] = 1;
  }
  return cycles;
}

closure_diagram braid_closure(const braid_word& w) {
  const int p = w.strands();
  const int k = w.length();
  if (k == 0) {
    if (p != 1) throw error(errc::disconnected_closure, "empty word on several strands");
    return {double_diagram::unlink(1), orientation{}};
  }
  std::vector<char> used(p, 0);
  for (int i : w.letters()) used[i - 1] = 1;
  for (int i = 0; i + 1 < p; ++i) {
    if (!used[i]) {
      throw error(errc::disconnected_closure, "generator " + std::to_string(i + 1) + " never occurs");
    }
  }

  // Crossing j owns darts 4j + {0: NE, 1: NW, 2: SW, 3: SE}, listed ccw.
  constexpr int ne = 0, nw = 1, sw = 2, se = 3;
  std::vector<int> alpha(4 * k, -1), sigma(4 * k);
  std::vector<std::uint8_t> over(4 * k), forward(4 * k);
  for (int j = 0; j < k; ++j) {
    for (int a = 0; a < 4; ++a) {
      sigma[4 * j + a] = 4 * j + (a + 1) % 4;
      over[4 * j + a] = a == ne || a == sw;
      forward[4 * j + a] = a == sw || a == se;
    }
  }
  // Each position is a chain of vertical segments, closed around the right.
  for (int x = 0; x < p; ++x) {
    std::vector<std::pair<int, int>> top_bottom;  // (top dart, bottom dart)
    for (int j = 0; j < k; ++j) {
      const int i = w.letters()[j] - 1;
      if (i == x) top_bottom.emplace_back(4 * j + nw, 4 * j + sw);
      if (i + 1 == x) top_bottom.emplace_back(4 * j + ne, 4 * j + se);
    }
    for (std::size_t t = 0; t < top_bottom.size(); ++t) {
      const int bottom = top_bottom[t].second;
      const int next_top = top_bottom[(t + 1) % top_bottom.size()].first;
      alpha[bottom] = next_top;
      alpha[next_top] = bottom;
    }
  }
  auto map = planar_map::from_permutations(std::move(alpha), std::move(sigma));
  return {double_diagram(std::move(map), std::move(over)), orientation{std::move(forward)}};
}

int closure_genus(const braid_word& w) {
  auto closure = braid_closure(w);
  const int s = seifert_smooth(closure.diagram, closure.orient).count;
  if (s != w.strands()) {
    throw error(errc::precondition_violated, "closure of a positive braid smoothed into " +
                                                 std::to_string(s) + " circles, expected " +
                                                 std::to_string(w.strands()));
  }
  return canonical_genus(closure.diagram, closure.orient);
}

}  // namespace tricross
