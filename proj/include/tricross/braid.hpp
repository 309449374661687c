#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tricross/diagram.hpp"

namespace tricross {

// Positive braid word: letters are generator indices 1..strands-1.
class braid_word {
 public:
  braid_word(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const noexcept { return letters_; }

  friend bool operator==(const braid_word&, const braid_word&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// "p: i1 i2 ... ik", e.g. "2: 1 1 1".
braid_word parse_braid(std::string_view text);
std::string to_string(const braid_word& w);

// (s1 s2 ... s_{p-1})^q
braid_word torus_word(int p, int q);

// Cycles of the permutation the word induces on strand positions.
int permutation_cycles(const braid_word& w);

struct closure_diagram {
  double_diagram diagram;
  orientation orient;  // all strands run downwards through the braid
};

// Standard closure. At s_i the strand coming from position i+1 passes over
// the one from position i, which makes every crossing positive.
closure_diagram braid_closure(const braid_word& w);

int closure_genus(const braid_word& w);

}  // namespace tricross
