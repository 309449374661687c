#pragma once

#include <string>
#include <vector>

#include "tricross/diagram.hpp"

namespace tricross {

struct seifert_state {
  std::vector<std::vector<int>> circles;  // forward darts of each circle
  int count = 0;                          // includes crossingless loops
};

struct genus_certificate {
  int n = 0;          // triple crossings of the input
  int c = 0;          // crossings after deconstruction
  int s = 0;          // Seifert circles
  int r = 0;          // link components
  int white_in = 0;
  int white_out = 0;
  int g = 0;          // genus of the canonical Seifert surface
  int bound = 0;      // 2g + r - 1

  friend bool operator==(const genus_certificate&, const genus_certificate&) = default;
};

struct deconstruction {
  double_diagram diagram;
  coloring colors;
  orientation orient;
};

// Splits every triple crossing into three classical crossings around a new
// white triangle that borders the three black corners of the vertex. Old
// darts keep their identity; the new darts of vertex v are 6n + 6v .. +5.
// Requires a proper coloring and the white-on-right orientation.
deconstruction deconstruct(const triple_diagram& d, const coloring& c, const orientation& o);

// Orientation-respecting smoothing of every crossing.
seifert_state seifert_smooth(const double_diagram& d, const orientation& o);

// Genus of the canonical Seifert surface: (2 + c - s - r) / 2 for a connected
// diagram, with 2 per connected piece when split circles are present.
int canonical_genus(const double_diagram& d, const orientation& o);

struct pipeline_trace {
  coloring colors;         // on the triple diagram, white majority
  orientation orient;      // natural orientation of the triple diagram
  deconstruction reduced;
  seifert_state seifert;
  genus_certificate certificate;
};

pipeline_trace run_theorem1(const triple_diagram& d);
genus_certificate theorem1_pipeline(const triple_diagram& d);

// "n=.. c=.. s=.. r=.. white_in=.. white_out=.. g=.. bound=.."
std::string to_kv(const genus_certificate& cert);

}  // namespace tricross
