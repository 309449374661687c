#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tricross/planar_map.hpp"

namespace tricross {

enum class height : std::uint8_t { top = 0, middle = 1, bottom = 2 };

char to_char(height h) noexcept;

// Triple-crossing diagram: a 6-valent map whose three strands at every
// vertex carry the heights T, M and B. A diagram without crossings is a
// single round circle (crossingless_loops == 1).
class triple_diagram {
 public:
  triple_diagram() = default;
  // heights are per dart; both darts of a strand share one height.
  triple_diagram(planar_map map, std::vector<height> heights);
  static triple_diagram unknot();

  const planar_map& map() const noexcept { return map_; }
  int crossing_count() const noexcept { return map_.vertex_count(); }
  int crossingless_loops() const noexcept { return loops_; }
  height height_of(int dart) const { return heights_[dart]; }
  const std::vector<height>& heights() const noexcept { return heights_; }

  friend bool operator==(const triple_diagram&, const triple_diagram&) = default;

 private:
  planar_map map_;
  std::vector<height> heights_;
  int loops_ = 0;
};

// Classical diagram: a 4-valent map with one over-strand per crossing.
// Unlike triple diagrams, extra crossingless circles may accompany the
// crossings; they are split unknotted components.
class double_diagram {
 public:
  double_diagram() = default;
  // over is per dart; set on both darts of each over-strand.
  double_diagram(planar_map map, std::vector<std::uint8_t> over, int crossingless_loops = 0);
  static double_diagram unlink(int loops);

  const planar_map& map() const noexcept { return map_; }
  int crossing_count() const noexcept { return map_.vertex_count(); }
  int crossingless_loops() const noexcept { return loops_; }
  bool is_over(int dart) const { return over_[dart] != 0; }
  const std::vector<std::uint8_t>& over() const noexcept { return over_; }

  friend bool operator==(const double_diagram&, const double_diagram&) = default;

 private:
  planar_map map_;
  std::vector<std::uint8_t> over_;
  int loops_ = 0;
};

enum class face_color : std::uint8_t { white, black };

struct coloring {
  std::vector<face_color> faces;  // indexed by planar_map face number

  int white_count() const;
  int black_count() const { return static_cast<int>(faces.size()) - white_count(); }
  face_color of_dart(const planar_map& map, int d) const { return faces[map.face_of(d)]; }
  friend bool operator==(const coloring&, const coloring&) = default;
};

// forward[d] is set when the edge of d is traversed from d's vertex
// towards alpha(d)'s vertex, i.e. d points out of its crossing.
struct orientation {
  std::vector<std::uint8_t> forward;

  bool is_forward(int d) const { return forward[d] != 0; }
  friend bool operator==(const orientation&, const orientation&) = default;
};

// --- PD text formats --------------------------------------------------------

triple_diagram parse_triple_pd(std::string_view text);
double_diagram parse_double_pd(std::string_view text);
// Dispatches on the record letter; a crossingless text yields a double diagram.
std::variant<triple_diagram, double_diagram> parse_pd(std::string_view text);

// Records are written in vertex order with edges labelled 1..E by first
// appearance. parse(serialize(D)) reproduces D up to dart renumbering.
std::string serialize(const triple_diagram& d);
std::string serialize(const double_diagram& d);

// --- coloring and orientation -----------------------------------------------

bool is_proper(const planar_map& map, const coloring& c);

// Proper 2-coloring with the face of dart 0 white.
coloring checkerboard(const planar_map& map);

// Swaps colors when black faces outnumber white ones; ties keep the input.
coloring majority_white(const coloring& c);

coloring swapped(const coloring& c);

// Every edge directed with its white face on the right.
orientation natural_orientation(const triple_diagram& d, const coloring& c);

// Each strand continues through every vertex in the same direction.
bool is_strand_consistent(const planar_map& map, const orientation& o);
// Darts around every vertex alternate in/out.
bool is_alternating(const planar_map& map, const orientation& o);
// Every white face boundary is a directed cycle.
bool white_faces_coherent(const planar_map& map, const coloring& c, const orientation& o);

orientation reversed(const orientation& o);

// Orientation following strand walks; flip[k] reverses component k.
orientation component_orientation(const planar_map& map, const strand_components& comps,
                                  const std::vector<bool>& flip = {});

// --- diagram operations -----------------------------------------------------

triple_diagram mirror(const triple_diagram& d);
double_diagram mirror(const double_diagram& d);

enum class kink_side : std::uint8_t { left, right };

// Reidemeister-I kink spliced into the edge of dart d. over_first selects
// which of the two new strands passes over.
double_diagram add_kink(const double_diagram& d, int dart, kink_side side, bool over_first);

}  // namespace tricross
