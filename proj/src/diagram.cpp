#include "tricross/diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "tricross/error.hpp"

namespace tricross {

char to_char(height h) noexcept {
  switch (h) {
    case height::top: return 'T';
    case height::middle: return 'M';
    case height::bottom: return 'B';
  }
  return '?';
}

// --- diagram types ----------------------------------------------------------

triple_diagram::triple_diagram(planar_map map, std::vector<height> heights)
    : map_(std::move(map)), heights_(std::move(heights)) {
  if (map_.empty()) {
    throw error(errc::precondition_violated, "use triple_diagram::unknot() for a crossingless diagram");
  }
  if (map_.valence() != 6) throw error(errc::wrong_valence, "triple diagram needs 6-valent vertices");
  if (static_cast<int>(heights_.size()) != map_.dart_count()) {
    throw error(errc::precondition_violated, "one height per dart required");
  }
  for (int v = 0; v < map_.vertex_count(); ++v) {
    std::array<int, 3> used{};
    for (int d : map_.vertex_darts(v)) {
      if (heights_[d] != heights_[map_.opposite(d)]) {
        throw error(errc::precondition_violated, "strand darts carry different heights");
      }
      ++used[static_cast<int>(heights_[d])];
    }
    if (used != std::array<int, 3>{2, 2, 2}) {
      throw error(errc::precondition_violated,
                  "vertex " + std::to_string(v) + " does not carry exactly one each of T, M, B");
    }
  }
}

triple_diagram triple_diagram::unknot() {
  triple_diagram d;
  d.loops_ = 1;
  return d;
}

double_diagram::double_diagram(planar_map map, std::vector<std::uint8_t> over, int crossingless_loops)
    : map_(std::move(map)), over_(std::move(over)), loops_(crossingless_loops) {
  if (loops_ < 0) throw error(errc::precondition_violated, "negative loop count");
  if (map_.empty()) {
    if (loops_ == 0) throw error(errc::precondition_violated, "empty diagram");
    over_.clear();
    return;
  }
  if (map_.valence() != 4) throw error(errc::wrong_valence, "double diagram needs 4-valent vertices");
  if (static_cast<int>(over_.size()) != map_.dart_count()) {
    throw error(errc::precondition_violated, "one over flag per dart required");
  }
  for (int v = 0; v < map_.vertex_count(); ++v) {
    int over_darts = 0;
    for (int d : map_.vertex_darts(v)) {
      over_[d] = over_[d] ? 1 : 0;
      if (over_[d] != (over_[map_.opposite(d)] ? 1 : 0)) {
        throw error(errc::precondition_violated, "strand darts disagree on over/under");
      }
      over_darts += over_[d];
    }
    if (over_darts != 2) {
      throw error(errc::precondition_violated,
                  "crossing " + std::to_string(v) + " needs exactly one over-strand");
    }
  }
}

double_diagram double_diagram::unlink(int loops) { return double_diagram(planar_map{}, {}, loops); }

// --- PD parsing -------------------------------------------------------------

namespace {

struct pd_record {
  char kind = 0;
  std::vector<long long> labels;
  std::string heights;
};

struct pd_text {
  char kind = 0;
  std::vector<pd_record> records;
  std::optional<int> loops;
};

class pd_scanner {
 public:
  explicit pd_scanner(std::string_view text) : text_(text) {}

  pd_text run() {
    pd_text out;
    for (skip(); pos_ < text_.size(); skip()) {
      const char c = text_[pos_];
      if (c == 'l') {
        expect_word("loops=");
        if (out.loops) fail("duplicate loops header");
        const long long k = number();
        if (k < 0 || k > 1'000'000) fail("loop count out of range");
        out.loops = static_cast<int>(k);
      } else if (c == 'T' || c == 'X') {
        if (out.kind && out.kind != c) fail("mixed T and X records");
        out.kind = c;
        out.records.push_back(record(c));
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + pos_, '\n'));
    throw error(errc::parse_error, "line " + std::to_string(line) + ": " + msg);
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void skip_inline_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  void expect(char c) {
    skip_inline_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  long long number() {
    skip_inline_space();
    long long value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  pd_record record(char kind) {
    pd_record r;
    r.kind = kind;
    ++pos_;
    expect('(');
    const int arity = kind == 'T' ? 6 : 4;
    for (int i = 0; i < arity; ++i) {
      if (i > 0) expect(',');
      const long long label = number();
      if (label <= 0) fail("edge labels must be positive");
      r.labels.push_back(label);
    }
    expect(')');
    if (kind == 'T') {
      expect('/');
      if (pos_ + 3 > text_.size()) fail("expected three height letters");
      r.heights = std::string(text_.substr(pos_, 3));
      std::string sorted = r.heights;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != "BMT") fail("heights must be a permutation of T, M, B");
      pos_ += 3;
    }
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
        text_[pos_] != '#') {
      fail("records must be separated by whitespace");
    }
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Pairs darts carrying the same edge label.
std::vector<int> pair_labels(const std::vector<pd_record>& records, int arity) {
  std::map<long long, std::vector<int>> where;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (int j = 0; j < arity; ++j) {
      where[records[i].labels[j]].push_back(static_cast<int>(i) * arity + j);
    }
  }
  std::vector<int> alpha(records.size() * arity, -1);
  for (const auto& [label, darts] : where) {
    if (darts.size() != 2) {
      throw error(errc::label_count, "edge label " + std::to_string(label) + " occurs " +
                                         std::to_string(darts.size()) + " times, expected 2");
    }
    alpha[darts[0]] = darts[1];
    alpha[darts[1]] = darts[0];
  }
  return alpha;
}

std::vector<int> record_rotation(std::size_t records, int arity) {
  std::vector<int> sigma(records * arity);
  for (std::size_t i = 0; i < records; ++i) {
    for (int j = 0; j < arity; ++j) {
      sigma[i * arity + j] = static_cast<int>(i) * arity + (j + 1) % arity;
    }
  }
  return sigma;
}

height height_from_char(char c) {
  return c == 'T' ? height::top : c == 'M' ? height::middle : height::bottom;
}

triple_diagram build_triple(const pd_text& pd) {
  const int loops = pd.loops.value_or(0);
  if (pd.records.empty()) {
    if (loops == 1) return triple_diagram::unknot();
    if (loops == 0) throw error(errc::parse_error, "no crossings and no loops");
    throw error(errc::disconnected, "split triple diagram (several crossingless loops)");
  }
  if (loops > 0) throw error(errc::disconnected, "crossingless loops alongside triple crossings");
  auto alpha = pair_labels(pd.records, 6);
  auto map = planar_map::from_permutations(std::move(alpha), record_rotation(pd.records.size(), 6));
  std::vector<height> heights(map.dart_count());
  for (std::size_t i = 0; i < pd.records.size(); ++i) {
    for (int j = 0; j < 6; ++j) heights[i * 6 + j] = height_from_char(pd.records[i].heights[j % 3]);
  }
  return triple_diagram(std::move(map), std::move(heights));
}

double_diagram build_double(const pd_text& pd) {
  const int loops = pd.loops.value_or(0);
  if (pd.records.empty()) {
    if (loops == 0) throw error(errc::parse_error, "no crossings and no loops");
    return double_diagram::unlink(loops);
  }
  auto alpha = pair_labels(pd.records, 4);
  auto map = planar_map::from_permutations(std::move(alpha), record_rotation(pd.records.size(), 4));
  std::vector<std::uint8_t> over(map.dart_count());
  for (int d = 0; d < map.dart_count(); ++d) over[d] = (d % 4) % 2;  // {b,d} over
  return double_diagram(std::move(map), std::move(over), loops);
}

// Edge labels 1..E in order of first appearance when records are listed
// starting from start_of(v) at each vertex.
template <class StartOf>
std::vector<int> edge_labels(const planar_map& map, StartOf start_of) {
  std::vector<int> label(map.dart_count(), 0);
  int next = 1;
  for (int v = 0; v < map.vertex_count(); ++v) {
    auto darts = map.vertex_darts(v);
    const int k = static_cast<int>(darts.size());
    const int s = start_of(v);
    for (int i = 0; i < k; ++i) {
      const int d = darts[(s + i) % k];
      if (label[d] == 0) label[d] = label[map.alpha(d)] = next++;
    }
  }
  return label;
}

}  // namespace

triple_diagram parse_triple_pd(std::string_view text) {
  auto pd = pd_scanner(text).run();
  if (pd.kind == 'X') throw error(errc::parse_error, "expected T(...) records, found X(...)");
  return build_triple(pd);
}

double_diagram parse_double_pd(std::string_view text) {
  auto pd = pd_scanner(text).run();
  if (pd.kind == 'T') throw error(errc::parse_error, "expected X(...) records, found T(...)");
  return build_double(pd);
}

std::variant<triple_diagram, double_diagram> parse_pd(std::string_view text) {
  auto pd = pd_scanner(text).run();
  if (pd.kind == 'T') return build_triple(pd);
  return build_double(pd);
}

std::string serialize(const triple_diagram& d) {
  const auto& map = d.map();
  if (map.empty()) return "loops=" + std::to_string(d.crossingless_loops());
  auto label = edge_labels(map, [](int) { return 0; });
  std::ostringstream out;
  for (int v = 0; v < map.vertex_count(); ++v) {
    auto darts = map.vertex_darts(v);
    if (v > 0) out << ' ';
    out << "T(";
    for (int i = 0; i < 6; ++i) out << (i ? "," : "") << label[darts[i]];
    out << ")/";
    for (int i = 0; i < 3; ++i) out << to_char(d.height_of(darts[i]));
  }
  return out.str();
}

std::string serialize(const double_diagram& d) {
  const auto& map = d.map();
  std::ostringstream out;
  if (d.crossingless_loops() > 0) {
    out << "loops=" << d.crossingless_loops();
    if (!map.empty()) out << ' ';
  }
  auto start = [&](int v) { return d.is_over(map.vertex_darts(v)[0]) ? 1 : 0; };
  auto label = edge_labels(map, start);
  for (int v = 0; v < map.vertex_count(); ++v) {
    auto darts = map.vertex_darts(v);
    if (v > 0) out << ' ';
    out << "X(";
    for (int i = 0; i < 4; ++i) out << (i ? "," : "") << label[darts[(start(v) + i) % 4]];
    out << ')';
  }
  return out.str();
}

// --- coloring and orientation -----------------------------------------------

int coloring::white_count() const {
  return static_cast<int>(std::count(faces.begin(), faces.end(), face_color::white));
}

bool is_proper(const planar_map& map, const coloring& c) {
  if (static_cast<int>(c.faces.size()) != map.face_count()) return false;
  for (int d = 0; d < map.dart_count(); ++d) {
    if (c.of_dart(map, d) == c.of_dart(map, map.alpha(d))) return false;
  }
  return true;
}

coloring checkerboard(const planar_map& map) {
  coloring c;
  if (map.empty()) return c;
  const int faces = map.face_count();
  std::vector<int> color(faces, -1);
  // faces adjacent across each edge
  std::vector<std::vector<int>> across(faces);
  for (int d = 0; d < map.dart_count(); ++d) {
    across[map.face_of(d)].push_back(map.face_of(map.alpha(d)));
  }
  std::vector<int> queue{map.face_of(0)};
  color[queue[0]] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int f = queue[head];
    for (int g : across[f]) {
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        queue.push_back(g);
      } else if (color[g] == color[f]) {
        throw error(errc::coloring_impossible,
                    "faces " + std::to_string(f) + " and " + std::to_string(g) + " share an edge and a color");
      }
    }
  }
  c.faces.resize(faces);
  for (int f = 0; f < faces; ++f) {
    if (color[f] < 0) throw error(errc::coloring_impossible, "face unreachable");
    c.faces[f] = color[f] == 0 ? face_color::white : face_color::black;
  }
  return c;
}

coloring swapped(const coloring& c) {
  coloring out = c;
  for (auto& f : out.faces) f = f == face_color::white ? face_color::black : face_color::white;
  return out;
}

coloring majority_white(const coloring& c) {
  return c.white_count() < c.black_count() ? swapped(c) : c;
}

orientation natural_orientation(const triple_diagram& d, const coloring& c) {
  const auto& map = d.map();
  if (!is_proper(map, c)) throw error(errc::precondition_violated, "coloring is not proper");
  orientation o;
  o.forward.resize(map.dart_count());
  for (int e = 0; e < map.dart_count(); ++e) o.forward[e] = c.of_dart(map, e) == face_color::white;
  if (!is_strand_consistent(map, o) || !is_alternating(map, o)) {
    throw error(errc::orientation_inconsistent, "white-on-right rule breaks a strand");
  }
  return o;
}

bool is_strand_consistent(const planar_map& map, const orientation& o) {
  if (static_cast<int>(o.forward.size()) != map.dart_count()) return false;
  for (int d = 0; d < map.dart_count(); ++d) {
    if (o.is_forward(d) == o.is_forward(map.alpha(d))) return false;
    if (o.is_forward(d) == o.is_forward(map.opposite(d))) return false;
  }
  return true;
}

bool is_alternating(const planar_map& map, const orientation& o) {
  for (int d = 0; d < map.dart_count(); ++d) {
    if (o.is_forward(d) == o.is_forward(map.sigma(d))) return false;
  }
  return true;
}

bool white_faces_coherent(const planar_map& map, const coloring& c, const orientation& o) {
  for (int f = 0; f < map.face_count(); ++f) {
    if (c.faces[f] != face_color::white) continue;
    const auto& cycle = map.faces()[f];
    const bool dir = o.is_forward(cycle.front());
    for (int d : cycle) {
      if (o.is_forward(d) != dir) return false;
    }
  }
  return true;
}

orientation reversed(const orientation& o) {
  orientation out = o;
  for (auto& f : out.forward) f = !f;
  return out;
}

orientation component_orientation(const planar_map& map, const strand_components& comps,
                                  const std::vector<bool>& flip) {
  orientation o;
  o.forward.assign(map.dart_count(), 0);
  std::vector<char> started(comps.count, 0);
  for (int d = 0; d < map.dart_count(); ++d) {
    const int k = comps.component_of[d];
    if (started[k]) continue;
    started[k] = 1;
    const bool flipped = k < static_cast<int>(flip.size()) && flip[k];
    int e = flipped ? map.alpha(d) : d;
    const int first = e;
    do {
      o.forward[e] = 1;
      e = map.opposite(map.alpha(e));
    } while (e != first);
  }
  return o;
}

// --- diagram operations -----------------------------------------------------

triple_diagram mirror(const triple_diagram& d) {
  if (d.map().empty()) return d;
  auto heights = d.heights();
  for (auto& h : heights) {
    if (h == height::top) {
      h = height::bottom;
    } else if (h == height::bottom) {
      h = height::top;
    }
  }
  return triple_diagram(d.map(), std::move(heights));
}

double_diagram mirror(const double_diagram& d) {
  auto over = d.over();
  for (auto& o : over) o = !o;
  return double_diagram(d.map(), std::move(over), d.crossingless_loops());
}

double_diagram add_kink(const double_diagram& d, int dart, kink_side side, bool over_first) {
  const auto& map = d.map();
  const int n = map.dart_count();
  std::vector<int> alpha = map.alpha_permutation();
  std::vector<int> sigma = map.sigma_permutation();
  std::vector<std::uint8_t> over = d.over();
  alpha.resize(n + 4);
  sigma.resize(n + 4);
  over.resize(n + 4);
  const int x = n;  // new darts x..x+3, ccw
  for (int i = 0; i < 4; ++i) sigma[x + i] = x + (i + 1) % 4;
  auto join = [&](int a, int b) {
    alpha[a] = b;
    alpha[b] = a;
  };
  // The strand arrives at x, runs straight to x+2, loops back to a
  // neighbour of x+2 and leaves through that neighbour's opposite.
  const int loop_end = side == kink_side::left ? x + 1 : x + 3;
  const int exit = side == kink_side::left ? x + 3 : x + 1;
  join(x + 2, loop_end);
  int loops = d.crossingless_loops();
  if (map.empty()) {
    if (loops == 0) throw error(errc::precondition_violated, "nothing to kink");
    --loops;
    join(x, exit);
  } else {
    const int other = map.alpha(dart);
    join(dart, x);
    join(exit, other);
  }
  for (int i = 0; i < 4; ++i) over[x + i] = ((i % 2 == 0) == over_first) ? 1 : 0;
  return double_diagram(planar_map::from_permutations(std::move(alpha), std::move(sigma)),
                        std::move(over), loops);
}

}  // namespace tricross
