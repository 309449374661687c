#include "tricross/bracket.hpp"

#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "tricross/error.hpp"

namespace tricross {

laurent_poly laurent_poly::monomial(std::int64_t c, int exponent) {
  laurent_poly p;
  p.add_term(c, exponent);
  return p;
}

std::int64_t laurent_poly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void laurent_poly::add_term(std::int64_t c, int exponent) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

laurent_poly& laurent_poly::operator+=(const laurent_poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(c, e);
  return *this;
}

laurent_poly& laurent_poly::operator*=(const laurent_poly& rhs) {
  laurent_poly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(c1 * c2, e1 + e2);
  }
  *this = std::move(out);
  return *this;
}

laurent_poly laurent_poly::pow(int e) const {
  if (e < 0) throw error(errc::bad_parameters, "negative power of a Laurent polynomial");
  laurent_poly out = constant(1), base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) out *= base;
    base *= base;
  }
  return out;
}

laurent_poly laurent_poly::inverted() const {
  laurent_poly out;
  for (const auto& [e, c] : terms_) out.add_term(c, -e);
  return out;
}

std::string to_string(const laurent_poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 'A';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

laurent_poly loop_value() {
  laurent_poly d = laurent_poly::monomial(-1, 2);
  d.add_term(-1, -2);
  return d;
}

namespace {

// Smoothing partners at one crossing: arms listed ccw starting from an
// over-strand dart y0. The A-smoothing opens the corners swept when the
// over-strand turns counterclockwise, i.e. joins (y1,y2) and (y3,y0).
struct crossing_arms {
  std::array<int, 4> y;
  std::array<std::pair<int, int>, 2> a_pairs() const { return {{{y[1], y[2]}, {y[3], y[0]}}}; }
  std::array<std::pair<int, int>, 2> b_pairs() const { return {{{y[0], y[1]}, {y[2], y[3]}}}; }
};

std::vector<crossing_arms> arms_of(const double_diagram& d) {
  const auto& map = d.map();
  std::vector<crossing_arms> out(map.vertex_count());
  for (int v = 0; v < map.vertex_count(); ++v) {
    auto darts = map.vertex_darts(v);
    const int start = d.is_over(darts[0]) ? 0 : 1;
    for (int i = 0; i < 4; ++i) out[v].y[i] = darts[(start + i) % 4];
  }
  return out;
}

void check_cap(const double_diagram& d, const bracket_options& opts) {
  if (d.crossing_count() > opts.cap) {
    throw error(errc::too_large, std::to_string(d.crossing_count()) + " crossings exceed the bracket cap of " +
                                     std::to_string(opts.cap));
  }
}

// histogram[a][loops] -> bracket polynomial
laurent_poly assemble(const std::vector<std::vector<std::int64_t>>& histogram, int crossings, int extra_loops) {
  const laurent_poly d = loop_value();
  std::vector<laurent_poly> dpow{laurent_poly::constant(1)};
  laurent_poly out;
  for (int a = 0; a <= crossings; ++a) {
    for (std::size_t loops = 1; loops < histogram[a].size(); ++loops) {
      const std::int64_t count = histogram[a][loops];
      if (count == 0) continue;
      const std::size_t e = loops - 1 + extra_loops;
      while (dpow.size() <= e) dpow.push_back(dpow.back() * d);
      out += laurent_poly::monomial(count, 2 * a - crossings) * dpow[e];
    }
  }
  return out;
}

class rollback_dsu {
 public:
  explicit rollback_dsu(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      const int b = history_.back();
      history_.pop_back();
      size_[parent_[b]] -= size_[b];
      parent_[b] = b;
    }
  }

  std::size_t mark() const { return history_.size(); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

}  // namespace

laurent_poly bracket(const double_diagram& d, bracket_options opts) {
  check_cap(d, opts);
  const auto& map = d.map();
  if (map.empty()) return loop_value().pow(d.crossingless_loops() - 1);

  const int n = map.dart_count();
  const int c = map.vertex_count();
  const auto arms = arms_of(d);
  rollback_dsu dsu(n);
  int base_unions = 0;
  for (int e = 0; e < n; ++e) {
    if (e < map.alpha(e) && dsu.unite(e, map.alpha(e))) ++base_unions;
  }
  std::vector<std::vector<std::int64_t>> histogram(c + 1, std::vector<std::int64_t>(n + 1, 0));

  // Each state is a leaf; loops = darts - successful unions.
  auto expand = [&](auto&& self, int j, int a_count, int unions) -> void {
    if (j == c) {
      ++histogram[a_count][n - unions];
      return;
    }
    for (bool use_a : {true, false}) {
      const auto mark = dsu.mark();
      int added = 0;
      for (auto [x, y] : use_a ? arms[j].a_pairs() : arms[j].b_pairs()) added += dsu.unite(x, y);
      self(self, j + 1, a_count + (use_a ? 1 : 0), unions + added);
      dsu.rollback(mark);
    }
  };
  expand(expand, 0, 0, base_unions);
  return assemble(histogram, c, d.crossingless_loops());
}

laurent_poly bracket_naive(const double_diagram& d, bracket_options opts) {
  check_cap(d, opts);
  const auto& map = d.map();
  if (map.empty()) return loop_value().pow(d.crossingless_loops() - 1);

  const int n = map.dart_count();
  const int c = map.vertex_count();
  const auto arms = arms_of(d);
  std::vector<std::vector<std::int64_t>> histogram(c + 1, std::vector<std::int64_t>(n + 1, 0));
  std::vector<int> parent(n);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int components = n;
    auto unite = [&](int x, int y) {
      x = find(x);
      y = find(y);
      if (x != y) {
        parent[x] = y;
        --components;
      }
    };
    for (int e = 0; e < n; ++e) unite(e, map.alpha(e));
    int a_count = 0;
    for (int j = 0; j < c; ++j) {
      const bool use_a = (state >> j) & 1;
      a_count += use_a;
      for (auto [x, y] : use_a ? arms[j].a_pairs() : arms[j].b_pairs()) unite(x, y);
    }
    ++histogram[a_count][components];
  }
  return assemble(histogram, c, d.crossingless_loops());
}

int crossing_sign(const double_diagram& d, const orientation& o, int vertex) {
  const auto& map = d.map();
  int over_out = -1, under_out = -1;
  for (int e : map.vertex_darts(vertex)) {
    if (!o.is_forward(e)) continue;
    (d.is_over(e) ? over_out : under_out) = e;
  }
  if (over_out < 0 || under_out < 0) {
    throw error(errc::precondition_violated, "crossing without one outgoing dart per strand");
  }
  return map.sigma(over_out) == under_out ? 1 : -1;
}

int writhe(const double_diagram& d, const orientation& o) {
  if (d.map().empty()) return 0;
  if (!is_strand_consistent(d.map(), o)) {
    throw error(errc::precondition_violated, "writhe needs a strand-consistent orientation");
  }
  int w = 0;
  for (int v = 0; v < d.crossing_count(); ++v) w += crossing_sign(d, o, v);
  return w;
}

namespace {

laurent_poly writhe_factor(int w) {
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  return laurent_poly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
}

std::set<laurent_poly> normalized_over_orientations(const double_diagram& d, const laurent_poly& br) {
  std::set<laurent_poly> out;
  if (d.map().empty()) {
    out.insert(br);
    return out;
  }
  const auto comps = find_strand_components(d.map());
  const int classes = 1 << (comps.count - 1);
  for (int mask = 0; mask < classes; ++mask) {
    std::vector<bool> flip(comps.count, false);
    for (int k = 1; k < comps.count; ++k) flip[k] = (mask >> (k - 1)) & 1;
    const auto o = component_orientation(d.map(), comps, flip);
    out.insert(writhe_factor(writhe(d, o)) * br);
  }
  return out;
}

int component_count(const double_diagram& d) {
  return (d.map().empty() ? 0 : find_strand_components(d.map()).count) + d.crossingless_loops();
}

}  // namespace

laurent_poly normalized(const double_diagram& d, const orientation& o, bracket_options opts) {
  return writhe_factor(writhe(d, o)) * bracket(d, opts);
}

link_evidence same_link_evidence(const double_diagram& a, const double_diagram& b, bracket_options opts) {
  if (component_count(a) != component_count(b)) return link_evidence::distinguished;
  const auto pa = normalized_over_orientations(a, bracket(a, opts));
  const auto pb = normalized_over_orientations(b, bracket(b, opts));
  return pa == pb ? link_evidence::consistent : link_evidence::distinguished;
}

}  // namespace tricross
