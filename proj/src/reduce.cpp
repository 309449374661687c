#include "tricross/reduce.hpp"

#include <array>
#include <sstream>

#include "tricross/error.hpp"

namespace tricross {

namespace {

bool higher(height a, height b) { return static_cast<int>(a) < static_cast<int>(b); }

}  // namespace

deconstruction deconstruct(const triple_diagram& d, const coloring& c, const orientation& o) {
  const auto& map = d.map();
  if (map.empty()) {
    throw error(errc::precondition_violated, "nothing to deconstruct in a crossingless diagram");
  }
  if (!is_proper(map, c)) throw error(errc::precondition_violated, "coloring is not proper");
  if (static_cast<int>(o.forward.size()) != map.dart_count()) {
    throw error(errc::precondition_violated, "orientation does not match the diagram");
  }
  for (int e = 0; e < map.dart_count(); ++e) {
    if (o.is_forward(e) != (c.of_dart(map, e) == face_color::white)) {
      throw error(errc::precondition_violated, "orientation is not white-on-right");
    }
  }

  const int n = map.vertex_count();
  const int old_darts = map.dart_count();
  const int total = 2 * old_darts;
  std::vector<int> alpha(total), sigma(total);
  std::vector<std::uint8_t> over(total), forward(total);
  for (int e = 0; e < old_darts; ++e) {
    alpha[e] = map.alpha(e);
    forward[e] = o.forward[e];
  }

  auto crossing = [&](std::array<int, 4> ccw, bool first_over) {
    for (int i = 0; i < 4; ++i) {
      sigma[ccw[i]] = ccw[(i + 1) % 4];
      over[ccw[i]] = (i % 2 == 0) == first_over;
    }
  };
  auto join = [&](int a, int b) {
    alpha[a] = b;
    alpha[b] = a;
  };

  for (int v = 0; v < n; ++v) {
    auto darts = map.vertex_darts(v);
    int k = 0;
    while (c.of_dart(map, darts[k]) != face_color::white) ++k;
    // Rotate so the corners ending at e1, e3, e5 are the black ones.
    std::array<int, 6> e{};
    for (int i = 0; i < 6; ++i) e[i] = darts[(k + i) % 6];
    // Strands A = {e0,e3}, B = {e1,e4}, C = {e2,e5}. Their pairwise crossings
    // sit in the white corners (e3,e4), (e1,e2), (e5,e0); the triangle side
    // facing the black corner (e0,e1) lies on C, (e2,e3) on B, (e4,e5) on A.
    const int base = old_darts + 6 * v;
    const int a_ab = base, b_ab = base + 1, b_bc = base + 2, c_bc = base + 3, c_ca = base + 4,
              a_ca = base + 5;
    const height ha = d.height_of(e[0]), hb = d.height_of(e[1]), hc = d.height_of(e[2]);
    crossing({e[3], e[4], a_ab, b_ab}, higher(ha, hb));
    crossing({e[1], e[2], b_bc, c_bc}, higher(hb, hc));
    crossing({e[5], e[0], c_ca, a_ca}, higher(hc, ha));
    join(a_ab, a_ca);
    join(b_ab, b_bc);
    join(c_bc, c_ca);
    // Each strand crosses the triangle towards the outer dart it leaves by.
    forward[a_ab] = o.forward[e[0]];
    forward[a_ca] = !o.forward[e[0]];
    forward[b_ab] = o.forward[e[1]];
    forward[b_bc] = !o.forward[e[1]];
    forward[c_ca] = o.forward[e[2]];
    forward[c_bc] = !o.forward[e[2]];
  }

  auto reduced_map = planar_map::from_permutations(std::move(alpha), std::move(sigma));

  coloring colors;
  colors.faces.assign(reduced_map.face_count(), face_color::white);
  for (int f = 0; f < reduced_map.face_count(); ++f) {
    bool inherited = false;
    for (int e : reduced_map.faces()[f]) {
      if (e >= old_darts) continue;
      const face_color old = c.of_dart(map, e);
      if (inherited && colors.faces[f] != old) {
        throw error(errc::precondition_violated, "deconstruction merged faces of different colors");
      }
      colors.faces[f] = old;
      inherited = true;
    }
  }
  if (!is_proper(reduced_map, colors)) {
    throw error(errc::coloring_impossible, "inherited coloring of the deconstruction is not proper");
  }

  deconstruction out{double_diagram(std::move(reduced_map), std::move(over)), std::move(colors),
                     orientation{std::move(forward)}};
  if (!is_strand_consistent(out.diagram.map(), out.orient)) {
    throw error(errc::orientation_inconsistent, "inherited orientation breaks a strand");
  }
  return out;
}

seifert_state seifert_smooth(const double_diagram& d, const orientation& o) {
  const auto& map = d.map();
  seifert_state out;
  if (!map.empty()) {
    if (!is_strand_consistent(map, o)) {
      throw error(errc::precondition_violated, "Seifert smoothing needs a strand-consistent orientation");
    }
    // Each incoming dart is reglued to the neighbouring outgoing dart.
    std::vector<int> smooth(map.dart_count(), -1);
    for (int e = 0; e < map.dart_count(); ++e) {
      if (o.is_forward(e)) continue;
      smooth[e] = o.is_forward(map.sigma(e)) ? map.sigma(e) : map.sigma_inv(e);
    }
    std::vector<char> seen(map.dart_count(), 0);
    for (int f = 0; f < map.dart_count(); ++f) {
      if (!o.is_forward(f) || seen[f]) continue;
      auto& circle = out.circles.emplace_back();
      int e = f;
      do {
        seen[e] = 1;
        circle.push_back(e);
        e = smooth[map.alpha(e)];
      } while (e != f);
    }
  }
  out.count = static_cast<int>(out.circles.size()) + d.crossingless_loops();
  return out;
}

int canonical_genus(const double_diagram& d, const orientation& o) {
  const int c = d.crossing_count();
  const int s = seifert_smooth(d, o).count;
  const int loops = d.crossingless_loops();
  const int r = (d.map().empty() ? 0 : find_strand_components(d.map()).count) + loops;
  // Euler characteristic s - c over the connected pieces of the diagram.
  const int pieces = (d.map().empty() ? 0 : 1) + loops;
  const int twice = 2 * pieces + c - s - r;
  if (twice < 0 || twice % 2 != 0) {
    throw error(errc::parity_error, "2 + c - s - r = " + std::to_string(twice) + " is not an even non-negative number");
  }
  return twice / 2;
}

pipeline_trace run_theorem1(const triple_diagram& d) {
  pipeline_trace t;
  auto& cert = t.certificate;
  if (d.map().empty()) {
    t.reduced.diagram = double_diagram::unlink(1);
    t.seifert.count = 1;
    cert = {0, 0, 1, 1, 1, 1, 0, 0};
    return t;
  }
  const auto& map = d.map();
  t.colors = majority_white(checkerboard(map));
  t.orient = natural_orientation(d, t.colors);
  t.reduced = deconstruct(d, t.colors, t.orient);
  t.seifert = seifert_smooth(t.reduced.diagram, t.reduced.orient);

  cert.n = d.crossing_count();
  cert.c = t.reduced.diagram.crossing_count();
  cert.s = t.seifert.count;
  cert.r = find_strand_components(map).count;
  cert.white_in = t.colors.white_count();
  cert.white_out = t.reduced.colors.white_count();
  cert.g = canonical_genus(t.reduced.diagram, t.reduced.orient);
  cert.bound = 2 * cert.g + cert.r - 1;

  if (find_strand_components(t.reduced.diagram.map()).count != cert.r) {
    throw error(errc::precondition_violated, "deconstruction changed the component count");
  }
  if (cert.bound > cert.n) {
    throw error(errc::bound_violation, "2g + r - 1 = " + std::to_string(cert.bound) +
                                           " exceeds n = " + std::to_string(cert.n));
  }
  return t;
}

genus_certificate theorem1_pipeline(const triple_diagram& d) { return run_theorem1(d).certificate; }

std::string to_kv(const genus_certificate& cert) {
  std::ostringstream out;
  out << "n=" << cert.n << " c=" << cert.c << " s=" << cert.s << " r=" << cert.r
      << " white_in=" << cert.white_in << " white_out=" << cert.white_out << " g=" << cert.g
      << " bound=" << cert.bound;
  return out.str();
}

}  // namespace tricross
