#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricross/braid.hpp"

namespace tricross {

struct knot_record {
  std::string name;
  int c2 = 0;
  int genus = 0;
  int components = 1;
  bool is_t2n = false;
  bool is_trivial = false;
  std::optional<bool> alternating;
  std::optional<int> braid_index;
  std::optional<std::pair<int, int>> torus;  // (p, q) when known to be T(p,q)
};

enum class lower_source { theorem1, third_of_c2, half_of_c2_alternating, braid_index };
enum class upper_source { lemma2, torus_formula, positive_braid, connected_sum };

std::string_view to_string(lower_source s) noexcept;
std::string_view to_string(upper_source s) noexcept;

struct lower_bound {
  int value = 0;
  lower_source source = lower_source::theorem1;
};

struct upper_bound {
  int value = 0;
  upper_source source = upper_source::lemma2;
};

struct bound_certificate {
  std::string name;
  lower_bound lower;
  std::optional<upper_bound> upper;
  std::optional<int> exact;  // set iff lower.value == upper->value
  std::string notes;
};

// 2g + r - 1; table genus stands in for the canonical genus, which can only
// weaken the bound.
int lower_theorem1(int genus, int components);

// Best of ceil(c2/3), ceil(c2/2) for alternating links, and braid index - 1.
lower_bound lower_prior_bound(int c2, std::optional<bool> alternating, std::optional<int> braid_index);
int lower_prior(int c2, std::optional<bool> alternating, std::optional<int> braid_index, int components);

// c2 - 2 for nontrivial links other than T(2,n).
std::optional<int> upper_lemma2(int c2, bool is_t2n, bool is_trivial);

// (p-1)(q-1) for coprime p, q >= 1.
int torus_c3(int p, int q);

// k - p + 1 for a positive braid with knotted closure; checked against
// twice the genus of the closure's canonical surface.
int positive_braid_c3(const braid_word& w);

// Sums certificates of knots whose exact value equals twice the genus.
bound_certificate connected_sum(const std::vector<bound_certificate>& certs, const std::vector<int>& genera);

// "T(p,q)" or a mirror "m(...)" of one.
std::optional<std::pair<int, int>> parse_torus_name(std::string_view name);

knot_record torus_record(int p, int q);
knot_record mirror_record(const knot_record& r);

std::vector<knot_record> parse_knot_table(std::istream& in);
std::vector<knot_record> load_knot_table(const std::string& path);

bound_certificate certify(const knot_record& r);

enum class report_format { text, kv, csv };

std::string csv_header();
// text: "name lower(source) upper(source) [exact=v]"
std::string format_certificate(const bound_certificate& c, report_format f);

}  // namespace tricross
