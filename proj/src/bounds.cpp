#include "tricross/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "tricross/error.hpp"

namespace tricross {

std::string_view to_string(lower_source s) noexcept {
  switch (s) {
    case lower_source::theorem1: return "theorem1";
    case lower_source::third_of_c2: return "third-of-c2";
    case lower_source::half_of_c2_alternating: return "half-of-c2-alternating";
    case lower_source::braid_index: return "braid-index";
  }
  return "?";
}

std::string_view to_string(upper_source s) noexcept {
  switch (s) {
    case upper_source::lemma2: return "lemma2";
    case upper_source::torus_formula: return "torus-formula";
    case upper_source::positive_braid: return "positive-braid";
    case upper_source::connected_sum: return "connected-sum";
  }
  return "?";
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

int lower_theorem1(int genus, int components) {
  if (genus < 0 || components < 1) throw error(errc::bad_parameters, "need genus >= 0 and r >= 1");
  return 2 * genus + components - 1;
}

lower_bound lower_prior_bound(int c2, std::optional<bool> alternating, std::optional<int> braid_index) {
  if (c2 < 0) throw error(errc::bad_parameters, "negative crossing number");
  lower_bound best{ceil_div(c2, 3), lower_source::third_of_c2};
  if (alternating.value_or(false) && ceil_div(c2, 2) > best.value) {
    best = {ceil_div(c2, 2), lower_source::half_of_c2_alternating};
  }
  if (braid_index && *braid_index - 1 > best.value) best = {*braid_index - 1, lower_source::braid_index};
  return best;
}

int lower_prior(int c2, std::optional<bool> alternating, std::optional<int> braid_index, int components) {
  if (components < 1) throw error(errc::bad_parameters, "need r >= 1");
  return lower_prior_bound(c2, alternating, braid_index).value;
}

std::optional<int> upper_lemma2(int c2, bool is_t2n, bool is_trivial) {
  if (c2 < 0) throw error(errc::bad_parameters, "negative crossing number");
  if (is_trivial || is_t2n) return std::nullopt;
  return c2 - 2;
}

int torus_c3(int p, int q) {
  if (p < 1 || q < 1) throw error(errc::bad_parameters, "torus parameters must be positive");
  if (std::gcd(p, q) != 1) {
    throw error(errc::not_coprime, "T(" + std::to_string(p) + "," + std::to_string(q) + ") is not a knot");
  }
  return (p - 1) * (q - 1);
}

int positive_braid_c3(const braid_word& w) {
  braid_closure(w);  // rejects disconnected closures
  if (permutation_cycles(w) != 1) throw error(errc::not_a_knot, "closure of " + to_string(w) + " is a link");
  const int value = w.length() - w.strands() + 1;
  const int genus = closure_genus(w);
  if (value != 2 * genus) {
    throw error(errc::precondition_violated, "k - p + 1 = " + std::to_string(value) +
                                                 " differs from twice the closure genus " + std::to_string(genus));
  }
  return value;
}

bound_certificate connected_sum(const std::vector<bound_certificate>& certs, const std::vector<int>& genera) {
  if (certs.empty() || certs.size() != genera.size()) {
    throw error(errc::precondition_violated, "need one genus per summand");
  }
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (!certs[i].exact || *certs[i].exact != 2 * genera[i]) {
      throw error(errc::precondition_violated,
                  certs[i].name + " lacks an exact value equal to twice its genus");
    }
  }
  if (certs.size() == 1) return certs.front();
  bound_certificate out;
  int genus = 0, total = 0;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    out.name += (i ? "#" : "") + certs[i].name;
    genus += genera[i];
    total += *certs[i].exact;
  }
  // genus is additive under connected sum
  out.lower = {lower_theorem1(genus, 1), lower_source::theorem1};
  out.upper = upper_bound{total, upper_source::connected_sum};
  if (out.lower.value == total) out.exact = total;
  return out;
}

std::optional<std::pair<int, int>> parse_torus_name(std::string_view name) {
  if (name.size() > 3 && name.substr(0, 2) == "m(" && name.back() == ')') {
    name = name.substr(2, name.size() - 3);
  }
  if (name.size() < 6 || name.substr(0, 2) != "T(" || name.back() != ')') return std::nullopt;
  const auto body = name.substr(2, name.size() - 3);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  int p = 0, q = 0;
  auto a = std::from_chars(body.data(), body.data() + comma, p);
  auto b = std::from_chars(body.data() + comma + 1, body.data() + body.size(), q);
  if (a.ec != std::errc{} || a.ptr != body.data() + comma || b.ec != std::errc{} ||
      b.ptr != body.data() + body.size() || p < 1 || q < 1) {
    return std::nullopt;
  }
  return std::pair{p, q};
}

knot_record torus_record(int p, int q) {
  torus_c3(p, q);
  if (p > q) std::swap(p, q);
  knot_record r;
  r.name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
  r.c2 = q * (p - 1);
  r.genus = (p - 1) * (q - 1) / 2;
  r.is_t2n = p == 2;
  r.is_trivial = p == 1;
  r.alternating = p <= 2;
  r.braid_index = p;
  r.torus = std::pair{p, q};
  return r;
}

knot_record mirror_record(const knot_record& r) {
  knot_record m = r;
  m.name = "m(" + r.name + ")";
  return m;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    auto first = field.find_first_not_of(" \t\r");
    auto last = field.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

int parse_int(const std::string& s, int line, const char* column) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw error(errc::parse_error, "line " + std::to_string(line) + ": bad " + column + " '" + s + "'");
  }
  return v;
}

bool parse_flag(const std::string& s, int line, const char* column) {
  const int v = parse_int(s, line, column);
  if (v != 0 && v != 1) throw error(errc::parse_error, "line " + std::to_string(line) + ": " + column + " must be 0 or 1");
  return v == 1;
}

}  // namespace

std::vector<knot_record> parse_knot_table(std::istream& in) {
  static const std::vector<std::string> required{"name", "c2", "genus", "components", "is_t2n", "is_trivial"};
  static const std::vector<std::string> optional_cols{"alternating", "braid_index", "torus"};
  std::vector<knot_record> out;
  std::map<std::string, std::size_t> col;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    auto fields = split_csv(line);
    if (col.empty()) {
      for (std::size_t i = 0; i < fields.size(); ++i) col[fields[i]] = i;
      for (std::size_t i = 0; i < required.size(); ++i) {
        if (i >= fields.size() || fields[i] != required[i]) {
          throw error(errc::parse_error, "header must start with name,c2,genus,components,is_t2n,is_trivial");
        }
      }
      for (const auto& f : fields) {
        if (std::find(required.begin(), required.end(), f) == required.end() &&
            std::find(optional_cols.begin(), optional_cols.end(), f) == optional_cols.end()) {
          throw error(errc::parse_error, "unknown column '" + f + "'");
        }
      }
      continue;
    }
    if (fields.size() != col.size()) {
      throw error(errc::parse_error, "line " + std::to_string(line_no) + ": expected " + std::to_string(col.size()) +
                                         " fields, found " + std::to_string(fields.size()));
    }
    auto field = [&](const std::string& name) -> const std::string* {
      auto it = col.find(name);
      return it == col.end() || fields[it->second].empty() ? nullptr : &fields[it->second];
    };
    knot_record r;
    r.name = fields[0];
    if (r.name.empty()) throw error(errc::parse_error, "line " + std::to_string(line_no) + ": empty name");
    r.c2 = parse_int(fields[1], line_no, "c2");
    r.genus = parse_int(fields[2], line_no, "genus");
    r.components = parse_int(fields[3], line_no, "components");
    r.is_t2n = parse_flag(fields[4], line_no, "is_t2n");
    r.is_trivial = parse_flag(fields[5], line_no, "is_trivial");
    if (auto s = field("alternating")) r.alternating = parse_flag(*s, line_no, "alternating");
    if (auto s = field("braid_index")) r.braid_index = parse_int(*s, line_no, "braid_index");
    if (auto s = field("torus")) {
      const auto colon = s->find(':');
      if (colon == std::string::npos) throw error(errc::parse_error, "line " + std::to_string(line_no) + ": torus must be p:q");
      r.torus = std::pair{parse_int(s->substr(0, colon), line_no, "torus p"),
                          parse_int(s->substr(colon + 1), line_no, "torus q")};
    }
    if (r.c2 < 0 || r.genus < 0 || r.components < 1 || (r.braid_index && *r.braid_index < 1) ||
        (r.torus && (r.torus->first < 1 || r.torus->second < 1))) {
      throw error(errc::range_error, "line " + std::to_string(line_no) + ": value out of range for " + r.name);
    }
    out.push_back(std::move(r));
  }
  if (col.empty()) throw error(errc::parse_error, "missing header");
  return out;
}

std::vector<knot_record> load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  return parse_knot_table(in);
}

bound_certificate certify(const knot_record& r) {
  bound_certificate c;
  c.name = r.name;
  c.lower = {lower_theorem1(r.genus, r.components), lower_source::theorem1};
  const auto prior = lower_prior_bound(r.c2, r.alternating, r.braid_index);
  if (prior.value > c.lower.value) c.lower = prior;

  auto offer = [&](int value, upper_source source) {
    if (!c.upper || value < c.upper->value) c.upper = upper_bound{value, source};
  };
  auto torus = r.torus ? r.torus : parse_torus_name(r.name);
  if (r.is_trivial) {
    offer(0, upper_source::torus_formula);
  } else if (torus) {
    if (std::gcd(torus->first, torus->second) == 1) {
      offer(torus_c3(torus->first, torus->second), upper_source::torus_formula);
    } else {
      c.notes = "torus link: formula needs coprime parameters";
    }
  }
  if (auto u = upper_lemma2(r.c2, r.is_t2n, r.is_trivial)) offer(*u, upper_source::lemma2);

  if (c.upper) {
    if (c.lower.value == c.upper->value) {
      c.exact = c.lower.value;
    } else if (c.lower.value > c.upper->value) {
      c.notes = "data error: lower bound exceeds upper bound";
    }
  }
  return c;
}

std::string csv_header() { return "name,lower,lower_from,upper,upper_from,exact,notes"; }

std::string format_certificate(const bound_certificate& c, report_format f) {
  std::ostringstream out;
  const std::string lower = std::to_string(c.lower.value);
  const std::string lower_from(to_string(c.lower.source));
  const std::string upper = c.upper ? std::to_string(c.upper->value) : "";
  const std::string upper_from = c.upper ? std::string(to_string(c.upper->source)) : "";
  const std::string exact = c.exact ? std::to_string(*c.exact) : "";
  switch (f) {
    case report_format::text:
      out << c.name << ' ' << lower << '(' << lower_from << ") ";
      if (c.upper) {
        out << upper << '(' << upper_from << ')';
      } else {
        out << '-';
      }
      if (c.exact) out << " exact=" << exact;
      if (!c.notes.empty()) out << " # " << c.notes;
      break;
    case report_format::kv:
      out << "name=" << c.name << " lower=" << lower << " lower_from=" << lower_from
          << " upper=" << (c.upper ? upper : "none") << " upper_from=" << (c.upper ? upper_from : "none")
          << " exact=" << (c.exact ? exact : "none");
      if (!c.notes.empty()) out << " notes=\"" << c.notes << '"';
      break;
    case report_format::csv:
      out << c.name << ',' << lower << ',' << lower_from << ',' << upper << ',' << upper_from << ',' << exact << ','
          << c.notes;
      break;
  }
  return out.str();
}

}  // namespace tricross
