#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "tricross/bounds.hpp"
#include "tricross/bracket.hpp"
#include "tricross/braid.hpp"
#include "tricross/error.hpp"
#include "tricross/gen.hpp"
#include "tricross/reduce.hpp"

#ifndef TRICROSS_DEFAULT_TABLE
#define TRICROSS_DEFAULT_TABLE "data/knot_table.csv"
#endif

using namespace tricross;

namespace {

enum exit_code { ok = 0, domain_failure = 1, parse_failure = 2, resource_cap = 3 };

struct settings {
  std::string format = "text";
  std::uint64_t seed = 1;
  int jobs = 1;
  int cap = bracket_options{}.cap;
  bool timings = false;
};

struct run_report {
  std::string command;
  std::string digest;
  std::vector<std::string> outputs;
  std::vector<std::pair<std::string, double>> timings;
  bool footer = true;
};

class io_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_failure("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

report_format format_of(const settings& s) {
  if (s.format == "kv") return report_format::kv;
  if (s.format == "csv") return report_format::csv;
  return report_format::text;
}

class stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return secs;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

// Runs f over [0, count) on up to `jobs` threads; results keep index order.
template <typename F>
auto parallel_map(std::size_t count, int jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> out(count);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  // the first failing worker in index order decides the error
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string kv_to_csv_row(const std::string& kv) {
  std::istringstream in(kv);
  std::string field, row;
  while (in >> field) {
    if (!row.empty()) row += ',';
    row += field.substr(field.find('=') + 1);
  }
  return row;
}

std::string kv_to_csv_header(const std::string& kv) {
  std::istringstream in(kv);
  std::string field, row;
  while (in >> field) {
    if (!row.empty()) row += ',';
    row += field.substr(0, field.find('='));
  }
  return row;
}

// kv records, rendered as csv when asked
void emit_records(run_report& rep, const std::vector<std::string>& records, const settings& s) {
  if (format_of(s) != report_format::csv) {
    rep.outputs.insert(rep.outputs.end(), records.begin(), records.end());
    return;
  }
  rep.footer = false;
  if (records.empty()) return;
  rep.outputs.push_back(kv_to_csv_header(records.front()));
  for (const auto& r : records) rep.outputs.push_back(kv_to_csv_row(r));
}

std::variant<triple_diagram, double_diagram> load_diagram(const std::string& text, const std::string& braid) {
  if (!braid.empty()) return braid_closure(parse_braid(braid)).diagram;
  return parse_pd(text);
}

std::string describe(const triple_diagram& d) {
  std::ostringstream out;
  const auto& m = d.map();
  out << "kind=triple crossings=" << d.crossing_count();
  if (m.empty()) {
    out << " V=0 E=0 F=2 loops=1 r=1 white=1 black=1";
    return out.str();
  }
  const auto c = majority_white(checkerboard(m));
  natural_orientation(d, c);  // throws if the white-on-right rule breaks a strand
  out << " V=" << m.vertex_count() << " E=" << m.edge_count() << " F=" << m.face_count()
      << " loops=0 r=" << find_strand_components(m).count << " white=" << c.white_count()
      << " black=" << c.black_count();
  return out.str();
}

std::string describe(const double_diagram& d) {
  std::ostringstream out;
  const auto& m = d.map();
  const int loops = d.crossingless_loops();
  out << "kind=double crossings=" << d.crossing_count();
  if (m.empty()) {
    // k round circles side by side: one outer face and k disks
    const int faces = loops + 1;
    out << " V=0 E=0 F=" << faces << " loops=" << loops << " r=" << loops << " white=" << std::max(1, loops)
        << " black=" << std::min(1, loops);
    return out.str();
  }
  const auto c = majority_white(checkerboard(m));
  out << " V=" << m.vertex_count() << " E=" << m.edge_count() << " F=" << m.face_count() << " loops=" << loops
      << " r=" << find_strand_components(m).count + loops << " white=" << c.white_count()
      << " black=" << c.black_count();
  return out.str();
}

run_report cmd_validate(const settings& s, const std::string& path, const std::string& braid) {
  run_report rep{"validate", "", {}, {}, true};
  stopwatch clock;
  const std::string text = braid.empty() ? read_input(path) : braid;
  rep.digest = sha256_hex(text);
  const auto parsed = load_diagram(text, braid);
  rep.timings.emplace_back("parse", clock.lap());
  const std::string record = std::visit([](const auto& d) { return describe(d); }, parsed);
  rep.timings.emplace_back("validate", clock.lap());
  emit_records(rep, {record}, s);
  return rep;
}

std::vector<std::string> diagram_chunks(const std::string& text, bool lines) {
  if (!lines) return {text};
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

triple_diagram expect_triple(const std::string& text) {
  auto parsed = parse_pd(text);
  if (auto* t = std::get_if<triple_diagram>(&parsed)) return *t;
  const auto& d = std::get<double_diagram>(parsed);
  if (d.crossing_count() == 0 && d.crossingless_loops() == 1) return triple_diagram::unknot();
  throw error(errc::precondition_violated, "pipeline needs a triple-crossing diagram");
}

run_report cmd_pipeline(const settings& s, const std::string& path, bool lines) {
  run_report rep{"pipeline", "", {}, {}, true};
  stopwatch clock;
  const std::string text = read_input(path);
  rep.digest = sha256_hex(text);
  const auto chunks = diagram_chunks(text, lines);
  const auto records = parallel_map(chunks.size(), s.jobs, [&](std::size_t i) {
    try {
      return to_kv(theorem1_pipeline(expect_triple(chunks[i])));
    } catch (const error& e) {
      if (!lines) throw;
      throw error(e.code(), "diagram " + std::to_string(i + 1) + ": " + e.what());
    }
  });
  rep.timings.emplace_back("pipeline", clock.lap());
  emit_records(rep, records, s);
  return rep;
}

std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

run_report cmd_gen(const settings& s, int n, int count) {
  run_report rep{"gen", "", {}, {}, true};
  stopwatch clock;
  rep.digest = sha256_hex("gen n=" + std::to_string(n) + " count=" + std::to_string(count) +
                          " seed=" + std::to_string(s.seed));
  if (count < 0) throw error(errc::bad_parameters, "count must be non-negative");
  const auto diagrams = parallel_map(static_cast<std::size_t>(count), s.jobs, [&](std::size_t i) {
    return random_triple_diagram(n, item_seed(s.seed, i)).diagram;
  });
  for (const auto& d : diagrams) {
    rep.outputs.push_back("# " + canonical_code(d));
    rep.outputs.push_back(serialize(d));
  }
  rep.timings.emplace_back("gen", clock.lap());
  return rep;
}

run_report cmd_enum(const settings& s, int n, bool reflection) {
  run_report rep{"enum", "", {}, {}, true};
  stopwatch clock;
  rep.digest = sha256_hex("enum n=" + std::to_string(n) + (reflection ? " reflection" : ""));
  for (const auto& e : enumerate_triple_diagrams(n, {s.jobs, reflection})) {
    rep.outputs.push_back("# " + e.code);
    rep.outputs.push_back(serialize(e.diagram));
  }
  rep.timings.emplace_back("enumerate", clock.lap());
  return rep;
}

run_report cmd_bracket(const settings& s, const std::string& path, const std::string& braid) {
  run_report rep{"bracket", "", {}, {}, true};
  stopwatch clock;
  const std::string text = braid.empty() ? read_input(path) : braid;
  rep.digest = sha256_hex(text);
  const auto parsed = load_diagram(text, braid);
  double_diagram d;
  orientation o;
  if (const auto* t = std::get_if<triple_diagram>(&parsed)) {
    auto trace = run_theorem1(*t);
    d = trace.reduced.diagram;
    o = trace.reduced.orient;
  } else {
    d = std::get<double_diagram>(parsed);
    if (!d.map().empty()) o = component_orientation(d.map(), find_strand_components(d.map()));
  }
  rep.timings.emplace_back("prepare", clock.lap());
  const bracket_options opts{s.cap};
  const auto raw = bracket(d, opts);
  const int w = writhe(d, o);
  const auto norm = normalized(d, o, opts);
  rep.timings.emplace_back("bracket", clock.lap());
  // polynomials contain spaces, so the record is not split into csv fields
  if (format_of(s) == report_format::csv) {
    rep.footer = false;
    rep.outputs.push_back("crossings,writhe,bracket,normalized");
    rep.outputs.push_back(std::to_string(d.crossing_count()) + "," + std::to_string(w) + ",\"" + to_string(raw) +
                          "\",\"" + to_string(norm) + "\"");
  } else {
    rep.outputs.push_back("crossings=" + std::to_string(d.crossing_count()) + " writhe=" + std::to_string(w));
    rep.outputs.push_back("bracket=" + to_string(raw));
    rep.outputs.push_back("normalized=" + to_string(norm));
  }
  return rep;
}

run_report cmd_torus(const settings& s, int p, int q) {
  run_report rep{"torus", "", {}, {}, true};
  stopwatch clock;
  rep.digest = sha256_hex("torus " + std::to_string(p) + " " + std::to_string(q));
  const int c3 = torus_c3(p, q);
  if (p > q) std::swap(p, q);
  std::string record;
  if (p == 1) {
    record = "word=- crossings=0 components=1 seifert=1 genus=0 c3=0";
  } else {
    const auto w = torus_word(p, q);
    const auto cl = braid_closure(w);
    std::ostringstream out;
    out << "word=\"" << to_string(w) << "\" crossings=" << cl.diagram.crossing_count()
        << " components=" << find_strand_components(cl.diagram.map()).count
        << " seifert=" << seifert_smooth(cl.diagram, cl.orient).count
        << " genus=" << canonical_genus(cl.diagram, cl.orient) << " c3=" << c3;
    record = out.str();
  }
  rep.timings.emplace_back("torus", clock.lap());
  if (format_of(s) == report_format::csv) {
    rep.footer = false;
    rep.outputs.push_back("p,q,crossings,components,seifert,genus,c3");
    std::string row = std::to_string(p) + "," + std::to_string(q);
    std::istringstream in(record.substr(record.find(" crossings=")));
    std::string field;
    while (in >> field) row += "," + field.substr(field.find('=') + 1);
    rep.outputs.push_back(row);
  } else {
    rep.outputs.push_back(record);
  }
  return rep;
}

run_report cmd_certify(const settings& s, const std::string& path) {
  run_report rep{"certify", "", {}, {}, true};
  stopwatch clock;
  const std::string text = read_input(path);
  rep.digest = sha256_hex(text);
  std::istringstream in(text);
  const auto records = parse_knot_table(in);
  rep.timings.emplace_back("load", clock.lap());
  const auto certs = parallel_map(records.size(), s.jobs, [&](std::size_t i) { return certify(records[i]); });
  const auto f = format_of(s);
  if (f == report_format::csv) {
    rep.footer = false;
    rep.outputs.push_back(csv_header());
  }
  int exact = 0;
  for (const auto& c : certs) {
    rep.outputs.push_back(format_certificate(c, f));
    exact += c.exact.has_value();
  }
  if (f != report_format::csv) {
    rep.outputs.push_back("# summary records=" + std::to_string(certs.size()) + " exact=" + std::to_string(exact));
  }
  rep.timings.emplace_back("certify", clock.lap());
  return rep;
}

void print(const run_report& rep, const settings& s) {
  for (const auto& line : rep.outputs) std::cout << line << '\n';
  if (rep.footer) {
    std::cout << "# report command=" << rep.command << " inputs=sha256:" << rep.digest
              << " outputs=" << rep.outputs.size() << " status=0\n";
  }
  if (s.timings) {
    for (const auto& [stage, secs] : rep.timings) std::cerr << "# timing " << stage << ' ' << secs << "s\n";
  }
}

int exit_for(errc code) {
  switch (code) {
    case errc::parse_error:
    case errc::label_count:
      return parse_failure;
    case errc::too_large:
    case errc::give_up:
      return resource_cap;
    default:
      return domain_failure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple-crossing diagrams: validation, genus bounds and crossing-number certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  settings s;
  app.add_option("--format", s.format, "Report format")->check(CLI::IsMember({"text", "kv", "csv"}));
  app.add_option("--seed", s.seed, "Seed for all randomness");
  app.add_option("--jobs", s.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--cap", s.cap, "Maximum crossings for bracket state sums")->check(CLI::Range(0, 62));
  app.add_flag("--timings", s.timings, "Print per-stage timings to stderr");

  std::string path = "-", braid;
  bool lines = false, reflection = false;
  int n = 1, count = 1, p = 0, q = 0;

  auto* validate = app.add_subcommand("validate", "Parse and validate a PD file");
  validate->add_option("path", path, "PD file, or - for standard input");
  validate->add_option("--braid", braid, "Validate the closure of a positive braid \"p: i1 i2 ...\"");

  auto* pipeline = app.add_subcommand("pipeline", "Genus certificate of triple-crossing diagrams");
  pipeline->add_option("path", path, "Triple-PD file, or - for standard input");
  pipeline->add_flag("--lines", lines, "Treat every non-comment line as its own diagram");

  auto* gen = app.add_subcommand("gen", "Sample random triple-crossing diagrams");
  gen->add_option("--n", n, "Triple crossings per diagram")->required();
  gen->add_option("--count", count, "Number of diagrams");

  auto* enumerate = app.add_subcommand("enum", "All triple-crossing diagrams with n crossings");
  enumerate->add_option("--n", n, "Triple crossings")->required();
  enumerate->add_flag("--reflection", reflection, "Identify mirror embeddings");

  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket and normalized polynomial");
  bracket_cmd->add_option("path", path, "PD file, or - for standard input");
  bracket_cmd->add_option("--braid", braid, "Use the closure of a positive braid \"p: i1 i2 ...\"");

  auto* torus = app.add_subcommand("torus", "Torus knot T(p,q): closure statistics and c3");
  torus->add_option("p", p)->required();
  torus->add_option("q", q)->required();

  auto* certify_cmd = app.add_subcommand("certify", "Bounds for every knot in a table");
  std::string table = TRICROSS_DEFAULT_TABLE;
  certify_cmd->add_option("table", table, "Knot table CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_failure;
  }

  try {
    run_report rep;
    if (validate->parsed()) {
      rep = cmd_validate(s, path, braid);
    } else if (pipeline->parsed()) {
      rep = cmd_pipeline(s, path, lines);
    } else if (gen->parsed()) {
      rep = cmd_gen(s, n, count);
    } else if (enumerate->parsed()) {
      rep = cmd_enum(s, n, reflection);
    } else if (bracket_cmd->parsed()) {
      rep = cmd_bracket(s, path, braid);
    } else if (torus->parsed()) {
      rep = cmd_torus(s, p, q);
    } else {
      rep = cmd_certify(s, table);
    }
    print(rep, s);
    return ok;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const io_failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return parse_failure;
  }
}
