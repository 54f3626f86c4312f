#include "cli.hpp"

#include "mosaickit/bounds.hpp"
#include "mosaickit/complement.hpp"
#include "mosaickit/diagram.hpp"
#include "mosaickit/error.hpp"
#include "mosaickit/family.hpp"
#include "mosaickit/render.hpp"
#include "mosaickit/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace mosaickit::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Mosaic load(const std::string& path) { return parse_mosaic(read_file(path)); }

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

bool override_enabled() {
  const char* v = std::getenv("MOSAICKIT_FEASIBILITY_OVERRIDE");
  return v != nullptr && std::string(v) == "1";
}

Flavor parse_flavor(const std::string& s) {
  const auto f = flavor_from_string(s);
  if (!f) throw UsageError("unknown flavor '" + s + "' (expected traditional or corner)");
  return *f;
}

nlohmann::ordered_json bound_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["quantity"] = r.quantity;
  j["input"] = r.input;
  j["formula"] = r.formula;
  j["applicable"] = r.applicable;
  if (r.applicable) j["value"] = r.value;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

struct Options {
  std::string file;
  std::string out;
  std::string report;
  std::string flavor = "traditional";
  std::string format;
  std::string rule;
  int n = 0;
  int n_max = 0;
  int n_max_traditional = 0;
  int n_max_corner = 0;
  int i = 0;
  int j = 0;
  int c = 0;
  int workers = 1;
  int crossing_limit = kDefaultCrossingLimit;
  std::optional<int> max_nonblank;
  std::optional<int> max_crossings;
  bool canonical = false;
  bool connected = false;
  bool inefficient = false;
  bool hopf = false;
  bool certificate = false;
  bool list_rules = false;
  bool count_only = false;
  bool quiet = false;
};

int cmd_tiles(const Options&, std::ostream& out) {
  out << convention_table();
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Mosaic m = load(o.file);
  const auto violations = validate(m);
  if (violations.empty()) {
    out << "suitably connected\n";
    return 0;
  }
  out << "not suitably connected\n";
  for (const auto& v : violations) out << "  " << v.message << '\n';
  return 1;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Mosaic m = load(o.file);
  RenderFormat f = RenderFormat::ascii;
  if (o.format == "svg" || (o.format.empty() && o.out.ends_with(".svg"))) f = RenderFormat::svg;
  emit(render(m, f), o.out, out);
  return 0;
}

int cmd_complement(const Options& o, std::ostream& out) {
  const Mosaic m = load(o.file);
  const ComplementResult r = o.inefficient ? inefficient_corner_complement(m) : corner_complement(m);
  emit(serialize_mosaic(r.mosaic), o.out, out);
  if (!o.report.empty()) emit(r.report.to_json() + "\n", o.report, out);
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  if (o.list_rules) {
    for (const auto& r : rewrite_catalog()) {
      out << r.id << ' ' << to_string(r.flavor) << ' ' << r.rows << 'x' << r.cols
          << (r.reducing ? " reducing" : "") << '\n';
    }
    return 0;
  }
  if (o.file.empty()) throw UsageError("reduce needs an input file");
  const Mosaic m = load(o.file);
  const Mosaic result = o.rule.empty() ? reduce_caps(m) : apply_rewrite(m, o.rule, o.i, o.j);
  emit(serialize_mosaic(result), o.out, out);
  return 0;
}

int cmd_family(const Options& o, std::ostream& out) {
  if (o.certificate) {
    const FamilyCertificate cert = certify_family(o.n);
    emit(cert.to_json() + "\n", o.out, out);
    return cert.failures.empty() ? 0 : 1;
  }
  emit(serialize_mosaic(generate_ln(o.n)), o.out, out);
  return 0;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.c <= 0 && o.n <= 0) throw UsageError("bounds needs --c and/or --n");
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : bound_table(o.c, o.n, o.hopf)) rows.push_back(bound_json(r));
  emit(rows.dump(2) + "\n", o.out, out);
  return 0;
}

SearchConstraints constraints(const Options& o) {
  SearchConstraints c;
  c.flavor = parse_flavor(o.flavor);
  c.n = o.n;
  c.max_nonblank = o.max_nonblank;
  c.max_crossings = o.max_crossings;
  c.canonical_only = o.canonical;
  c.require_connected_diagram = o.connected;
  c.allow_oversize = override_enabled();
  return c;
}

TabulateOptions tabulate_options(const Options& o) {
  TabulateOptions t;
  t.workers = o.workers;
  t.max_nonblank = o.max_nonblank;
  t.max_crossings = o.max_crossings;
  t.crossing_limit = o.crossing_limit;
  t.allow_oversize = override_enabled();
  return t;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const SearchConstraints c = constraints(o);
  const auto found = parallel_enumerate(c, o.workers);
  std::string text;
  if (o.count_only) {
    text = std::to_string(found.size()) + "\n";
  } else {
    for (const auto& m : found) {
      nlohmann::ordered_json j;
      j["flavor"] = std::string(to_string(m.flavor()));
      j["n"] = m.size();
      j["nonblank"] = nonblank_count(m);
      j["crossings"] = crossing_count(m);
      j["mosaic"] = serialize_mosaic_inline(m);
      text += j.dump() + '\n';
    }
  }
  emit(text, o.out, out);
  if (!o.quiet) err << found.size() << " mosaics\n";
  return 0;
}

int cmd_tabulate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto rows = tabulate(parse_flavor(o.flavor), o.n_max, tabulate_options(o));
  const bool csv = o.format == "csv" || (o.format.empty() && o.out.ends_with(".csv"));
  emit(csv ? to_csv(rows) : to_jsonl(rows), o.out, out);
  if (!o.quiet) err << rows.size() << " keys\n";
  return 0;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const int nt = o.n_max_traditional > 0 ? o.n_max_traditional : o.n_max;
  const int nc = o.n_max_corner > 0 ? o.n_max_corner : o.n_max;
  if (nt <= 0 || nc <= 0) throw UsageError("compare needs --n-max or both --n-max-traditional and --n-max-corner");
  const CompareReport r = compare_tile_numbers(nt, nc, tabulate_options(o));
  emit(r.to_json() + "\n", o.out, out);
  if (!o.quiet) {
    err << r.entries.size() << " shared keys, " << r.failures.size() << " failures\n";
  }
  return r.failures.empty() ? 0 : 1;
}

int cmd_bracket(const Options& o, std::ostream& out) {
  const Mosaic m = load(o.file);
  const Diagram d = build_diagram(m);
  nlohmann::ordered_json j;
  j["crossings"] = d.crossing_count();
  j["components"] = component_count(d);
  j["bracket"] = kauffman_bracket(d, o.crossing_limit).to_string();
  const InvariantKey key = invariant_key(d, o.crossing_limit);
  j["key"] = key.to_string();
  j["mirror_key"] = mirror_key(key).to_string();
  j["reduced"] = is_reduced(d);
  j["alternating"] = is_alternating(d);
  emit(j.dump(2) + "\n", o.out, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot mosaic toolkit", "mosaickit"};
  app.require_subcommand(1);
  Options o;

  const auto flavor_opt = [&](CLI::App* s) {
    s->add_option("--flavor", o.flavor, "traditional or corner")
        ->check(CLI::IsMember({"traditional", "corner"}));
  };
  const auto search_opts = [&](CLI::App* s) {
    flavor_opt(s);
    s->add_option("--max-nonblank", o.max_nonblank, "Upper limit on nonblank tiles");
    s->add_option("--max-crossings", o.max_crossings, "Upper limit on crossing tiles");
    s->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    s->add_option("--out", o.out, "Output path (default: standard output)");
    s->add_flag("--quiet", o.quiet, "Suppress progress output");
  };

  auto* tiles = app.add_subcommand("tiles", "Print the tile code convention");

  auto* validate_cmd = app.add_subcommand("validate", "Check suitable connectedness");
  validate_cmd->add_option("file", o.file, "Mosaic file (.kmos)")->required();

  auto* render_cmd = app.add_subcommand("render", "Draw a mosaic as ASCII or SVG");
  render_cmd->add_option("file", o.file, "Mosaic file (.kmos)")->required();
  render_cmd->add_option("--format", o.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--out", o.out, "Output path");

  auto* complement_cmd = app.add_subcommand("complement", "Corner complement of a traditional mosaic");
  complement_cmd->add_option("file", o.file, "Mosaic file (.kmos)")->required();
  complement_cmd->add_option("--out", o.out, "Output mosaic path");
  complement_cmd->add_option("--report", o.report, "JSON report path");
  complement_cmd->add_flag("--inefficient", o.inefficient, "Keep every tile (size 2n-1)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply local rewrites to a corner mosaic");
  reduce_cmd->add_option("file", o.file, "Mosaic file (.kmos)");
  reduce_cmd->add_option("--rule", o.rule, "Apply one rule instead of reducing to a fixpoint");
  reduce_cmd->add_option("--i", o.i, "Window top row for --rule");
  reduce_cmd->add_option("--j", o.j, "Window left column for --rule");
  reduce_cmd->add_flag("--list-rules", o.list_rules, "Print the rule catalog");
  reduce_cmd->add_option("--out", o.out, "Output path");

  auto* family_cmd = app.add_subcommand("family", "Chain link family L_n on corner mosaics");
  family_cmd->add_option("--n", o.n, "Odd board size >= 3")->required();
  family_cmd->add_flag("--certificate", o.certificate, "Print the certificate instead of the mosaic");
  family_cmd->add_option("--out", o.out, "Output path");

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds");
  bounds_cmd->add_option("--c", o.c, "Crossing number");
  bounds_cmd->add_option("--n", o.n, "Board size");
  bounds_cmd->add_flag("--hopf", o.hopf, "The link is the Hopf link");
  bounds_cmd->add_option("--out", o.out, "Output path");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List suitably connected mosaics as JSONL");
  search_opts(enumerate_cmd);
  enumerate_cmd->add_option("--n", o.n, "Board size")->required();
  enumerate_cmd->add_flag("--canonical", o.canonical, "One mosaic per symmetry class");
  enumerate_cmd->add_flag("--connected", o.connected, "Only connected nonempty projections");
  enumerate_cmd->add_flag("--count", o.count_only, "Print only the number of mosaics");

  auto* tabulate_cmd = app.add_subcommand("tabulate", "Minimal board and tile count per invariant key");
  search_opts(tabulate_cmd);
  tabulate_cmd->add_option("--n-max", o.n_max, "Largest board size")->required();
  tabulate_cmd->add_option("--format", o.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  tabulate_cmd->add_option("--crossing-limit", o.crossing_limit, "Bracket crossing limit");

  auto* compare_cmd = app.add_subcommand("compare", "Compare traditional and corner tile counts");
  search_opts(compare_cmd);
  compare_cmd->add_option("--n-max", o.n_max, "Largest board size for both flavors");
  compare_cmd->add_option("--n-max-traditional", o.n_max_traditional, "Largest traditional board");
  compare_cmd->add_option("--n-max-corner", o.n_max_corner, "Largest corner board");

  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket and invariant key");
  bracket_cmd->add_option("file", o.file, "Mosaic file (.kmos)")->required();
  bracket_cmd->add_option("--crossing-limit", o.crossing_limit, "Refuse larger diagrams");
  bracket_cmd->add_option("--out", o.out, "Output path");

  std::vector<const char*> argv{"mosaickit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tiles->parsed()) return cmd_tiles(o, out);
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (render_cmd->parsed()) return cmd_render(o, out);
    if (complement_cmd->parsed()) return cmd_complement(o, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out);
    if (family_cmd->parsed()) return cmd_family(o, out);
    if (bounds_cmd->parsed()) return cmd_bounds(o, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(o, out, err);
    if (tabulate_cmd->parsed()) return cmd_tabulate(o, out, err);
    if (compare_cmd->parsed()) return cmd_compare(o, out, err);
    if (bracket_cmd->parsed()) return cmd_bracket(o, out);
  } catch (const mosaickit::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace mosaickit::cli
