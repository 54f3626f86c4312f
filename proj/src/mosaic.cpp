#include "mosaickit/mosaic.hpp"

#include "mosaickit/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace mosaickit {

Mosaic::Mosaic(Flavor flavor, int n) : flavor_(flavor), n_(n) {
  if (n < 1) throw DomainError("mosaic size must be at least 1");
  codes_.assign(static_cast<std::size_t>(n) * n, kBlank);
}

Mosaic::Mosaic(Flavor flavor, int n, std::vector<TileCode> codes)
    : flavor_(flavor), n_(n), codes_(std::move(codes)) {
  if (n < 1) throw DomainError("mosaic size must be at least 1");
  if (codes_.size() != static_cast<std::size_t>(n) * n) {
    throw DomainError("expected " + std::to_string(n * n) + " tile codes");
  }
  for (TileCode c : codes_) {
    if (c >= kTileCount) throw DomainError("tile code out of range: " + std::to_string(c));
  }
}

Mosaic::Mosaic(Flavor flavor, std::initializer_list<std::initializer_list<int>> rows)
    : flavor_(flavor), n_(static_cast<int>(rows.size())) {
  if (n_ < 1) throw DomainError("mosaic size must be at least 1");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw DomainError("mosaic rows must form a square");
    for (int c : row) {
      if (c < 0 || c >= kTileCount) throw DomainError("tile code out of range: " + std::to_string(c));
      codes_.push_back(static_cast<TileCode>(c));
    }
  }
}

std::size_t Mosaic::offset(int i, int j) const {
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

void Mosaic::set(int i, int j, TileCode code) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw DomainError("cell out of range");
  if (code >= kTileCount) throw DomainError("tile code out of range: " + std::to_string(code));
  codes_[offset(i, j)] = code;
}

std::strong_ordering operator<=>(const Mosaic& a, const Mosaic& b) {
  if (auto c = a.flavor_ <=> b.flavor_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.codes_.begin(), a.codes_.end(),
                                                b.codes_.begin(), b.codes_.end());
}

int nonblank_count(const Mosaic& m) {
  return static_cast<int>(std::ranges::count_if(m.codes(), [](TileCode c) { return c != kBlank; }));
}

int crossing_count(const Mosaic& m) {
  return static_cast<int>(std::ranges::count_if(m.codes(), is_crossing));
}

int connection_point_count(Flavor f, int n) {
  return f == Flavor::traditional ? 2 * n * (n + 1) : (n + 1) * (n + 1);
}

LatticePoint corner_point(int i, int j, Port p) {
  switch (index(p)) {
    case 0: return {i - 1, j};      // NE
    case 1: return {i, j};          // SE
    case 2: return {i, j - 1};      // SW
    default: return {i - 1, j - 1};  // NW
  }
}

int connection_point(Flavor f, int n, int i, int j, Port p) {
  if (f == Flavor::corner) {
    const auto [r, c] = corner_point(i, j, p);
    return r * (n + 1) + c;
  }
  // Horizontal edge r (0..n) above row r+1, column j: r * n + (j - 1).
  // Vertical edge at column c (0..n), row i: offset + (i - 1) * (n + 1) + c.
  const int vertical = n * (n + 1);
  switch (index(p)) {
    case 0: return (i - 1) * n + (j - 1);
    case 2: return i * n + (j - 1);
    case 1: return vertical + (i - 1) * (n + 1) + j;
    default: return vertical + (i - 1) * (n + 1) + (j - 1);
  }
}

namespace {

bool uses(TileCode code, Port p) { return (port_mask(code) >> index(p)) & 1; }

std::string cell_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void validate_traditional(const Mosaic& m, std::vector<Violation>& out) {
  const int n = m.size();
  using enum Port;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const TileCode c = m.at(i, j);
      const auto dangling = [&](Port p) {
        out.push_back({Violation::Kind::dangling_boundary, i, j,
                       "tile " + cell_name(i, j) + " has a connection point on the boundary at " +
                           std::string(port_name(p, Flavor::traditional))});
      };
      if (i == 1 && uses(c, N)) dangling(N);
      if (j == n && uses(c, E)) dangling(E);
      if (i == n && uses(c, S)) dangling(S);
      if (j == 1 && uses(c, W)) dangling(W);
      if (j < n && uses(c, E) != uses(m.at(i, j + 1), W)) {
        out.push_back({Violation::Kind::mismatched_edge, i, j,
                       "edge between " + cell_name(i, j) + " and " + cell_name(i, j + 1) +
                           " is connected on one side only"});
      }
      if (i < n && uses(c, S) != uses(m.at(i + 1, j), N)) {
        out.push_back({Violation::Kind::mismatched_edge, i, j,
                       "edge between " + cell_name(i, j) + " and " + cell_name(i + 1, j) +
                           " is connected on one side only"});
      }
    }
  }
}

void validate_corner(const Mosaic& m, std::vector<Violation>& out) {
  const int n = m.size();
  std::vector<int> degree((n + 1) * (n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int mask = port_mask(m.at(i, j));
      for (int k = 0; k < 4; ++k) {
        if (mask >> k & 1) ++degree[connection_point(Flavor::corner, n, i, j, port_at(k))];
      }
    }
  }
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const int d = degree[p * (n + 1) + q];
      if (d != 0 && d != 2) {
        out.push_back({Violation::Kind::corner_degree, p, q,
                       "lattice point (" + std::to_string(p) + "," + std::to_string(q) + ") has " +
                           std::to_string(d) + " connection points"});
      }
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Mosaic& m) {
  std::vector<Violation> out;
  if (m.flavor() == Flavor::traditional) {
    validate_traditional(m, out);
  } else {
    validate_corner(m, out);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::array<Symmetry, 8> Symmetry::dihedral() {
  std::array<Symmetry, 8> out{};
  for (int k = 0; k < 8; ++k) out[k] = {k % 4, k >= 4, false};
  return out;
}

std::array<Symmetry, 16> Symmetry::all() {
  std::array<Symmetry, 16> out{};
  for (int k = 0; k < 16; ++k) out[k] = {k % 4, (k / 4) % 2 == 1, k >= 8};
  return out;
}

namespace {

Port map_port(Flavor f, Port p, const Symmetry& g) {
  int k = index(p);
  if (g.reflect) k = f == Flavor::traditional ? (4 - k) % 4 : 3 - k;
  return port_at(k + g.quarter_turns);
}

struct CodeTables {
  // [flavor][symmetry index in Symmetry::all()][code]
  std::array<std::array<std::array<TileCode, kTileCount>, 16>, 2> table{};

  CodeTables() {
    const auto syms = Symmetry::all();
    for (int f = 0; f < 2; ++f) {
      for (int s = 0; s < 16; ++s) {
        for (int c = 0; c < kTileCount; ++c) {
          TilePairing img = tile_pairing(c);
          for (int k = 0; k < img.strand_count; ++k) {
            img.strands[k] = {map_port(Flavor(f), img.strands[k].a, syms[s]),
                              map_port(Flavor(f), img.strands[k].b, syms[s])};
          }
          if (img.over_strand && syms[s].mirror) *img.over_strand = 1 - *img.over_strand;
          table[f][s][c] = *code_for(img);
        }
      }
    }
  }
};

const CodeTables& code_tables() {
  static const CodeTables tables;
  return tables;
}

int symmetry_index(const Symmetry& g) {
  return (g.quarter_turns & 3) + (g.reflect ? 4 : 0) + (g.mirror ? 8 : 0);
}

/// dest[src] = destination offset of each cell under the dihedral motion.
std::vector<int> cell_destinations(int n, const Symmetry& g) {
  std::vector<int> dest(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int r = i;
      int c = g.reflect ? n + 1 - j : j;
      for (int t = 0; t < (g.quarter_turns & 3); ++t) {
        const int nr = c;
        c = n + 1 - r;
        r = nr;
      }
      dest[(i - 1) * n + (j - 1)] = (r - 1) * n + (c - 1);
    }
  }
  return dest;
}

}  // namespace

TileCode transform_code(Flavor f, TileCode code, const Symmetry& g) {
  return code_tables().table[static_cast<int>(f)][symmetry_index(g)].at(code);
}

Mosaic transform(const Mosaic& m, const Symmetry& g) {
  const int n = m.size();
  const auto& table = code_tables().table[static_cast<int>(m.flavor())][symmetry_index(g)];
  const auto dest = cell_destinations(n, g);
  std::vector<TileCode> out(m.codes().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[dest[k]] = table[m.codes()[k]];
  return Mosaic(m.flavor(), n, std::move(out));
}

Mosaic canonical_form(const Mosaic& m) {
  Mosaic best = m;
  for (const auto& g : Symmetry::all()) {
    Mosaic img = transform(m, g);
    if (img < best) best = std::move(img);
  }
  return best;
}

bool is_canonical(const Mosaic& m) {
  const int n = m.size();
  const auto codes = m.codes();
  for (const auto& g : Symmetry::all()) {
    if (symmetry_index(g) == 0) continue;
    const auto& table = code_tables().table[static_cast<int>(m.flavor())][symmetry_index(g)];
    const auto dest = cell_destinations(n, g);
    std::vector<int> src(dest.size());
    for (std::size_t k = 0; k < dest.size(); ++k) src[dest[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < src.size(); ++k) {
      const TileCode img = table[codes[src[k]]];
      if (img < codes[k]) return false;
      if (img > codes[k]) break;
    }
  }
  return true;
}

Mosaic submosaic(const Mosaic& m, int i0, int j0, int k) {
  const int n = m.size();
  if (k < 1 || i0 < 1 || j0 < 1 || i0 + k - 1 > n || j0 + k - 1 > n) {
    throw DomainError("submosaic window out of range");
  }
  Mosaic out(m.flavor(), k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out.set(i + 1, j + 1, m.at(i0 + i, j0 + j));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(start, end - start));
    pos = end;
  }
  return out;
}

int parse_int(std::string_view tok, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Mosaic parse_mosaic(std::string_view text) {
  // Lines are separated by newlines or '/', so the inline form parses too.
  // '#' starts a comment that runs to the end of the physical line.
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto physical = text.substr(pos, end - pos);
    physical = physical.substr(0, physical.find('#'));
    std::size_t p = 0;
    while (p <= physical.size()) {
      auto slash = physical.find('/', p);
      if (slash == std::string_view::npos) slash = physical.size();
      const auto line = trim(physical.substr(p, slash - p));
      if (!line.empty()) lines.push_back(line);
      p = slash + 1;
    }
    pos = end + 1;
  }

  std::size_t cursor = 0;
  std::vector<std::string_view> header;
  while (cursor < lines.size() && lines[cursor].find('=') != std::string_view::npos) {
    for (auto tok : split_tokens(lines[cursor])) header.push_back(tok);
    ++cursor;
  }
  if (header.size() != 2 || !header[0].starts_with("flavor=") || !header[1].starts_with("n=")) {
    throw ParseError("malformed header: expected 'flavor=<traditional|corner>' then 'n=<int>'");
  }
  const auto flavor = flavor_from_string(header[0].substr(7));
  if (!flavor) throw ParseError("unknown flavor '" + std::string(header[0].substr(7)) + "'");
  const int n = parse_int(header[1].substr(2), "size");
  if (n < 1) throw ParseError("mosaic size must be at least 1");

  if (lines.size() - cursor != static_cast<std::size_t>(n)) {
    throw ParseError("expected " + std::to_string(n) + " grid rows, found " +
                     std::to_string(lines.size() - cursor));
  }
  std::vector<TileCode> codes;
  codes.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    const auto toks = split_tokens(lines[cursor + r]);
    if (toks.size() != static_cast<std::size_t>(n)) {
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (auto tok : toks) {
      const int c = parse_int(tok, "tile code");
      if (c < 0 || c >= kTileCount) throw ParseError("tile code out of range: " + std::string(tok));
      codes.push_back(static_cast<TileCode>(c));
    }
  }
  return Mosaic(*flavor, n, std::move(codes));
}

namespace {

std::string join_rows(const Mosaic& m, std::string_view row_sep) {
  std::ostringstream os;
  os << "flavor=" << to_string(m.flavor());
  os << (row_sep == "\n" ? "\n" : " ") << "n=" << m.size();
  for (int i = 1; i <= m.size(); ++i) {
    os << row_sep;
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) os << ' ';
      os << static_cast<int>(m.at(i, j));
    }
  }
  return os.str();
}

}  // namespace

std::string serialize_mosaic(const Mosaic& m) { return join_rows(m, "\n") + "\n"; }

std::string serialize_mosaic_inline(const Mosaic& m) { return join_rows(m, " / "); }

std::string convention_table() {
  std::ostringstream os;
  os << "code  traditional          corner\n";
  for (int c = 0; c < kTileCount; ++c) {
    const auto& t = tile_pairing(c);
    auto describe = [&](Flavor f) {
      if (t.strand_count == 0) return std::string("blank");
      std::string s;
      for (int k = 0; k < t.strand_count; ++k) {
        if (k > 0) s += t.over_strand ? " over " : " + ";
        s += "{" + std::string(port_name(t.strands[k].a, f)) + "," +
             std::string(port_name(t.strands[k].b, f)) + "}";
      }
      return s;
    };
    std::string trad = describe(Flavor::traditional);
    trad.resize(std::max<std::size_t>(trad.size(), 21), ' ');
    os << "T" << c << (c < 10 ? "    " : "   ") << trad
       << describe(Flavor::corner) << "\n";
  }
  return os.str();
}

}  // namespace mosaickit
