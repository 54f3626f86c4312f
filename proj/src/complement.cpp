#include "mosaickit/complement.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mosaickit {

std::string_view to_string(Cap::Side s) {
  switch (s) {
    case Cap::Side::top: return "top";
    case Cap::Side::bottom: return "bottom";
    case Cap::Side::left: return "left";
    default: return "right";
  }
}

CapScan scan_caps(const Mosaic& m) {
  if (m.flavor() != Flavor::traditional) throw DomainError("caps are defined on traditional mosaics");
  const int n = m.size();
  if (n < 4) throw DomainError("cap form needs a mosaic of size at least 4");
  CapScan scan;
  for (auto [i, j] : {std::pair{1, 1}, {1, n}, {n, 1}, {n, n}}) {
    if (m.at(i, j) != kBlank) scan.offending.emplace_back(i, j);
  }
  // Walks one perimeter line between the corners, pairing (first, second)
  // codes; `cell(k)` is the k-th cell of the line.
  const auto walk = [&](Cap::Side side, TileCode first, TileCode second, auto cell) {
    for (int k = 2; k <= n - 1; ++k) {
      const auto [i, j] = cell(k);
      const TileCode c = m.at(i, j);
      if (c == kBlank) continue;
      if (c == first && k + 1 <= n - 1) {
        const auto [i2, j2] = cell(k + 1);
        if (m.at(i2, j2) == second) {
          scan.caps.push_back({side, i, j});
          ++k;
          continue;
        }
      }
      scan.offending.emplace_back(i, j);
    }
  };
  walk(Cap::Side::top, 2, 1, [](int k) { return std::pair{1, k}; });
  walk(Cap::Side::bottom, 3, 4, [n](int k) { return std::pair{n, k}; });
  walk(Cap::Side::left, 2, 3, [](int k) { return std::pair{k, 1}; });
  walk(Cap::Side::right, 1, 4, [n](int k) { return std::pair{k, n}; });
  return scan;
}

std::vector<Cap> check_cap_form(const Mosaic& m) {
  if (m.flavor() != Flavor::traditional) throw DomainError("caps are defined on traditional mosaics");
  if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
  auto scan = scan_caps(m);
  if (!scan.ok()) {
    std::ostringstream os;
    os << "not in cap form at";
    for (auto [i, j] : scan.offending) os << " (" << i << "," << j << ")";
    throw NotInCapForm(os.str(), std::move(scan.offending));
  }
  return std::move(scan.caps);
}

std::string ComplementReport::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = efficient ? "corner_complement" : "inefficient_corner_complement";
  j["input_nonblank"] = input_nonblank;
  j["output_nonblank"] = output_nonblank;
  j["caps_folded"] = caps_folded;
  j["input_key"] = input_key.to_string();
  j["output_key"] = output_key.to_string();
  j["size_out"] = size_out;
  j["upper_bound_witness"] = true;
  return j.dump(2);
}

namespace {

// Output lattice point of the traditional edge midpoint below cell (r, c).
LatticePoint below_point(int n, int r, int c) { return {r + c - 3, c - r + n - 3}; }
// Output lattice point of the traditional edge midpoint right of cell (r, c).
LatticePoint right_point(int n, int r, int c) { return {r + c - 3, c - r + n - 2}; }

std::pair<LatticePoint, LatticePoint> cap_endpoints(int n, const Cap& cap) {
  switch (cap.side) {
    case Cap::Side::top: return {below_point(n, 1, cap.j), below_point(n, 1, cap.j + 1)};
    case Cap::Side::bottom: return {below_point(n, n - 1, cap.j), below_point(n, n - 1, cap.j + 1)};
    case Cap::Side::left: return {right_point(n, cap.i, 1), right_point(n, cap.i + 1, 1)};
    default: return {right_point(n, cap.i, n - 1), right_point(n, cap.i + 1, n - 1)};
  }
}

ComplementReport make_report(const Mosaic& in, const Mosaic& out, int caps, bool efficient) {
  ComplementReport r;
  r.input_nonblank = nonblank_count(in);
  r.output_nonblank = nonblank_count(out);
  r.caps_folded = caps;
  r.input_key = invariant_key(in);
  r.output_key = invariant_key(out);
  r.size_out = out.size();
  r.efficient = efficient;
  return r;
}

}  // namespace

ComplementResult corner_complement(const Mosaic& m) {
  const auto caps = check_cap_form(m);
  if (caps.empty()) {
    throw NotInCapForm("no caps on the perimeter; the complement would not save any tile", {});
  }
  const int n = m.size();
  const int size = 2 * n - 5;
  Mosaic out(Flavor::corner, size);
  for (int i = 2; i <= n - 1; ++i) {
    for (int j = 2; j <= n - 1; ++j) out.set(i + j - 3, j - i + n - 2, m.at(i, j));
  }
  for (const Cap& cap : caps) {
    const auto [u, v] = cap_endpoints(n, cap);
    if (std::abs(u.p - v.p) != 1 || std::abs(u.q - v.q) != 1) {
      throw std::logic_error("cap endpoints are not opposite corners of one cell");
    }
    const int a = std::max(u.p, v.p);
    const int b = std::max(u.q, v.q);
    if (a < 1 || b < 1 || a > size || b > size || out.at(a, b) != kBlank) {
      throw std::logic_error("cap fold cell is outside the board or occupied");
    }
    const bool nw_se = (u == LatticePoint{a - 1, b - 1}) || (v == LatticePoint{a - 1, b - 1});
    out.set(a, b, nw_se ? single_strand_code(Port::NW, Port::SE) : single_strand_code(Port::NE, Port::SW));
  }
  if (!is_suitably_connected(out)) {
    throw std::logic_error("corner complement produced a mosaic that is not suitably connected");
  }
  return {out, make_report(m, out, static_cast<int>(caps.size()), true)};
}

ComplementResult inefficient_corner_complement(const Mosaic& m) {
  if (m.flavor() != Flavor::traditional) throw DomainError("input must be a traditional mosaic");
  if (m.size() < 2) throw DomainError("input must have size at least 2");
  if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
  if (nonblank_count(m) == 0) throw DomainError("input mosaic is blank");
  const int n = m.size();
  Mosaic out(Flavor::corner, 2 * n - 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out.set(i + j - 1, j - i + n, m.at(i, j));
  }
  if (!is_suitably_connected(out)) {
    throw std::logic_error("inefficient complement produced a mosaic that is not suitably connected");
  }
  return {out, make_report(m, out, 0, false)};
}

// ---------------------------------------------------------------------------

namespace {

std::string pattern_string(int rows, int cols, const std::vector<int>& cells) {
  std::string s;
  for (int r = 0; r < rows; ++r) {
    if (r > 0) s += '/';
    for (int c = 0; c < cols; ++c) {
      if (c > 0) s += ',';
      const int v = cells[r * cols + c];
      s += v < 0 ? std::string("*") : std::to_string(v);
    }
  }
  return s;
}

/// Drops outer rows/columns that are wildcards in both pattern and replacement.
RewriteRule trimmed(int rows, int cols, std::vector<int> pat, std::vector<int> rep) {
  auto free_row = [&](int r) {
    for (int c = 0; c < cols; ++c) if (pat[r * cols + c] >= 0 || rep[r * cols + c] >= 0) return false;
    return true;
  };
  auto free_col = [&](int c) {
    for (int r = 0; r < rows; ++r) if (pat[r * cols + c] >= 0 || rep[r * cols + c] >= 0) return false;
    return true;
  };
  int r0 = 0, r1 = rows, c0 = 0, c1 = cols;
  while (r1 - r0 > 1 && free_row(r0)) ++r0;
  while (r1 - r0 > 1 && free_row(r1 - 1)) --r1;
  while (c1 - c0 > 1 && free_col(c0)) ++c0;
  while (c1 - c0 > 1 && free_col(c1 - 1)) --c1;
  RewriteRule rule;
  rule.rows = r1 - r0;
  rule.cols = c1 - c0;
  for (int r = r0; r < r1; ++r) {
    for (int c = c0; c < c1; ++c) {
      rule.pattern.push_back(pat[r * cols + c]);
      rule.replacement.push_back(rep[r * cols + c]);
    }
  }
  return rule;
}

std::string body(const RewriteRule& r) {
  return pattern_string(r.rows, r.cols, r.pattern) + ">" + pattern_string(r.rows, r.cols, r.replacement);
}

// Two single-strand corner tiles P and Q meeting at exactly one lattice point
// s may be replaced by one tile joining their far ends x and y, placed in a
// cell C of the window that has both x and y as corners and is P, Q or blank.
// The loop x-s-y-x bounds a disc inside P, Q and C that no other strand
// enters, so the move is a planar isotopy.
std::vector<RewriteRule> corner_rules() {
  std::vector<RewriteRule> contractions;
  std::set<std::string> seen;
  const auto corners = [](int cell) {
    std::array<LatticePoint, 4> pts{};
    for (int k = 0; k < 4; ++k) pts[k] = corner_point(cell / 2 + 1, cell % 2 + 1, port_at(k));
    return pts;
  };
  const auto ends = [&](int cell, TileCode code) {
    const Strand s = tile_pairing(code).strands[0];
    return std::pair{corners(cell)[index(s.a)], corners(cell)[index(s.b)]};
  };
  const auto port_of = [&](int cell, LatticePoint pt) -> std::optional<Port> {
    const auto pts = corners(cell);
    for (int k = 0; k < 4; ++k) if (pts[k] == pt) return port_at(k);
    return std::nullopt;
  };

  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      for (TileCode cp = 1; cp <= 6; ++cp) {
        for (TileCode cq = 1; cq <= 6; ++cq) {
          const auto [p1, p2] = ends(p, cp);
          const auto [q1, q2] = ends(q, cq);
          const int shared = (p1 == q1) + (p1 == q2) + (p2 == q1) + (p2 == q2);
          if (shared != 1) continue;
          const LatticePoint s = (p1 == q1 || p1 == q2) ? p1 : p2;
          const LatticePoint x = p1 == s ? p2 : p1;
          const LatticePoint y = q1 == s ? q2 : q1;
          for (int c = 0; c < 4; ++c) {
            const auto px = port_of(c, x);
            const auto py = port_of(c, y);
            if (!px || !py) continue;
            std::vector<int> pat(4, -1);
            std::vector<int> rep(4, -1);
            pat[p] = cp;
            pat[q] = cq;
            rep[p] = 0;
            rep[q] = 0;
            if (c != p && c != q) pat[c] = 0;
            rep[c] = single_strand_code(*px, *py);
            RewriteRule rule = trimmed(2, 2, pat, rep);
            rule.flavor = Flavor::corner;
            rule.reducing = true;
            const std::string key = body(rule);
            if (!seen.insert(key).second) continue;
            rule.id = "contract:" + key;
            contractions.push_back(std::move(rule));
          }
        }
      }
    }
  }

  // Cap images under the inefficient complement; named by the cap side.
  const std::vector<std::pair<std::string, std::string>> names = {
      {"fold-top", "2,*/0,1>0,*/5,0"},
      {"fold-bottom", "3,0/*,4>0,5/*,0"},
      {"fold-left", "*,2/3,0>*,0/0,6"},
      {"fold-right", "0,1/4,*>6,0/0,*"},
  };
  std::vector<RewriteRule> out;
  for (const auto& [name, key] : names) {
    const auto it =
        std::ranges::find_if(contractions, [&](const RewriteRule& r) { return body(r) == key; });
    if (it == contractions.end()) {
      throw std::logic_error("fold rule missing from generated catalog: " + key);
    }
    RewriteRule rule = std::move(*it);
    contractions.erase(it);
    rule.id = name;
    out.push_back(std::move(rule));
  }
  std::ranges::move(contractions, std::back_inserter(out));
  return out;
}

// A bend slides across a blank cell of a 2x2 window:
//   5 1      1 0
//   0 6  <-> 3 1
// Both sides join the west port of the top-left cell to the south port of the
// bottom-right cell and use no other window boundary port.
std::vector<RewriteRule> traditional_rules() {
  const std::vector<int> a = {5, 1, 0, 6};
  const std::vector<int> b = {1, 0, 3, 1};
  std::vector<RewriteRule> out;
  std::set<std::string> seen;
  for (const auto& g : Symmetry::dihedral()) {
    for (int dir = 0; dir < 2; ++dir) {
      const auto& from = dir == 0 ? a : b;
      const auto& to = dir == 0 ? b : a;
      Mosaic pf(Flavor::traditional, 2, std::vector<TileCode>(from.begin(), from.end()));
      Mosaic pt(Flavor::traditional, 2, std::vector<TileCode>(to.begin(), to.end()));
      pf = transform(pf, g);
      pt = transform(pt, g);
      RewriteRule rule;
      rule.flavor = Flavor::traditional;
      rule.rows = rule.cols = 2;
      rule.pattern.assign(pf.codes().begin(), pf.codes().end());
      rule.replacement.assign(pt.codes().begin(), pt.codes().end());
      rule.reducing = false;
      rule.id = "slide:" + body(rule);
      if (seen.insert(rule.id).second) out.push_back(std::move(rule));
    }
  }
  return out;
}

}  // namespace

const std::vector<RewriteRule>& rewrite_catalog() {
  static const std::vector<RewriteRule> catalog = [] {
    auto rules = corner_rules();
    std::ranges::move(traditional_rules(), std::back_inserter(rules));
    return rules;
  }();
  return catalog;
}

const RewriteRule& find_rule(std::string_view id) {
  for (const auto& r : rewrite_catalog()) {
    if (r.id == id) return r;
  }
  throw DomainError("unknown rewrite rule '" + std::string(id) + "'");
}

bool rule_matches(const Mosaic& m, const RewriteRule& rule, int i, int j) {
  if (m.flavor() != rule.flavor) return false;
  if (i < 1 || j < 1 || i + rule.rows - 1 > m.size() || j + rule.cols - 1 > m.size()) return false;
  for (int r = 0; r < rule.rows; ++r) {
    for (int c = 0; c < rule.cols; ++c) {
      const int want = rule.pattern[r * rule.cols + c];
      if (want >= 0 && m.at(i + r, j + c) != want) return false;
    }
  }
  return true;
}

namespace {

Mosaic apply_unchecked(const Mosaic& m, const RewriteRule& rule, int i, int j) {
  Mosaic out = m;
  for (int r = 0; r < rule.rows; ++r) {
    for (int c = 0; c < rule.cols; ++c) {
      const int v = rule.replacement[r * rule.cols + c];
      if (v >= 0) out.set(i + r, j + c, static_cast<TileCode>(v));
    }
  }
#ifndef NDEBUG
  if (!is_suitably_connected(out) || invariant_key(out) != invariant_key(m)) {
    throw std::logic_error("rewrite '" + rule.id + "' changed the depicted link");
  }
#endif
  return out;
}

}  // namespace

Mosaic apply_rewrite(const Mosaic& m, std::string_view rule_id, int i, int j) {
  const RewriteRule& rule = find_rule(rule_id);
  if (!rule_matches(m, rule, i, j)) {
    throw DomainError("rule '" + rule.id + "' does not match at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  }
  if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
  return apply_unchecked(m, rule, i, j);
}

Mosaic reduce_caps(const Mosaic& m) {
  if (m.flavor() != Flavor::corner) throw DomainError("reduce_caps works on corner mosaics");
  if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
  Mosaic cur = m;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rule : rewrite_catalog()) {
      if (!rule.reducing || rule.flavor != Flavor::corner) continue;
      for (int i = 1; i <= cur.size() && !changed; ++i) {
        for (int j = 1; j <= cur.size() && !changed; ++j) {
          if (rule_matches(cur, rule, i, j)) {
            cur = apply_unchecked(cur, rule, i, j);
            changed = true;
          }
        }
      }
      if (changed) break;
    }
  }
  return cur;
}

}  // namespace mosaickit
