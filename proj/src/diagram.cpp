#include "mosaickit/diagram.hpp"

#include "mosaickit/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace mosaickit {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { reset(); }

  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

struct EdgeEnd {
  int crossing;
  int port;
};

std::vector<std::array<EdgeEnd, 2>> edge_ends(const Diagram& d) {
  std::vector<std::array<EdgeEnd, 2>> ends(d.edge_count, {EdgeEnd{-1, -1}, EdgeEnd{-1, -1}});
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int k = 0; k < 4; ++k) {
      auto& slot = ends[d.crossings[c].edges[k]];
      (slot[0].crossing < 0 ? slot[0] : slot[1]) = {c, k};
    }
  }
  return ends;
}

bool passes_over(const Crossing& x, int port) { return (port % 2 == 0) == x.over_even; }

}  // namespace

Diagram build_diagram(const Mosaic& m) {
  if (!is_suitably_connected(m)) {
    throw DomainError("mosaic is not suitably connected");
  }
  const int n = m.size();
  const Flavor f = m.flavor();
  const int cells = n * n;

  // A strand end is encoded as cell * 4 + port.
  std::vector<std::array<int, 2>> incidence(connection_point_count(f, n), {-1, -1});
  std::vector<int> crossing_of(cells, -1);
  Diagram d;
  for (int cell = 0; cell < cells; ++cell) {
    const TileCode code = m.codes()[cell];
    const int i = cell / n + 1;
    const int j = cell % n + 1;
    const int mask = port_mask(code);
    for (int k = 0; k < 4; ++k) {
      if (!(mask >> k & 1)) continue;
      auto& inc = incidence[connection_point(f, n, i, j, port_at(k))];
      (inc[0] < 0 ? inc[0] : inc[1]) = cell * 4 + k;
    }
    if (is_crossing(code)) {
      crossing_of[cell] = d.crossing_count();
      d.crossings.push_back({{}, code == kCrossingOverNS});
    }
  }

  std::vector<char> visited(static_cast<std::size_t>(cells) * 4, 0);
  const auto across = [&](int end) {
    const int cell = end / 4;
    const int pt = connection_point(f, n, cell / n + 1, cell % n + 1, port_at(end % 4));
    const auto& inc = incidence[pt];
    return inc[0] == end ? inc[1] : inc[0];
  };
  const auto along = [&](int end) {
    const Port p = port_at(end % 4);
    const Port q = tile_pairing(m.codes()[end / 4]).strand_at(p)->other(p);
    return (end / 4) * 4 + index(q);
  };

  for (int cell = 0; cell < cells; ++cell) {
    const int c = crossing_of[cell];
    if (c < 0) continue;
    for (int k = 0; k < 4; ++k) {
      int cur = cell * 4 + k;
      if (visited[cur]) continue;
      visited[cur] = 1;
      const int e = d.edge_count++;
      d.crossings[c].edges[k] = e;
      for (;;) {
        const int other = across(cur);
        visited[other] = 1;
        if (const int c2 = crossing_of[other / 4]; c2 >= 0) {
          d.crossings[c2].edges[other % 4] = e;
          break;
        }
        cur = along(other);
        visited[cur] = 1;
      }
    }
  }

  for (int end = 0; end < cells * 4; ++end) {
    if (visited[end] || !(port_mask(m.codes()[end / 4]) >> (end % 4) & 1)) continue;
    int cur = end;
    do {
      visited[cur] = 1;
      const int next = along(cur);
      visited[next] = 1;
      cur = across(next);
    } while (cur != end);
    ++d.free_loops;
  }
  return d;
}

int component_count(const Diagram& d) {
  UnionFind uf(d.edge_count);
  int classes = d.edge_count;
  for (const auto& x : d.crossings) {
    classes -= uf.unite(x.edges[0], x.edges[2]);
    classes -= uf.unite(x.edges[1], x.edges[3]);
  }
  return classes + d.free_loops;
}

bool is_reduced(const Diagram& d) {
  const auto ends = edge_ends(d);
  std::vector<char> seen(d.edge_count);
  std::vector<int> stack;
  for (int v = 0; v < d.crossing_count(); ++v) {
    std::ranges::fill(seen, 0);
    int reached = 0;
    stack.assign(1, d.crossings[v].edges[0]);
    seen[stack.back()] = 1;
    while (!stack.empty()) {
      const int e = stack.back();
      stack.pop_back();
      for (const auto& [c, k] : ends[e]) {
        if (c == v) {
          reached |= 1 << k;
          continue;
        }
        for (int f : d.crossings[c].edges) {
          if (!seen[f]) {
            seen[f] = 1;
            stack.push_back(f);
          }
        }
      }
    }
    if (reached != 0xF) return false;
  }
  return true;
}

bool is_alternating(const Diagram& d) {
  for (const auto& [a, b] : edge_ends(d)) {
    if (passes_over(d.crossings[a.crossing], a.port) == passes_over(d.crossings[b.crossing], b.port)) {
      return false;
    }
  }
  return true;
}

int piece_count(const Diagram& d) {
  // Merging the two strands at every crossing leaves one class per connected
  // piece of the projection.
  UnionFind uf(std::max(d.edge_count, 1));
  int pieces = d.edge_count;
  for (const auto& x : d.crossings) {
    for (int k = 1; k < 4; ++k) pieces -= uf.unite(x.edges[0], x.edges[k]);
  }
  return pieces + d.free_loops;
}

bool is_diagram_split(const Diagram& d) {
  return component_count(d) >= 2 && piece_count(d) > 1;
}

const LaurentPoly& loop_value() {
  static const LaurentPoly delta(-2, {-1, 0, 0, 0, -1});
  return delta;
}

namespace {

// Port pairs joined by a smoothing. Turning the over strand counterclockwise
// sweeps the two A regions; the A-smoothing merges them.
std::array<std::pair<int, int>, 2> smoothing_pairs(const Crossing& x, Smoothing s) {
  const int k = x.over_even ? 0 : 1;
  if (s == Smoothing::A) return {{{k, k + 1}, {(k + 2) % 4, (k + 3) % 4}}};
  return {{{k + 1, k + 2}, {(k + 3) % 4, k}}};
}

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d, int crossing_limit) {
  const int c = d.crossing_count();
  if (c > crossing_limit) {
    throw DomainError("diagram has " + std::to_string(c) + " crossings, over the limit of " +
                      std::to_string(crossing_limit));
  }
  if (d.empty()) throw DomainError("the empty diagram has no bracket");

  std::vector<std::array<std::array<std::pair<int, int>, 2>, 2>> pairs(c);
  for (int i = 0; i < c; ++i) {
    for (int s = 0; s < 2; ++s) {
      const auto ports = smoothing_pairs(d.crossings[i], Smoothing(s));
      for (int p = 0; p < 2; ++p) {
        pairs[i][s][p] = {d.crossings[i].edges[ports[p].first], d.crossings[i].edges[ports[p].second]};
      }
    }
  }

  // tally[b][loops]: number of states with b B-smoothings and `loops` circles.
  const int max_loops = d.edge_count + d.free_loops;
  std::vector<std::vector<std::int64_t>> tally(c + 1, std::vector<std::int64_t>(max_loops + 1, 0));
  UnionFind uf(std::max(d.edge_count, 1));
  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t state = 0; state < states; ++state) {
    uf.reset();
    int classes = d.edge_count;
    for (int i = 0; i < c; ++i) {
      const auto& pp = pairs[i][state >> i & 1];
      classes -= uf.unite(pp[0].first, pp[0].second);
      classes -= uf.unite(pp[1].first, pp[1].second);
    }
    ++tally[std::popcount(state)][classes + d.free_loops];
  }

  std::vector<LaurentPoly> delta_pow(max_loops + 1);
  delta_pow[0] = LaurentPoly::constant(1);
  for (int k = 1; k <= max_loops; ++k) delta_pow[k] = delta_pow[k - 1] * loop_value();

  LaurentPoly total;
  for (int b = 0; b <= c; ++b) {
    LaurentPoly row;
    for (int loops = 1; loops <= max_loops; ++loops) {
      if (tally[b][loops] != 0) row += tally[b][loops] * delta_pow[loops - 1];
    }
    total += row.shifted(c - 2 * b);
  }
  return total;
}

Diagram smooth(const Diagram& d, int index, Smoothing s) {
  if (index < 0 || index >= d.crossing_count()) throw DomainError("crossing index out of range");
  const auto& x = d.crossings[index];
  UnionFind uf(d.edge_count);
  for (const auto& [p, q] : smoothing_pairs(x, s)) uf.unite(x.edges[p], x.edges[q]);

  Diagram out;
  out.free_loops = d.free_loops;
  std::vector<int> relabel(d.edge_count, -1);
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (c == index) continue;
    Crossing y = d.crossings[c];
    for (int& e : y.edges) {
      int& r = relabel[uf.find(e)];
      if (r < 0) r = out.edge_count++;
      e = r;
    }
    out.crossings.push_back(y);
  }
  // Classes through the removed crossing that no longer touch any crossing
  // have closed up into free loops.
  std::vector<char> counted(d.edge_count, 0);
  for (int e : x.edges) {
    const int root = uf.find(e);
    if (relabel[root] < 0 && !counted[root]) {
      counted[root] = 1;
      ++out.free_loops;
    }
  }
  return out;
}

LaurentPoly canonical_bracket(const LaurentPoly& bracket) {
  if (bracket.is_zero()) return bracket;
  const int m = bracket.mindeg();
  const int r = ((m % 3) + 3) % 3;
  LaurentPoly out = bracket.shifted(r - m);
  if (out.coeffs().front() < 0) out = -out;
  return out;
}

std::string InvariantKey::to_string() const {
  return std::to_string(components) + "|" + bracket.to_string();
}

InvariantKey InvariantKey::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("invariant key must look like 'components|bracket'");
  InvariantKey key;
  try {
    key.components = std::stoi(std::string(text.substr(0, bar)));
  } catch (const std::exception&) {
    throw ParseError("invalid component count in key '" + std::string(text) + "'");
  }
  key.bracket = LaurentPoly::parse(text.substr(bar + 1));
  return key;
}

InvariantKey invariant_key(const Diagram& d, int crossing_limit) {
  InvariantKey key;
  key.components = component_count(d);
  if (key.components < 1) throw DomainError("the empty diagram has no invariant key");
  key.bracket = canonical_bracket(kauffman_bracket(d, crossing_limit));
  return key;
}

InvariantKey invariant_key(const Mosaic& m, int crossing_limit) {
  return invariant_key(build_diagram(m), crossing_limit);
}

InvariantKey mirror_key(const InvariantKey& key) {
  return {key.components, canonical_bracket(key.bracket.inverted())};
}

}  // namespace mosaickit
