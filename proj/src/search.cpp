#include "mosaickit/search.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <sstream>

namespace mosaickit {

int feasibility_limit(Flavor f) { return f == Flavor::traditional ? 5 : 4; }

void check_feasible(const SearchConstraints& c) {
  if (c.n < 1) throw DomainError("mosaic size must be at least 1");
  if (!c.allow_oversize && c.n > feasibility_limit(c.flavor)) {
    throw DomainError("n = " + std::to_string(c.n) + " exceeds the " +
                      std::string(to_string(c.flavor)) + " feasibility limit of " +
                      std::to_string(feasibility_limit(c.flavor)) +
                      " (set MOSAICKIT_FEASIBILITY_OVERRIDE=1 to search anyway)");
  }
}

namespace {

// candidates[fixed][value]: codes, ascending, whose port mask agrees with
// `value` on the ports in `fixed`.
const std::array<std::array<std::vector<TileCode>, 16>, 16>& candidate_table() {
  static const auto table = [] {
    std::array<std::array<std::vector<TileCode>, 16>, 16> t;
    for (int fixed = 0; fixed < 16; ++fixed) {
      for (int value = 0; value < 16; ++value) {
        if (value & ~fixed) continue;
        for (int code = 0; code < kTileCount; ++code) {
          if ((port_mask(static_cast<TileCode>(code)) & fixed) == value) {
            t[fixed][value].push_back(static_cast<TileCode>(code));
          }
        }
      }
    }
    return t;
  }();
  return table;
}

// Row-major DFS. A connection point is decided by the last cell (in row-major
// order) that touches it: that cell must use the point exactly when the point
// has degree 1 so far. A point already at degree 2 is closed to later cells.
// This one rule covers both flavors, including board-boundary points, which
// have a single toucher.
class Engine {
 public:
  Engine(const SearchConstraints& c, const MosaicVisitor& visit)
      : c_(c), visit_(visit), n_(c.n), cells_(c.n * c.n), grid_(cells_, kBlank),
        degree_(connection_point_count(c.flavor, c.n), 0), point_(cells_), last_(cells_) {
    std::vector<int> last_toucher(degree_.size(), -1);
    for (int cell = 0; cell < cells_; ++cell) {
      for (int k = 0; k < 4; ++k) {
        const int pt = connection_point(c.flavor, n_, cell / n_ + 1, cell % n_ + 1, port_at(k));
        point_[cell][k] = pt;
        last_toucher[pt] = cell;
      }
    }
    for (int cell = 0; cell < cells_; ++cell) {
      for (int k = 0; k < 4; ++k) last_[cell][k] = last_toucher[point_[cell][k]] == cell;
    }
  }

  std::uint64_t count() const { return count_; }

  // Codes admissible at `cell` given the cells before it.
  const std::vector<TileCode>& candidates(int cell) const {
    int fixed = 0, value = 0;
    for (int k = 0; k < 4; ++k) {
      const int d = degree_[point_[cell][k]];
      if (d == 2) {
        fixed |= 1 << k;
      } else if (last_[cell][k]) {
        fixed |= 1 << k;
        if (d == 1) value |= 1 << k;
      }
    }
    return candidate_table()[fixed][value];
  }

  bool place(int cell, TileCode code) {
    grid_[cell] = code;
    const int mask = port_mask(code);
    for (int k = 0; k < 4; ++k) {
      if (mask >> k & 1) ++degree_[point_[cell][k]];
    }
    nonblank_ += code != kBlank;
    crossings_ += is_crossing(code);
    return !(c_.max_nonblank && nonblank_ > *c_.max_nonblank) &&
           !(c_.max_crossings && crossings_ > *c_.max_crossings);
  }

  void unplace(int cell) {
    const TileCode code = grid_[cell];
    const int mask = port_mask(code);
    for (int k = 0; k < 4; ++k) {
      if (mask >> k & 1) --degree_[point_[cell][k]];
    }
    nonblank_ -= code != kBlank;
    crossings_ -= is_crossing(code);
    grid_[cell] = kBlank;
  }

  void search(int cell) {
    if (cell == cells_) {
      leaf();
      return;
    }
    for (TileCode code : candidates(cell)) {
      if (place(cell, code)) search(cell + 1);
      unplace(cell);
    }
  }

  // Collects admissible first rows instead of descending further.
  void prefixes(int cell, std::vector<std::vector<TileCode>>& out) {
    if (cell == n_) {
      out.emplace_back(grid_.begin(), grid_.begin() + n_);
      return;
    }
    for (TileCode code : candidates(cell)) {
      if (place(cell, code)) prefixes(cell + 1, out);
      unplace(cell);
    }
  }

  // Places the prefix; false if some code is inadmissible or over a limit.
  bool seed(std::span<const TileCode> prefix) {
    for (std::size_t cell = 0; cell < prefix.size(); ++cell) {
      const auto& cand = candidates(static_cast<int>(cell));
      if (std::ranges::find(cand, prefix[cell]) == cand.end()) return false;
      if (!place(static_cast<int>(cell), prefix[cell])) return false;
    }
    return true;
  }

 private:
  void leaf() {
    if (c_.min_nonblank && nonblank_ < *c_.min_nonblank) return;
    Mosaic m(c_.flavor, n_, grid_);
    if (c_.canonical_only && !is_canonical(m)) return;
    if (c_.require_connected_diagram && (nonblank_ == 0 || piece_count(build_diagram(m)) != 1)) {
      return;
    }
    ++count_;
    visit_(m);
  }

  const SearchConstraints& c_;
  const MosaicVisitor& visit_;
  int n_;
  int cells_;
  std::vector<TileCode> grid_;
  std::vector<std::uint8_t> degree_;
  std::vector<std::array<int, 4>> point_;
  std::vector<std::array<bool, 4>> last_;
  int nonblank_ = 0;
  int crossings_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t enumerate(const SearchConstraints& c, const MosaicVisitor& visit) {
  check_feasible(c);
  Engine e(c, visit);
  e.search(0);
  return e.count();
}

std::vector<std::vector<TileCode>> first_row_prefixes(const SearchConstraints& c) {
  check_feasible(c);
  const MosaicVisitor none = [](const Mosaic&) {};
  Engine e(c, none);
  std::vector<std::vector<TileCode>> out;
  e.prefixes(0, out);
  return out;
}

std::uint64_t enumerate_prefix(const SearchConstraints& c, std::span<const TileCode> prefix,
                               const MosaicVisitor& visit) {
  check_feasible(c);
  if (static_cast<int>(prefix.size()) != c.n) throw DomainError("prefix must fill the first row");
  Engine e(c, visit);
  if (!e.seed(prefix)) return 0;
  e.search(c.n);
  return e.count();
}

std::vector<Mosaic> parallel_enumerate(const SearchConstraints& c, int workers) {
  if (workers < 1) throw DomainError("workers must be at least 1");
  auto parts = map_prefixes(c, workers, [&](std::span<const TileCode> prefix) {
    std::vector<Mosaic> found;
    enumerate_prefix(c, prefix, [&](const Mosaic& m) { found.push_back(m); });
    return found;
  });
  std::vector<Mosaic> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Best {
  int tiles;
  Mosaic witness;
};

using BestMap = std::map<InvariantKey, Best>;

void offer(BestMap& table, const InvariantKey& key, int tiles, const Mosaic& m) {
  auto it = table.find(key);
  if (it == table.end()) {
    table.emplace(key, Best{tiles, m});
  } else if (tiles < it->second.tiles || (tiles == it->second.tiles && m < it->second.witness)) {
    it->second = Best{tiles, m};
  }
}

}  // namespace

std::vector<TabulationRow> tabulate(Flavor f, int n_max, const TabulateOptions& options) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (options.workers < 1) throw DomainError("workers must be at least 1");
  std::map<InvariantKey, TabulationRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    SearchConstraints c;
    c.flavor = f;
    c.n = n;
    c.min_nonblank = 1;
    c.max_nonblank = options.max_nonblank;
    c.max_crossings = options.max_crossings;
    c.canonical_only = true;
    c.allow_oversize = options.allow_oversize;
    const Symmetry mirror{0, false, true};
    auto parts = map_prefixes(c, options.workers, [&](std::span<const TileCode> prefix) {
      BestMap local;
      enumerate_prefix(c, prefix, [&](const Mosaic& m) {
        const int tiles = nonblank_count(m);
        const InvariantKey key = invariant_key(m, options.crossing_limit);
        offer(local, key, tiles, m);
        const InvariantKey mk = mirror_key(key);
        if (mk != key) offer(local, mk, tiles, transform(m, mirror));
      });
      return local;
    });
    BestMap merged;
    for (const auto& part : parts) {
      for (const auto& [key, best] : part) offer(merged, key, best.tiles, best.witness);
    }
    for (const auto& [key, best] : merged) {
      auto it = rows.find(key);
      if (it == rows.end()) {
        rows.emplace(key, TabulationRow{key, f, n, best.tiles, best.witness, n_max});
      } else if (best.tiles < it->second.min_tiles) {
        it->second.min_tiles = best.tiles;
        it->second.witness = best.witness;
      }
    }
  }
  std::vector<TabulationRow> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

std::string to_jsonl(const std::vector<TabulationRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["key"] = r.key.to_string();
    j["flavor"] = std::string(to_string(r.flavor));
    j["min_n"] = r.min_n;
    j["min_tiles"] = r.min_tiles;
    j["witness"] = serialize_mosaic_inline(r.witness);
    j["n_max_searched"] = r.n_max_searched;
    out += j.dump() + '\n';
  }
  return out;
}

std::string to_csv(const std::vector<TabulationRow>& rows) {
  std::string out = "key,flavor,min_n,min_tiles\n";
  for (const auto& r : rows) {
    out += '"' + r.key.to_string() + "\"," + std::string(to_string(r.flavor)) + ',' +
           std::to_string(r.min_n) + ',' + std::to_string(r.min_tiles) + '\n';
  }
  return out;
}

CompareReport compare_tile_numbers(const std::vector<TabulationRow>& traditional,
                                   const std::vector<TabulationRow>& corner) {
  CompareReport r;
  std::map<InvariantKey, const TabulationRow*> trad, corn;
  for (const auto& row : traditional) {
    trad[row.key] = &row;
    r.n_max_traditional = std::max(r.n_max_traditional, row.n_max_searched);
  }
  for (const auto& row : corner) {
    corn[row.key] = &row;
    r.n_max_corner = std::max(r.n_max_corner, row.n_max_searched);
  }
  for (const auto& [key, t] : trad) {
    auto it = corn.find(key);
    if (it == corn.end()) {
      r.traditional_only.push_back(key);
      continue;
    }
    const TabulationRow* c = it->second;
    r.entries.push_back({key, t->min_tiles, c->min_tiles, t->witness, c->witness});
    if (c->min_tiles >= t->min_tiles) r.failures.push_back(key);
  }
  for (const auto& [key, c] : corn) {
    if (!trad.contains(key)) r.corner_only.push_back(key);
  }
  return r;
}

CompareReport compare_tile_numbers(int n_max_traditional, int n_max_corner,
                                   const TabulateOptions& options) {
  return compare_tile_numbers(tabulate(Flavor::traditional, n_max_traditional, options),
                              tabulate(Flavor::corner, n_max_corner, options));
}

std::string CompareReport::to_json() const {
  nlohmann::ordered_json j;
  j["n_max_traditional"] = n_max_traditional;
  j["n_max_corner"] = n_max_corner;
  auto& list = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json row;
    row["key"] = e.key.to_string();
    row["traditional_tiles"] = e.traditional_tiles;
    row["corner_tiles"] = e.corner_tiles;
    row["corner_smaller"] = e.corner_tiles < e.traditional_tiles;
    row["traditional_witness"] = serialize_mosaic_inline(e.traditional_witness);
    row["corner_witness"] = serialize_mosaic_inline(e.corner_witness);
    list.push_back(std::move(row));
  }
  const auto keys = [](const std::vector<InvariantKey>& ks) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& k : ks) a.push_back(k.to_string());
    return a;
  };
  j["failures"] = keys(failures);
  j["traditional_only"] = keys(traditional_only);
  j["corner_only"] = keys(corner_only);
  j["note"] = "tile counts are upper bounds over the searched boards";
  return j.dump(2);
}

}  // namespace mosaickit
