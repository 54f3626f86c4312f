#pragma once

#include "mosaickit/diagram.hpp"
#include "mosaickit/error.hpp"
#include "mosaickit/mosaic.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace mosaickit {

struct SearchConstraints {
  Flavor flavor = Flavor::traditional;
  int n = 1;
  std::optional<int> min_nonblank;
  std::optional<int> max_nonblank;
  std::optional<int> max_crossings;
  /// Keep only mosaics whose projection is one nonempty connected piece.
  bool require_connected_diagram = false;
  /// Keep only the lexicographically least image under the 16 symmetries.
  bool canonical_only = false;
  /// Skip the feasibility check on n.
  bool allow_oversize = false;
};

/// Largest n searched without `allow_oversize`.
int feasibility_limit(Flavor f);

/// Throws DomainError when n exceeds the feasibility limit and oversize
/// searches are not allowed, or when n < 1.
void check_feasible(const SearchConstraints& c);

using MosaicVisitor = std::function<void(const Mosaic&)>;

/// Visits every suitably connected mosaic that meets the constraints, in
/// row-major lexicographic order of codes. Returns the number visited.
std::uint64_t enumerate(const SearchConstraints& c, const MosaicVisitor& visit);

/// Admissible first rows, in lexicographic order. For n = 1 these are the
/// complete mosaics.
std::vector<std::vector<TileCode>> first_row_prefixes(const SearchConstraints& c);

/// Same as enumerate, restricted to mosaics whose first row is `prefix`.
std::uint64_t enumerate_prefix(const SearchConstraints& c, std::span<const TileCode> prefix,
                               const MosaicVisitor& visit);

/// Runs `fn(prefix)` for every first-row prefix on `workers` threads and
/// returns the results in prefix order, so the output does not depend on the
/// worker count or on scheduling.
template <class Fn>
auto map_prefixes(const SearchConstraints& c, int workers, Fn fn)
    -> std::vector<decltype(fn(std::span<const TileCode>{}))> {
  check_feasible(c);
  const auto prefixes = first_row_prefixes(c);
  std::vector<decltype(fn(std::span<const TileCode>{}))> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < prefixes.size(); k = next++) {
      results[k] = fn(std::span<const TileCode>(prefixes[k]));
    }
  };
  const int count = std::clamp(workers, 1, std::max<int>(1, static_cast<int>(prefixes.size())));
  if (count == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < count; ++w) pool.emplace_back(work);
  }
  return results;
}

/// All mosaics enumerate would visit, in the same order.
std::vector<Mosaic> parallel_enumerate(const SearchConstraints& c, int workers);

// ---------------------------------------------------------------------------
// Tabulation

struct TabulateOptions {
  int workers = 1;
  std::optional<int> max_nonblank;
  std::optional<int> max_crossings;
  int crossing_limit = kDefaultCrossingLimit;
  bool allow_oversize = false;
};

struct TabulationRow {
  InvariantKey key;
  Flavor flavor = Flavor::traditional;
  /// Smallest board on which the key occurs.
  int min_n = 0;
  /// Fewest nonblank tiles over all searched boards.
  int min_tiles = 0;
  /// A mosaic with `min_tiles` tiles on the smallest such board.
  Mosaic witness{Flavor::traditional, 1};
  int n_max_searched = 0;
};

/// Searches all nonblank mosaics with n <= n_max and records, per invariant
/// key, the minimal board and minimal tile count. Rows are sorted by key.
/// Only canonical mosaics are visited; the mirror image of each supplies the
/// mirror key.
std::vector<TabulationRow> tabulate(Flavor f, int n_max, const TabulateOptions& options = {});

/// One JSON object per line.
std::string to_jsonl(const std::vector<TabulationRow>& rows);
std::string to_csv(const std::vector<TabulationRow>& rows);

struct CompareEntry {
  InvariantKey key;
  int traditional_tiles = 0;
  int corner_tiles = 0;
  Mosaic traditional_witness{Flavor::traditional, 1};
  Mosaic corner_witness{Flavor::corner, 1};
};

struct CompareReport {
  int n_max_traditional = 0;
  int n_max_corner = 0;
  /// Keys found in both tables, sorted by key.
  std::vector<CompareEntry> entries;
  /// Entries where the corner tile count is not below the traditional one.
  std::vector<InvariantKey> failures;
  std::vector<InvariantKey> traditional_only;
  std::vector<InvariantKey> corner_only;

  std::string to_json() const;
};

CompareReport compare_tile_numbers(const std::vector<TabulationRow>& traditional,
                                   const std::vector<TabulationRow>& corner);
CompareReport compare_tile_numbers(int n_max_traditional, int n_max_corner,
                                   const TabulateOptions& options = {});

}  // namespace mosaickit
