#pragma once

#include "mosaickit/error.hpp"
#include "mosaickit/mosaic.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mosaickit {

/// Grid with some cells fixed and the rest left as holes.
struct PartialMosaic {
  PartialMosaic(Flavor flavor, int n);

  void fix(int i, int j, TileCode code);
  const std::optional<TileCode>& at(int i, int j) const;

  Flavor flavor;
  int n;
  std::vector<std::optional<TileCode>> cells;
};

class CompletionError : public DomainError {
 public:
  enum class Kind { no_completion, ambiguous };
  CompletionError(Kind kind, std::string message) : DomainError(std::move(message)), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Fills every hole by propagating the connection-point constraints (each
/// point has degree 0 or 2; the board boundary counts like any other point)
/// to a fixpoint. Throws CompletionError when some hole has no admissible code
/// or more than one. `cell_order` optionally permutes the row-major cell
/// indices used as the propagation order; the result does not depend on it.
Mosaic complete_mosaic(const PartialMosaic& partial, std::span<const int> cell_order = {});

/// Crossing cells of the chain link on an odd n-board: every (i, j) with i+j odd.
std::vector<std::pair<int, int>> chain_link_crossings(int n);

/// The alternating chain link L_n on a corner n-mosaic, n odd and >= 3. Code 9
/// on odd rows, code 10 on even rows; the remaining tiles come from
/// complete_mosaic.
Mosaic generate_ln(int n);

struct FamilyCertificate {
  int n = 0;
  int crossings = 0;
  int components = 0;
  bool reduced = false;
  bool alternating = false;
  bool validates = false;
  int capacity_prev = 0;
  bool mosaic_number_certified = false;
  std::vector<std::string> failures;
  std::string note;

  std::string to_json() const;
};

/// Rebuilds L_n and checks crossings = floor(n^2/2), components = ceil(n/2),
/// reducedness, alternation, and crossings > capacity(n-1). Failed checks are
/// listed in `failures`; nothing is thrown for them.
FamilyCertificate certify_family(int n);

}  // namespace mosaickit
