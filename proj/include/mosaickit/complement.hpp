#pragma once

#include "mosaickit/diagram.hpp"
#include "mosaickit/error.hpp"
#include "mosaickit/mosaic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mosaickit {

/// Two-tile arc on the perimeter of a traditional mosaic. `i`, `j` is the
/// first tile; the second is its row successor (top/bottom) or column
/// successor (left/right). Codes are (2,1) top, (3,4) bottom, (2,3) left,
/// (1,4) right.
struct Cap {
  enum class Side { top, bottom, left, right };
  Side side;
  int i;
  int j;
  friend bool operator==(const Cap&, const Cap&) = default;
};

std::string_view to_string(Cap::Side s);

/// Thrown when an input is not in cap form; lists the offending cells.
class NotInCapForm : public DomainError {
 public:
  NotInCapForm(std::string message, std::vector<std::pair<int, int>> cells)
      : DomainError(std::move(message)), cells_(std::move(cells)) {}
  const std::vector<std::pair<int, int>>& cells() const { return cells_; }

 private:
  std::vector<std::pair<int, int>> cells_;
};

struct CapScan {
  std::vector<Cap> caps;
  std::vector<std::pair<int, int>> offending;
  bool ok() const { return offending.empty(); }
};

/// Partitions the perimeter into caps without throwing. Requires a
/// traditional mosaic with n >= 4.
CapScan scan_caps(const Mosaic& m);

/// Caps of a suitably connected traditional mosaic whose corner cells are
/// blank and whose nonblank perimeter tiles all belong to caps. Throws
/// NotInCapForm otherwise, DomainError on other precondition failures.
std::vector<Cap> check_cap_form(const Mosaic& m);

struct ComplementReport {
  int input_nonblank = 0;
  int output_nonblank = 0;
  int caps_folded = 0;
  InvariantKey input_key;
  InvariantKey output_key;
  int size_out = 0;
  bool efficient = true;

  std::string to_json() const;
};

struct ComplementResult {
  Mosaic mosaic;
  ComplementReport report;
};

/// 45-degree corner-flavor image of a cap-form traditional n-mosaic (n >= 4)
/// on a (2n-5)-board. Inner tile (i,j) keeps its code at (i+j-3, j-i+n-2);
/// each cap becomes one diagonal tile in the gap cell of the lattice vertex it
/// bridges. Requires at least one cap.
ComplementResult corner_complement(const Mosaic& m);

/// Every tile (i,j) keeps its code at (i+j-1, j-i+n) on a (2n-1)-board.
ComplementResult inefficient_corner_complement(const Mosaic& m);

// ---------------------------------------------------------------------------
// Local rewrites. A rule matches a small window: pattern cell -1 is a wildcard;
// replacement cell -1 leaves the tile untouched.

struct RewriteRule {
  std::string id;
  Flavor flavor;
  int rows;
  int cols;
  std::vector<int> pattern;
  std::vector<int> replacement;
  /// Tile count drops by one (cap folds and strand contractions).
  bool reducing;
};

/// Fixed rule catalog. Corner flavor: `fold-top`, `fold-bottom`, `fold-left`,
/// `fold-right` (cap images folded into the blank cell between them) and the
/// `contract:` family (two single-strand tiles meeting at a point replaced by
/// one tile in either cell). Traditional flavor: the `slide:` family, a 2x2
/// planar isotopy that moves a bend across a blank cell, in every orientation.
const std::vector<RewriteRule>& rewrite_catalog();
const RewriteRule& find_rule(std::string_view id);

bool rule_matches(const Mosaic& m, const RewriteRule& rule, int i, int j);

/// Applies `rule_id` with its top-left window cell at (i, j). Throws
/// DomainError on mismatch; the input is never modified.
Mosaic apply_rewrite(const Mosaic& m, std::string_view rule_id, int i, int j);

/// Applies reducing corner rules (first match in catalog order, anchors
/// row-major) until none matches.
Mosaic reduce_caps(const Mosaic& m);

}  // namespace mosaickit
