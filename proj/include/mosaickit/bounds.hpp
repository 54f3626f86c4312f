#pragma once

#include <string>
#include <vector>

namespace mosaickit {

/// One row of a bound table. `applicable` is false when the input falls
/// outside the hypotheses of the bound (for example the Hopf link), in which
/// case `value` is meaningless and `note` says why.
struct BoundReport {
  std::string quantity;
  int input = 0;
  int value = 0;
  /// One of "corner-capacity", "mosaic-from-crossing",
  /// "corner-mosaic-from-crossing", "complement-size".
  std::string formula;
  bool applicable = true;
  std::string note;
};

/// Maximum number of crossing tiles on a corner n-mosaic, n >= 3:
/// n^2/2 for even n, (n^2+n-4)/2 for odd n.
int corner_crossing_capacity(int n);

/// Traditional mosaic number bound c+1 for a nontrivial knot or non-split
/// link with crossing number c >= 1; not applicable to the Hopf link.
BoundReport mosaic_bound_from_crossing(int c, bool is_hopf = false);

/// Corner mosaic number bound 2c-3. Only the Hopf link has crossing number 2
/// among nontrivial non-split links, so c < 3 is reported as not applicable.
BoundReport corner_mosaic_bound_from_crossing(int c);

/// Side of the corner complement of a traditional n-mosaic, n >= 4: 2n-5.
int complement_size(int n);

BoundReport capacity_report(int n);
BoundReport complement_size_report(int n);

/// Bound rows for a crossing number and/or a board size (0 = not given).
std::vector<BoundReport> bound_table(int crossing_number, int board_size, bool is_hopf);

}  // namespace mosaickit
