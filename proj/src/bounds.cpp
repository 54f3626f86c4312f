#include "mosaickit/bounds.hpp"

#include "mosaickit/error.hpp"

namespace mosaickit {

int corner_crossing_capacity(int n) {
  if (n < 3) throw DomainError("crossing capacity is defined for n >= 3");
  return n % 2 == 0 ? n * n / 2 : (n * n + n - 4) / 2;
}

BoundReport mosaic_bound_from_crossing(int c, bool is_hopf) {
  if (c < 1) throw DomainError("crossing number must be at least 1");
  BoundReport r{"m(K) <=", c, c + 1, "mosaic-from-crossing", true, ""};
  if (is_hopf) {
    r.applicable = false;
    r.value = 0;
    r.note = "not applicable to the Hopf link";
  }
  return r;
}

BoundReport corner_mosaic_bound_from_crossing(int c) {
  if (c < 1) throw DomainError("crossing number must be at least 1");
  BoundReport r{"m_c(K) <=", c, 2 * c - 3, "corner-mosaic-from-crossing", true, ""};
  if (c < 3) {
    r.applicable = false;
    r.value = 0;
    r.note = "needs the traditional bound, which excludes the Hopf link (the only case with c = 2)";
  }
  return r;
}

int complement_size(int n) {
  if (n < 4) throw DomainError("the corner complement needs a traditional mosaic of size >= 4");
  return 2 * n - 5;
}

BoundReport capacity_report(int n) {
  return {"max crossing tiles (corner)", n, corner_crossing_capacity(n), "corner-capacity", true, ""};
}

BoundReport complement_size_report(int n) {
  return {"complement size n_c <=", n, complement_size(n), "complement-size", true, ""};
}

std::vector<BoundReport> bound_table(int crossing_number, int board_size, bool is_hopf) {
  std::vector<BoundReport> rows;
  if (crossing_number > 0) {
    rows.push_back(mosaic_bound_from_crossing(crossing_number, is_hopf));
    BoundReport corner = corner_mosaic_bound_from_crossing(crossing_number);
    if (is_hopf && corner.applicable) {
      corner.applicable = false;
      corner.value = 0;
      corner.note = "not applicable to the Hopf link";
    }
    rows.push_back(corner);
  }
  if (board_size > 0) {
    if (board_size >= 3) rows.push_back(capacity_report(board_size));
    if (board_size >= 4) rows.push_back(complement_size_report(board_size));
  }
  return rows;
}

}  // namespace mosaickit
