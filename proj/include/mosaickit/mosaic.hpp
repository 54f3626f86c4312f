#pragma once

#include "mosaickit/tile.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mosaickit {

/// An n x n grid of tile codes of one flavor. Cells are addressed 1-based as
/// (row, column), matching the usual A_{i,j} notation. Suitable connectedness
/// is a checked property (see validate), not a constructor invariant, so
/// partial and invalid grids are representable.
class Mosaic {
 public:
  Mosaic(Flavor flavor, int n);
  Mosaic(Flavor flavor, int n, std::vector<TileCode> codes);
  /// Row-major nested list, e.g. {{2, 1}, {3, 4}}.
  Mosaic(Flavor flavor, std::initializer_list<std::initializer_list<int>> rows);

  Flavor flavor() const { return flavor_; }
  int size() const { return n_; }

  TileCode at(int i, int j) const { return codes_[offset(i, j)]; }
  void set(int i, int j, TileCode code);

  std::span<const TileCode> codes() const { return codes_; }

  friend bool operator==(const Mosaic&, const Mosaic&) = default;
  friend std::strong_ordering operator<=>(const Mosaic& a, const Mosaic& b);

 private:
  std::size_t offset(int i, int j) const;

  Flavor flavor_;
  int n_;
  std::vector<TileCode> codes_;
};

int nonblank_count(const Mosaic& m);
int crossing_count(const Mosaic& m);

// ---------------------------------------------------------------------------
// Connection-point geometry shared by validation, diagram extraction and the
// search engine. Traditional points are edge midpoints (horizontal edges first,
// then vertical edges); corner points are lattice points (p, q), 0 <= p, q <= n.

int connection_point_count(Flavor f, int n);
int connection_point(Flavor f, int n, int i, int j, Port p);

/// Lattice point (row, column) of a tile corner, for the corner flavor.
struct LatticePoint {
  int p;
  int q;
  friend bool operator==(LatticePoint, LatticePoint) = default;
};
LatticePoint corner_point(int i, int j, Port p);

// ---------------------------------------------------------------------------

struct Violation {
  enum class Kind {
    dangling_boundary,   ///< connection point on the mosaic boundary
    mismatched_edge,     ///< interior edge with a point on one side only
    corner_degree,       ///< lattice point whose degree is not 0 or 2
  };
  Kind kind;
  /// Cell (i, j) for edge kinds; lattice point (p, q) for corner_degree.
  int a;
  int b;
  std::string message;
};

/// Empty result means suitably connected.
std::vector<Violation> validate(const Mosaic& m);
inline bool is_suitably_connected(const Mosaic& m) { return validate(m).empty(); }

// ---------------------------------------------------------------------------
// Symmetries. A Symmetry is one of the 8 dihedral motions of the square:
// an optional left-right reflection followed by `quarter_turns` clockwise
// rotations. `mirror` additionally swaps over/under at every crossing.

struct Symmetry {
  int quarter_turns = 0;
  bool reflect = false;
  bool mirror = false;

  /// True when the motion maps the depicted link to its mirror image.
  bool reverses_chirality() const { return reflect != mirror; }

  static std::array<Symmetry, 8> dihedral();
  static std::array<Symmetry, 16> all();
};

/// Code that tile `code` becomes under the symmetry.
TileCode transform_code(Flavor f, TileCode code, const Symmetry& g);
Mosaic transform(const Mosaic& m, const Symmetry& g);

/// Lexicographically least image under the 16 symmetries.
Mosaic canonical_form(const Mosaic& m);
bool is_canonical(const Mosaic& m);

/// k x k window with top-left cell (i0, j0).
Mosaic submosaic(const Mosaic& m, int i0, int j0, int k);

// ---------------------------------------------------------------------------
// .kmos text format

Mosaic parse_mosaic(std::string_view text);
std::string serialize_mosaic(const Mosaic& m);
/// Single-line form, rows separated by " / ", as embedded in JSON output.
std::string serialize_mosaic_inline(const Mosaic& m);

/// Human-readable convention table (code -> pairing) for both flavors.
std::string convention_table();

}  // namespace mosaickit
