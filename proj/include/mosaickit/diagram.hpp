#pragma once

#include "mosaickit/laurent.hpp"
#include "mosaickit/mosaic.hpp"

#include <array>
#include <string>
#include <vector>

namespace mosaickit {

/// A crossing with its four incident edges in clockwise port order. The strand
/// through ports 0 and 2 is over when `over_even` is set, otherwise the strand
/// through ports 1 and 3 is over.
struct Crossing {
  std::array<int, 4> edges{};
  bool over_even = true;
};

/// 4-valent strand graph of a link diagram. Every edge id in [0, edge_count)
/// appears at exactly two crossing slots; closed curves that meet no crossing
/// are counted in `free_loops`.
struct Diagram {
  std::vector<Crossing> crossings;
  int edge_count = 0;
  int free_loops = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  bool empty() const { return crossings.empty() && free_loops == 0; }
};

/// Throws DomainError unless the mosaic is suitably connected.
Diagram build_diagram(const Mosaic& m);

int component_count(const Diagram& d);

/// No crossing is nugatory, i.e. no crossing separates its four incident
/// half-edges once it is removed from the graph.
bool is_reduced(const Diagram& d);
bool is_alternating(const Diagram& d);

/// Connected pieces of the projection; each free loop is its own piece.
int piece_count(const Diagram& d);

/// Components fall into two nonempty groups that share no crossing.
bool is_diagram_split(const Diagram& d);

inline constexpr int kDefaultCrossingLimit = 24;

/// Kauffman bracket by state sum, normalized so that one unknotted loop is 1.
LaurentPoly kauffman_bracket(const Diagram& d, int crossing_limit = kDefaultCrossingLimit);

enum class Smoothing { A, B };

/// Diagram with crossing `index` replaced by its A- or B-smoothing.
Diagram smooth(const Diagram& d, int index, Smoothing s);

/// -A^2 - A^-2
const LaurentPoly& loop_value();

/// Knot-type fingerprint: component count plus the bracket normalized up to
/// the units +-A^{3k}. Equal keys are evidence of equal link type; unequal
/// keys prove the types differ.
struct InvariantKey {
  int components = 0;
  LaurentPoly bracket;

  /// `components|mindeg:c0,c1,...`
  std::string to_string() const;
  static InvariantKey parse(std::string_view text);

  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
  friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

/// Multiplies by the unique +-A^{3k} putting the lowest degree in {0,1,2}
/// with a positive lowest coefficient.
LaurentPoly canonical_bracket(const LaurentPoly& bracket);

InvariantKey invariant_key(const Diagram& d, int crossing_limit = kDefaultCrossingLimit);
InvariantKey invariant_key(const Mosaic& m, int crossing_limit = kDefaultCrossingLimit);

/// Key of the mirror image (bracket with A -> A^{-1}).
InvariantKey mirror_key(const InvariantKey& key);

}  // namespace mosaickit
