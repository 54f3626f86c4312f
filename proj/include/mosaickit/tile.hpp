#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mosaickit {

enum class Flavor : std::uint8_t { traditional, corner };

std::string_view to_string(Flavor f);
std::optional<Flavor> flavor_from_string(std::string_view s);

// Ports are indexed 0..3 in clockwise order. Traditional tiles connect at edge
// midpoints (N, E, S, W); corner tiles at the tile corners (NE, SE, SW, NW).
// Index k in one flavor corresponds to index k in the other, which is the
// 45-degree port map N->NE, E->SE, S->SW, W->NW.
enum class Port : std::uint8_t {
  N = 0, E = 1, S = 2, W = 3,
  NE = 0, SE = 1, SW = 2, NW = 3,
};

constexpr int index(Port p) { return static_cast<int>(p); }
constexpr Port port_at(int k) { return static_cast<Port>(k & 3); }

std::string_view port_name(Port p, Flavor f);

using TileCode = std::uint8_t;

inline constexpr int kTileCount = 11;
inline constexpr TileCode kBlank = 0;
inline constexpr TileCode kCrossingOverNS = 9;   // {N,S} over {E,W}
inline constexpr TileCode kCrossingOverEW = 10;  // {E,W} over {N,S}

/// Unordered pair of ports joined by one strand.
struct Strand {
  Port a;
  Port b;

  constexpr bool contains(Port p) const { return a == p || b == p; }
  constexpr Port other(Port p) const { return a == p ? b : a; }
  constexpr int mask() const { return (1 << index(a)) | (1 << index(b)); }
  friend constexpr bool operator==(Strand x, Strand y) { return x.mask() == y.mask(); }
};

/// Strand layout of one tile code. The port indices are flavor independent,
/// so one table serves both flavors.
struct TilePairing {
  std::array<Strand, 2> strands{};
  int strand_count = 0;
  /// Index into `strands` of the over strand; set only for crossing codes.
  std::optional<int> over_strand;

  int port_mask() const;
  /// Strand containing `p`, if the tile uses that port.
  std::optional<Strand> strand_at(Port p) const;
};

/// Pairing convention for codes 0..10. Throws DomainError for other codes.
const TilePairing& tile_pairing(int code);

/// Bitmask of the ports used by `code` (bit k = port index k).
int port_mask(TileCode code);

constexpr bool is_crossing(TileCode code) {
  return code == kCrossingOverNS || code == kCrossingOverEW;
}

/// Number of strands on the tile (0, 1 or 2).
int strand_count(TileCode code);

/// Looks up the code with exactly the given strand set and over strand.
std::optional<TileCode> code_for(const TilePairing& pairing);

/// Code of the single-strand tile joining two distinct ports.
TileCode single_strand_code(Port a, Port b);

}  // namespace mosaickit
