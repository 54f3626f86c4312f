#include "mosaickit/tile.hpp"

#include "mosaickit/error.hpp"

#include <string>

namespace mosaickit {

namespace {

using enum Port;

constexpr TilePairing none() { return {}; }
constexpr TilePairing one(Port a, Port b) { return {{Strand{a, b}, Strand{}}, 1, std::nullopt}; }
constexpr TilePairing two(Strand x, Strand y) { return {{x, y}, 2, std::nullopt}; }
constexpr TilePairing crossing(Strand over, Strand under) { return {{over, under}, 2, 0}; }

const std::array<TilePairing, kTileCount> kPairings = {
    none(),                                    // 0 blank
    one(S, W),                                 // 1
    one(S, E),                                 // 2
    one(N, E),                                 // 3
    one(N, W),                                 // 4
    one(E, W),                                 // 5
    one(N, S),                                 // 6
    two(Strand{N, W}, Strand{S, E}),           // 7
    two(Strand{N, E}, Strand{S, W}),           // 8
    crossing(Strand{N, S}, Strand{E, W}),      // 9
    crossing(Strand{E, W}, Strand{N, S}),      // 10
};

}  // namespace

std::string_view to_string(Flavor f) {
  return f == Flavor::traditional ? "traditional" : "corner";
}

std::optional<Flavor> flavor_from_string(std::string_view s) {
  if (s == "traditional") return Flavor::traditional;
  if (s == "corner") return Flavor::corner;
  return std::nullopt;
}

std::string_view port_name(Port p, Flavor f) {
  static constexpr std::array<std::string_view, 4> kTrad = {"N", "E", "S", "W"};
  static constexpr std::array<std::string_view, 4> kCorner = {"NE", "SE", "SW", "NW"};
  return f == Flavor::traditional ? kTrad[index(p)] : kCorner[index(p)];
}

int TilePairing::port_mask() const {
  int m = 0;
  for (int s = 0; s < strand_count; ++s) m |= strands[s].mask();
  return m;
}

std::optional<Strand> TilePairing::strand_at(Port p) const {
  for (int s = 0; s < strand_count; ++s) {
    if (strands[s].contains(p)) return strands[s];
  }
  return std::nullopt;
}

const TilePairing& tile_pairing(int code) {
  if (code < 0 || code >= kTileCount) {
    throw DomainError("tile code out of range: " + std::to_string(code));
  }
  return kPairings[code];
}

int port_mask(TileCode code) { return tile_pairing(code).port_mask(); }

int strand_count(TileCode code) { return tile_pairing(code).strand_count; }

std::optional<TileCode> code_for(const TilePairing& pairing) {
  for (int c = 0; c < kTileCount; ++c) {
    const auto& t = kPairings[c];
    if (t.strand_count != pairing.strand_count) continue;
    if (t.over_strand.has_value() != pairing.over_strand.has_value()) continue;
    bool same = true;
    if (t.over_strand) {
      same = t.strands[*t.over_strand] == pairing.strands[*pairing.over_strand] &&
             t.strands[1 - *t.over_strand] == pairing.strands[1 - *pairing.over_strand];
    } else if (t.strand_count == 1) {
      same = t.strands[0] == pairing.strands[0];
    } else if (t.strand_count == 2) {
      same = (t.strands[0] == pairing.strands[0] && t.strands[1] == pairing.strands[1]) ||
             (t.strands[0] == pairing.strands[1] && t.strands[1] == pairing.strands[0]);
    }
    if (same) return static_cast<TileCode>(c);
  }
  return std::nullopt;
}

TileCode single_strand_code(Port a, Port b) {
  if (a == b) throw DomainError("a strand needs two distinct ports");
  return *code_for(one(a, b));
}

}  // namespace mosaickit
