#include "mosaickit/family.hpp"

#include "mosaickit/bounds.hpp"
#include "mosaickit/diagram.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

namespace mosaickit {

PartialMosaic::PartialMosaic(Flavor f, int size) : flavor(f), n(size) {
  if (size < 1) throw DomainError("mosaic size must be at least 1");
  cells.assign(static_cast<std::size_t>(size) * size, std::nullopt);
}

void PartialMosaic::fix(int i, int j, TileCode code) {
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("cell out of range");
  if (code >= kTileCount) throw DomainError("tile code out of range");
  cells[(i - 1) * n + (j - 1)] = code;
}

const std::optional<TileCode>& PartialMosaic::at(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("cell out of range");
  return cells[(i - 1) * n + (j - 1)];
}

namespace {

using Domain = std::uint16_t;  // bit c set: code c still admissible
constexpr Domain kAllCodes = (1u << kTileCount) - 1;

struct Toucher {
  int cell;
  int port;
};

bool uses(int code, int port) { return port_mask(static_cast<TileCode>(code)) >> port & 1; }

// Whether some code in `d` uses (want = true) or avoids (want = false) `port`.
bool can(Domain d, int port, bool want) {
  for (int c = 0; c < kTileCount; ++c) {
    if ((d >> c & 1) && uses(c, port) == want) return true;
  }
  return false;
}

}  // namespace

Mosaic complete_mosaic(const PartialMosaic& partial, std::span<const int> cell_order) {
  const int n = partial.n;
  const Flavor f = partial.flavor;
  const int cells = n * n;

  std::vector<int> order(cells);
  if (cell_order.empty()) {
    std::iota(order.begin(), order.end(), 0);
  } else {
    order.assign(cell_order.begin(), cell_order.end());
    std::vector<int> sorted = order;
    std::ranges::sort(sorted);
    std::vector<int> expected(cells);
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) throw DomainError("cell order must be a permutation of the cells");
  }

  std::vector<std::vector<Toucher>> touchers(connection_point_count(f, n));
  for (int cell = 0; cell < cells; ++cell) {
    for (int k = 0; k < 4; ++k) {
      touchers[connection_point(f, n, cell / n + 1, cell % n + 1, port_at(k))].push_back({cell, k});
    }
  }

  std::vector<Domain> domain(cells);
  for (int cell = 0; cell < cells; ++cell) {
    const auto& fixed = partial.cells[cell];
    domain[cell] = fixed ? Domain(1u << *fixed) : kAllCodes;
  }

  // Points in the order their first touching cell appears in `order`.
  std::vector<int> point_order;
  std::vector<char> listed(touchers.size(), 0);
  for (int cell : order) {
    for (int k = 0; k < 4; ++k) {
      const int pt = connection_point(f, n, cell / n + 1, cell % n + 1, port_at(k));
      if (!listed[pt]) {
        listed[pt] = 1;
        point_order.push_back(pt);
      }
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (int pt : point_order) {
      const auto& ts = touchers[pt];
      for (std::size_t x = 0; x < ts.size(); ++x) {
        // bit s of `sums`: the other touchers can contribute degree s together.
        std::uint8_t sums = 1;
        for (std::size_t y = 0; y < ts.size(); ++y) {
          if (y == x) continue;
          const Domain d = domain[ts[y].cell];
          std::uint8_t next = 0;
          if (can(d, ts[y].port, false)) next |= sums;
          if (can(d, ts[y].port, true)) next |= static_cast<std::uint8_t>(sums << 1);
          sums = next;
        }
        Domain& d = domain[ts[x].cell];
        for (int c = 0; c < kTileCount; ++c) {
          if (!(d >> c & 1)) continue;
          const int own = uses(c, ts[x].port) ? 1 : 0;
          const bool ok = own == 0 ? (sums & 0b101) != 0 : (sums & 0b010) != 0;
          if (!ok) {
            d = static_cast<Domain>(d & ~(1u << c));
            changed = true;
          }
        }
      }
    }
  }

  std::vector<TileCode> codes(cells);
  std::vector<std::pair<int, int>> empty, multiple;
  for (int cell = 0; cell < cells; ++cell) {
    const int count = std::popcount(domain[cell]);
    if (count == 0) empty.emplace_back(cell / n + 1, cell % n + 1);
    if (count > 1) multiple.emplace_back(cell / n + 1, cell % n + 1);
    if (count >= 1) codes[cell] = static_cast<TileCode>(std::countr_zero(domain[cell]));
  }
  const auto describe = [](const std::vector<std::pair<int, int>>& where) {
    std::string s;
    for (const auto& [i, j] : where) s += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    return s;
  };
  if (!empty.empty()) {
    throw CompletionError(CompletionError::Kind::no_completion,
                          "no tile fits at" + describe(empty));
  }
  if (!multiple.empty()) {
    throw CompletionError(CompletionError::Kind::ambiguous,
                          "more than one tile fits at" + describe(multiple));
  }
  Mosaic m(f, n, std::move(codes));
  if (!is_suitably_connected(m)) {
    throw CompletionError(CompletionError::Kind::no_completion,
                          "propagation fixed every cell but the result is not suitably connected");
  }
  return m;
}

std::vector<std::pair<int, int>> chain_link_crossings(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if ((i + j) % 2 == 1) out.emplace_back(i, j);
    }
  }
  return out;
}

Mosaic generate_ln(int n) {
  if (n < 3 || n % 2 == 0) throw DomainError("the chain link family needs an odd n >= 3");
  PartialMosaic p(Flavor::corner, n);
  for (const auto& [i, j] : chain_link_crossings(n)) {
    p.fix(i, j, i % 2 == 1 ? kCrossingOverNS : kCrossingOverEW);
  }
  return complete_mosaic(p);
}

std::string FamilyCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["crossings"] = crossings;
  j["components"] = components;
  j["reduced"] = reduced;
  j["alternating"] = alternating;
  j["validates"] = validates;
  j["capacity_prev"] = capacity_prev;
  j["mosaic_number_certified"] = mosaic_number_certified;
  j["failures"] = failures;
  j["note"] = note;
  return j.dump(2);
}

FamilyCertificate certify_family(int n) {
  FamilyCertificate cert;
  cert.n = n;
  const Mosaic m = generate_ln(n);
  cert.validates = is_suitably_connected(m);
  if (!cert.validates) cert.failures.push_back("generated mosaic is not suitably connected");

  const Diagram d = build_diagram(m);
  cert.crossings = d.crossing_count();
  cert.components = component_count(d);
  cert.reduced = is_reduced(d);
  cert.alternating = is_alternating(d);
  // The capacity formula starts at n = 3; a 2-board holds at most two crossings.
  cert.capacity_prev = n - 1 >= 3 ? corner_crossing_capacity(n - 1) : (n - 1) * (n - 1) / 2;

  if (cert.crossings != n * n / 2) {
    cert.failures.push_back("expected " + std::to_string(n * n / 2) + " crossings, found " +
                            std::to_string(cert.crossings));
  }
  if (cert.components != (n + 1) / 2) {
    cert.failures.push_back("expected " + std::to_string((n + 1) / 2) + " components, found " +
                            std::to_string(cert.components));
  }
  if (!cert.reduced) cert.failures.push_back("diagram has a nugatory crossing");
  if (!cert.alternating) cert.failures.push_back("diagram is not alternating");
  const bool exceeds = cert.crossings > cert.capacity_prev;
  if (!exceeds) cert.failures.push_back("crossing number does not exceed the capacity of a smaller board");

  // A reduced alternating diagram realizes the crossing number, and a link
  // with more crossings than an (n-1)-board holds needs an n-board.
  cert.mosaic_number_certified =
      cert.validates && cert.reduced && cert.alternating && exceeds;
  cert.note =
      "certifies the corner mosaic number; the capacity bound concerns corner "
      "boards only and says nothing about the traditional mosaic number";
  return cert;
}

}  // namespace mosaickit
