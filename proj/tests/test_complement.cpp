#include "oracles.hpp"

#include "mosaickit/complement.hpp"
#include "mosaickit/error.hpp"
#include "mosaickit/search.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>

using namespace mosaickit;

namespace {

std::vector<Mosaic> all_valid(Flavor f, int n) {
  SearchConstraints c;
  c.flavor = f;
  c.n = n;
  c.min_nonblank = 1;
  std::vector<Mosaic> out;
  enumerate(c, [&](const Mosaic& m) { out.push_back(m); });
  return out;
}

}  // namespace

TEST_CASE("caps of the figure-eight fixture") {
  const Mosaic m = oracle::load("k41_5mosaic.kmos");
  const auto caps = check_cap_form(m);
  REQUIRE(caps.size() == 4);
  std::set<Cap::Side> sides;
  for (const auto& c : caps) sides.insert(c.side);
  CHECK(sides.size() == 4);
  CHECK(std::ranges::find(caps, Cap{Cap::Side::top, 1, 3}) != caps.end());
  CHECK(std::ranges::find(caps, Cap{Cap::Side::left, 3, 1}) != caps.end());
  CHECK(to_string(Cap::Side::bottom) == "bottom");
}

TEST_CASE("corner complement of the figure-eight fixture") {
  const Mosaic m = oracle::load("k41_5mosaic.kmos");
  REQUIRE(nonblank_count(m) == 17);
  const ComplementResult r = corner_complement(m);
  CHECK(r.mosaic.flavor() == Flavor::corner);
  CHECK(r.mosaic.size() == 5);
  CHECK(is_suitably_connected(r.mosaic));
  CHECK(nonblank_count(r.mosaic) == 13);
  CHECK(crossing_count(r.mosaic) == 4);
  CHECK(invariant_key(r.mosaic) == invariant_key(m));
  CHECK(r.mosaic == Mosaic(Flavor::corner, {{0, 0, 2, 0, 0},
                                            {6, 7, 0, 7, 5},
                                            {9, 0, 9, 0, 8},
                                            {5, 10, 0, 10, 6},
                                            {0, 0, 4, 0, 0}}));

  CHECK(r.report.input_nonblank == 17);
  CHECK(r.report.output_nonblank == 13);
  CHECK(r.report.caps_folded == 4);
  CHECK(r.report.size_out == 5);
  CHECK(r.report.efficient);
  const auto j = nlohmann::json::parse(r.report.to_json());
  CHECK(j["size_out"] == 5);
  CHECK(j["caps_folded"] == 4);
  CHECK(j["upper_bound_witness"] == true);
  CHECK(j["input_key"] == j["output_key"]);
}

TEST_CASE("complement preconditions") {
  const Mosaic split = oracle::load("split_unknots.kmos");
  try {
    corner_complement(split);
    FAIL("expected NotInCapForm");
  } catch (const NotInCapForm& e) {
    CHECK_FALSE(e.cells().empty());
    CHECK(std::ranges::find(e.cells(), std::pair{1, 1}) != e.cells().end());
  }
  CHECK_FALSE(scan_caps(split).ok());
  CHECK_THROWS_AS(corner_complement(oracle::load("fig11_unknot.kmos")), DomainError);
  CHECK_THROWS_AS(corner_complement(corner_complement(oracle::load("k41_5mosaic.kmos")).mosaic),
                  DomainError);
  CHECK_THROWS_AS(corner_complement(Mosaic(Flavor::traditional, 5)), NotInCapForm);
  Mosaic broken = oracle::load("k41_5mosaic.kmos");
  broken.set(3, 3, 0);
  CHECK_THROWS_AS(check_cap_form(broken), DomainError);
}

TEST_CASE("complement size law on every cap-form 4-mosaic") {
  int count = 0;
  for (const auto& m : all_valid(Flavor::traditional, 4)) {
    const CapScan scan = scan_caps(m);
    if (!scan.ok() || scan.caps.empty()) continue;
    const ComplementResult r = corner_complement(m);
    CHECK(r.mosaic.size() == 3);
    CHECK(is_suitably_connected(r.mosaic));
    CHECK(nonblank_count(r.mosaic) == nonblank_count(m) - static_cast<int>(scan.caps.size()));
    CHECK(crossing_count(r.mosaic) == crossing_count(m));
    CHECK(invariant_key(r.mosaic) == invariant_key(m));
    ++count;
  }
  CHECK(count == 357);
}

TEST_CASE("inefficient complement keeps every tile") {
  for (const auto& m : all_valid(Flavor::traditional, 3)) {
    const ComplementResult r = inefficient_corner_complement(m);
    CHECK(r.mosaic.size() == 5);
    CHECK(is_suitably_connected(r.mosaic));
    CHECK(nonblank_count(r.mosaic) == nonblank_count(m));
    CHECK(invariant_key(r.mosaic) == invariant_key(m));
    CHECK_FALSE(r.report.efficient);
  }
  const Mosaic u = oracle::load("fig11_unknot.kmos");
  const ComplementResult r = inefficient_corner_complement(u);
  CHECK(r.mosaic.size() == 3);
  CHECK(r.mosaic == Mosaic(Flavor::corner, {{0, 2, 0}, {3, 0, 1}, {0, 4, 0}}));
  CHECK_THROWS_AS(inefficient_corner_complement(Mosaic(Flavor::traditional, 3)), DomainError);
  CHECK_THROWS_AS(inefficient_corner_complement(oracle::load("fig11_unknot_corner.kmos")), DomainError);
}

TEST_CASE("rewrite catalog shape") {
  const auto& cat = rewrite_catalog();
  std::set<std::string> ids;
  for (const auto& r : cat) {
    CHECK(ids.insert(r.id).second);
    CHECK(static_cast<int>(r.pattern.size()) == r.rows * r.cols);
    CHECK(r.replacement.size() == r.pattern.size());
  }
  for (const char* id : {"fold-top", "fold-bottom", "fold-left", "fold-right"}) {
    CHECK(find_rule(id).reducing);
    CHECK(find_rule(id).flavor == Flavor::corner);
  }
  CHECK_THROWS_AS(find_rule("no-such-rule"), DomainError);
  CHECK(find_rule("fold-top").pattern == std::vector<int>{2, -1, 0, 1});
  CHECK(find_rule("fold-top").replacement == std::vector<int>{0, -1, 5, 0});
}

TEST_CASE("every corner rule preserves the link on corner 3-mosaics") {
  int applied = 0;
  for (const auto& m : all_valid(Flavor::corner, 3)) {
    const InvariantKey key = invariant_key(m);
    for (const auto& rule : rewrite_catalog()) {
      if (rule.flavor != Flavor::corner) continue;
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          if (!rule_matches(m, rule, i, j)) continue;
          const Mosaic out = apply_rewrite(m, rule.id, i, j);
          REQUIRE(is_suitably_connected(out));
          CHECK(invariant_key(out) == key);
          CHECK(nonblank_count(out) == nonblank_count(m) - 1);
          ++applied;
        }
      }
    }
  }
  CHECK(applied > 0);
}

TEST_CASE("slide rules preserve the link on traditional 4-mosaics") {
  int applied = 0;
  for (const auto& m : all_valid(Flavor::traditional, 4)) {
    const InvariantKey key = invariant_key(m);
    for (const auto& rule : rewrite_catalog()) {
      if (rule.flavor != Flavor::traditional) continue;
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          if (!rule_matches(m, rule, i, j)) continue;
          const Mosaic out = apply_rewrite(m, rule.id, i, j);
          REQUIRE(is_suitably_connected(out));
          CHECK(invariant_key(out) == key);
          CHECK(nonblank_count(out) == nonblank_count(m));
          ++applied;
        }
      }
    }
  }
  CHECK(applied > 0);
}

TEST_CASE("apply_rewrite rejects mismatches") {
  const Mosaic m = oracle::load("fig11_unknot_corner.kmos");
  CHECK_THROWS_AS(apply_rewrite(m, "fold-top", 1, 1), DomainError);
  CHECK_THROWS_AS(apply_rewrite(m, "fold-top", 5, 5), DomainError);
  CHECK(m == oracle::load("fig11_unknot_corner.kmos"));
}

TEST_CASE("reduce_caps on inefficient complements") {
  const Mosaic u = inefficient_corner_complement(oracle::load("fig11_unknot.kmos")).mosaic;
  CHECK(nonblank_count(reduce_caps(u)) == 2);

  // A square loop maps to a diamond that no 2x2 contraction shortens.
  const Mosaic loop(Flavor::traditional, {{2, 5, 1}, {6, 0, 6}, {3, 5, 4}});
  const Mosaic diamond = inefficient_corner_complement(loop).mosaic;
  CHECK(reduce_caps(diamond) == diamond);

  for (const auto& m : all_valid(Flavor::traditional, 4)) {
    const Mosaic c = inefficient_corner_complement(m).mosaic;
    const Mosaic r = reduce_caps(c);
    CHECK(is_suitably_connected(r));
    CHECK(nonblank_count(r) <= nonblank_count(c));
    CHECK(invariant_key(r) == invariant_key(m));
    CHECK(reduce_caps(r) == r);
  }
  CHECK_THROWS_AS(reduce_caps(oracle::load("fig11_unknot.kmos")), DomainError);
}

TEST_CASE("split unknots: inefficient complement then reduction") {
  const Mosaic m = oracle::load("split_unknots.kmos");
  const ComplementResult r = inefficient_corner_complement(m);
  CHECK(nonblank_count(r.mosaic) == nonblank_count(m));
  CHECK(invariant_key(r.mosaic) == invariant_key(m));
  const Mosaic reduced = reduce_caps(r.mosaic);
  CHECK(nonblank_count(reduced) == 4);
  CHECK(invariant_key(reduced).to_string() == oracle::kUnlink2Key);
}
