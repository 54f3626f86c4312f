#include "oracles.hpp"

#include "mosaickit/diagram.hpp"
#include "mosaickit/error.hpp"
#include "mosaickit/search.hpp"

#include <doctest.h>
#include <json.hpp>

#include <map>
#include <set>

using namespace mosaickit;

namespace {

std::vector<Mosaic> run(const SearchConstraints& c) {
  std::vector<Mosaic> out;
  enumerate(c, [&](const Mosaic& m) { out.push_back(m); });
  return out;
}

SearchConstraints plain(Flavor f, int n) {
  SearchConstraints c;
  c.flavor = f;
  c.n = n;
  return c;
}

const TabulationRow* row_for(const std::vector<TabulationRow>& rows, const std::string& key) {
  for (const auto& r : rows) {
    if (r.key.to_string() == key) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("enumeration counts") {
  const std::uint64_t trad[] = {1, 2, 22, 2594};
  const std::uint64_t corner[] = {1, 14, 8141};
  for (int n = 1; n <= 4; ++n) {
    CHECK(enumerate(plain(Flavor::traditional, n), [](const Mosaic&) {}) == trad[n - 1]);
  }
  for (int n = 1; n <= 3; ++n) {
    CHECK(enumerate(plain(Flavor::corner, n), [](const Mosaic&) {}) == corner[n - 1]);
  }
}

TEST_CASE("traditional 5-mosaic count") {
  CHECK(enumerate(plain(Flavor::traditional, 5), [](const Mosaic&) {}) == 4183954);
}

TEST_CASE("enumeration agrees with brute force on 2-mosaics") {
  for (auto f : {Flavor::traditional, Flavor::corner}) {
    CHECK(run(plain(f, 2)) == oracle::brute_force(f, 2));
  }
}

TEST_CASE("enumeration output is valid, distinct and ordered") {
  for (auto f : {Flavor::traditional, Flavor::corner}) {
    const auto ms = run(plain(f, f == Flavor::traditional ? 4 : 3));
    for (std::size_t k = 0; k < ms.size(); ++k) {
      CHECK(is_suitably_connected(ms[k]));
      if (k > 0) CHECK(ms[k - 1] < ms[k]);
    }
  }
}

TEST_CASE("constraints match filtering the full enumeration") {
  for (auto f : {Flavor::traditional, Flavor::corner}) {
    const int n = f == Flavor::traditional ? 4 : 3;
    const auto all = run(plain(f, n));

    SearchConstraints c = plain(f, n);
    c.min_nonblank = 3;
    c.max_nonblank = 7;
    c.max_crossings = 2;
    std::vector<Mosaic> expected;
    for (const auto& m : all) {
      const int t = nonblank_count(m);
      if (t >= 3 && t <= 7 && crossing_count(m) <= 2) expected.push_back(m);
    }
    CHECK(run(c) == expected);

    c = plain(f, n);
    c.canonical_only = true;
    std::set<Mosaic> classes;
    expected.clear();
    for (const auto& m : all) {
      classes.insert(canonical_form(m));
      if (is_canonical(m)) expected.push_back(m);
    }
    const auto canon = run(c);
    CHECK(canon == expected);
    CHECK(canon.size() == classes.size());

    c = plain(f, n);
    c.require_connected_diagram = true;
    expected.clear();
    for (const auto& m : all) {
      if (nonblank_count(m) > 0 && piece_count(build_diagram(m)) == 1) expected.push_back(m);
    }
    CHECK(run(c) == expected);
  }
}

TEST_CASE("prefix partition covers the search exactly once") {
  for (auto f : {Flavor::traditional, Flavor::corner}) {
    for (int n = 1; n <= 3; ++n) {
      const SearchConstraints c = plain(f, n);
      std::vector<Mosaic> joined;
      for (const auto& p : first_row_prefixes(c)) {
        enumerate_prefix(c, p, [&](const Mosaic& m) { joined.push_back(m); });
      }
      CHECK(joined == run(c));
    }
  }
  const SearchConstraints c = plain(Flavor::corner, 3);
  CHECK(enumerate_prefix(c, std::vector<TileCode>{3, 3, 3}, [](const Mosaic&) {}) == 0);
  CHECK_THROWS_AS(enumerate_prefix(c, std::vector<TileCode>{0, 0}, [](const Mosaic&) {}), DomainError);
}

TEST_CASE("parallel enumeration is deterministic") {
  const SearchConstraints c = plain(Flavor::corner, 3);
  const auto one = parallel_enumerate(c, 1);
  CHECK(one == run(c));
  CHECK(parallel_enumerate(c, 8) == one);
  CHECK(parallel_enumerate(c, 3) == one);

  SearchConstraints none = c;
  none.min_nonblank = 1;
  none.max_nonblank = 0;
  CHECK(parallel_enumerate(none, 1).empty());
  CHECK(parallel_enumerate(none, 8).empty());
  CHECK_THROWS_AS(parallel_enumerate(c, 0), DomainError);
}

TEST_CASE("feasibility limits") {
  CHECK(feasibility_limit(Flavor::traditional) == 5);
  CHECK(feasibility_limit(Flavor::corner) == 4);
  CHECK_THROWS_AS(enumerate(plain(Flavor::traditional, 6), [](const Mosaic&) {}), DomainError);
  CHECK_THROWS_AS(enumerate(plain(Flavor::corner, 5), [](const Mosaic&) {}), DomainError);
  CHECK_THROWS_AS(enumerate(plain(Flavor::corner, 0), [](const Mosaic&) {}), DomainError);
  SearchConstraints big = plain(Flavor::traditional, 8);
  big.allow_oversize = true;
  big.max_nonblank = 0;
  CHECK(enumerate(big, [](const Mosaic&) {}) == 1);
}

TEST_CASE("unknot rows") {
  for (auto f : {Flavor::traditional, Flavor::corner}) {
    const auto rows = tabulate(f, 2);
    REQUIRE(rows.size() == 1);
    const TabulationRow& r = rows.front();
    CHECK(r.key.to_string() == oracle::kUnknotKey);
    CHECK(r.min_n == 2);
    CHECK(r.min_tiles == (f == Flavor::traditional ? 4 : 2));
    CHECK(r.n_max_searched == 2);
    CHECK(tabulate(f, 1).empty());
  }
}

TEST_CASE("tabulation rows are consistent") {
  for (auto f : {Flavor::traditional, Flavor::corner}) {
    const int n_max = f == Flavor::traditional ? 4 : 3;
    const auto rows = tabulate(f, n_max);
    for (const auto& r : rows) {
      CHECK(is_suitably_connected(r.witness));
      CHECK(invariant_key(r.witness) == r.key);
      CHECK(nonblank_count(r.witness) == r.min_tiles);
      CHECK(r.witness.size() >= r.min_n);
      CHECK(r.witness.size() <= n_max);
      CHECK(r.flavor == f);
    }
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k - 1].key < rows[k].key);

    // Monotone in n_max.
    const auto smaller = tabulate(f, n_max - 1);
    for (const auto& s : smaller) {
      const TabulationRow* r = row_for(rows, s.key.to_string());
      REQUIRE(r != nullptr);
      CHECK(r->min_n <= s.min_n);
      CHECK(r->min_tiles <= s.min_tiles);
    }
  }
}

TEST_CASE("tabulation sees chiral pairs and is worker independent") {
  const auto rows = tabulate(Flavor::traditional, 4);
  const TabulationRow* t = row_for(rows, oracle::kTrefoilKey);
  const TabulationRow* mt = row_for(rows, oracle::kMirrorTrefoilKey);
  REQUIRE(t != nullptr);
  REQUIRE(mt != nullptr);
  CHECK(t->min_n == 4);
  CHECK(t->min_tiles == 12);
  CHECK(mt->min_tiles == 12);

  TabulateOptions opts;
  opts.workers = 4;
  const auto again = tabulate(Flavor::traditional, 4, opts);
  CHECK(to_jsonl(again) == to_jsonl(rows));
}

TEST_CASE("tabulation output formats") {
  const auto rows = tabulate(Flavor::corner, 2);
  CHECK(to_jsonl(rows) ==
        "{\"key\":\"1|0:1\",\"flavor\":\"corner\",\"min_n\":2,\"min_tiles\":2,"
        "\"witness\":\"flavor=corner n=2 / 0 0 / 3 1\",\"n_max_searched\":2}\n");
  CHECK(to_csv(rows) == "key,flavor,min_n,min_tiles\n\"1|0:1\",corner,2,2\n");
}

TEST_CASE("corner tile counts beat traditional ones") {
  const CompareReport r = compare_tile_numbers(tabulate(Flavor::traditional, 4),
                                               tabulate(Flavor::corner, 3));
  CHECK(r.failures.empty());
  CHECK(r.n_max_traditional == 4);
  CHECK(r.n_max_corner == 3);
  std::map<std::string, CompareEntry> by_key;
  for (const auto& e : r.entries) by_key.emplace(e.key.to_string(), e);
  REQUIRE(by_key.contains(oracle::kUnknotKey));
  CHECK(by_key.at(oracle::kUnknotKey).corner_tiles == 2);
  CHECK(by_key.at(oracle::kUnknotKey).traditional_tiles == 4);
  REQUIRE(by_key.contains(oracle::kUnlink2Key));
  CHECK(by_key.at(oracle::kUnlink2Key).corner_tiles < by_key.at(oracle::kUnlink2Key).traditional_tiles);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["failures"].empty());
  CHECK(j["entries"].size() == r.entries.size());
}
