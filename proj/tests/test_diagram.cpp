#include "oracles.hpp"

#include "mosaickit/diagram.hpp"
#include "mosaickit/error.hpp"
#include "mosaickit/family.hpp"
#include "mosaickit/render.hpp"
#include "mosaickit/search.hpp"

#include <doctest.h>

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

InvariantKey key_of(const LaurentPoly& bracket, int components) {
  return {components, canonical_bracket(bracket)};
}

}  // namespace

TEST_CASE("diagram of the smallest unknot") {
  const Diagram d = build_diagram(oracle::load("fig11_unknot.kmos"));
  CHECK(d.crossing_count() == 0);
  CHECK(d.free_loops == 1);
  CHECK(component_count(d) == 1);
  CHECK(kauffman_bracket(d) == LaurentPoly::constant(1));
  CHECK(invariant_key(d).to_string() == oracle::kUnknotKey);
  CHECK(invariant_key(oracle::load("fig11_unknot_corner.kmos")).to_string() == oracle::kUnknotKey);
}

TEST_CASE("two free loops give the loop value") {
  Diagram d;
  d.free_loops = 2;
  CHECK(kauffman_bracket(d) == LaurentPoly(-2, {-1, 0, 0, 0, -1}));
  CHECK(kauffman_bracket(d) == loop_value());
  CHECK(invariant_key(d).to_string() == oracle::kUnlink2Key);
  CHECK_THROWS_AS(kauffman_bracket(Diagram{}), DomainError);
  CHECK_THROWS_AS(build_diagram(Mosaic(Flavor::corner, {{3, 0}, {0, 0}})), DomainError);
}

TEST_CASE("planar-diagram oracle agrees with the hand-derived keys") {
  CHECK(key_of(oracle::pd_bracket(oracle::figure_eight_pd()), 1).to_string() == oracle::kFigureEightKey);
  const std::string t = key_of(oracle::pd_bracket(oracle::trefoil_pd()), 1).to_string();
  CHECK((t == oracle::kTrefoilKey || t == oracle::kMirrorTrefoilKey));
  CHECK(mirror_key(InvariantKey::parse(oracle::kTrefoilKey)).to_string() == oracle::kMirrorTrefoilKey);
  // Hopf link: -A^4 - A^-4 up to a unit.
  CHECK(key_of(oracle::pd_bracket(oracle::hopf_pd()), 2) ==
        key_of(LaurentPoly(-4, {-1, 0, 0, 0, 0, 0, 0, 0, -1}), 2));
}

TEST_CASE("figure-eight fixture") {
  const Mosaic m = oracle::load("k41_5mosaic.kmos");
  const Diagram d = build_diagram(m);
  CHECK(d.crossing_count() == 4);
  CHECK(d.edge_count == 8);
  CHECK(component_count(d) == 1);
  CHECK(is_reduced(d));
  CHECK(is_alternating(d));
  CHECK_FALSE(is_diagram_split(d));
  CHECK(invariant_key(d).to_string() == oracle::kFigureEightKey);
  CHECK(mirror_key(invariant_key(d)) == invariant_key(d));
  CHECK_THROWS_AS(kauffman_bracket(d, 3), DomainError);

  // Flipping one crossing breaks alternation.
  Mosaic flipped = m;
  flipped.set(3, 3, m.at(3, 3) == 9 ? 10 : 9);
  CHECK_FALSE(is_alternating(build_diagram(flipped)));
}

TEST_CASE("trefoil witnesses on 4-mosaics are chiral") {
  std::set<std::string> keys;
  for (const auto& m : all_valid(Flavor::traditional, 4)) {
    if (crossing_count(m) != 3) continue;
    const Diagram d = build_diagram(m);
    if (component_count(d) != 1 || !is_reduced(d) || !is_alternating(d)) continue;
    keys.insert(invariant_key(d).to_string());
  }
  CHECK(keys == std::set<std::string>{oracle::kTrefoilKey, oracle::kMirrorTrefoilKey});
}

TEST_CASE("bracket satisfies the smoothing recursion") {
  const LaurentPoly a = LaurentPoly::monomial(1, 1);
  const LaurentPoly ai = LaurentPoly::monomial(1, -1);
  int checked = 0;
  for (auto f : {Flavor::traditional, Flavor::corner}) {
    for (const auto& m : all_valid(f, f == Flavor::traditional ? 4 : 3)) {
      const Diagram d = build_diagram(m);
      if (d.crossing_count() == 0) continue;
      for (int i = 0; i < d.crossing_count(); ++i) {
        CHECK(kauffman_bracket(d) == a * kauffman_bracket(smooth(d, i, Smoothing::A)) +
                                         ai * kauffman_bracket(smooth(d, i, Smoothing::B)));
      }
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("component counts") {
  for (auto f : {Flavor::traditional, Flavor::corner}) {
    for (const auto& m : all_valid(f, 3)) {
      const Diagram d = build_diagram(m);
      CHECK(component_count(d) >= d.free_loops);
      CHECK(component_count(d) >= 1);
    }
  }
  CHECK(component_count(build_diagram(generate_ln(3))) == 2);
  CHECK(component_count(build_diagram(oracle::load("split_unknots.kmos"))) == 2);
}

TEST_CASE("reducedness matches the smoothing oracle") {
  int nugatory = 0;
  for (auto f : {Flavor::traditional, Flavor::corner}) {
    for (const auto& m : all_valid(f, f == Flavor::traditional ? 4 : 3)) {
      const Diagram d = build_diagram(m);
      const bool reduced = is_reduced(d);
      CHECK(reduced == oracle::reduced_by_smoothing(d));
      nugatory += !reduced;
    }
  }
  CHECK(nugatory > 0);
}

TEST_CASE("split detection") {
  CHECK(is_diagram_split(build_diagram(oracle::load("split_unknots.kmos"))));
  CHECK_FALSE(is_diagram_split(build_diagram(generate_ln(3))));
  CHECK_FALSE(is_diagram_split(build_diagram(oracle::load("fig11_unknot.kmos"))));
  CHECK(piece_count(build_diagram(oracle::load("split_unknots.kmos"))) == 2);
}

TEST_CASE("canonical bracket absorbs units") {
  const LaurentPoly p(-5, {2, 0, -1, 0, 0, 0, 7});
  const LaurentPoly c = canonical_bracket(p);
  CHECK(c.mindeg() >= 0);
  CHECK(c.mindeg() <= 2);
  CHECK(c.coeffs().front() > 0);
  for (int k = -3; k <= 3; ++k) {
    CHECK(canonical_bracket(p.shifted(3 * k)) == c);
    CHECK(canonical_bracket(-p.shifted(3 * k)) == c);
  }
  CHECK(canonical_bracket(p.shifted(1)) != c);
}

TEST_CASE("invariant key text form") {
  for (const char* k : {oracle::kUnknotKey, oracle::kFigureEightKey, oracle::kTrefoilKey}) {
    CHECK(InvariantKey::parse(k).to_string() == k);
  }
  CHECK_THROWS_AS(InvariantKey::parse("1:1"), ParseError);
  CHECK_THROWS_AS(InvariantKey::parse("x|0:1"), ParseError);
}

TEST_CASE("ascii and svg renders") {
  const Mosaic m = oracle::load("k41_5mosaic.kmos");
  const std::string a = render_ascii(m);
  CHECK(std::count(a.begin(), a.end(), '\n') == 15);
  CHECK(a.substr(0, a.find('\n')).size() == 25);
  CHECK(render(m, RenderFormat::ascii) == a);

  const std::string s = render_svg(m);
  CHECK(s.starts_with("<svg"));
  std::size_t groups = 0;
  for (auto pos = s.find("class=\"crossing\""); pos != std::string::npos;
       pos = s.find("class=\"crossing\"", pos + 1)) {
    ++groups;
  }
  CHECK(groups == 4);
  CHECK(render_svg(m) == s);
  CHECK(render_svg(generate_ln(3)).find("viewBox=\"0 0 120 120\"") != std::string::npos);
}
