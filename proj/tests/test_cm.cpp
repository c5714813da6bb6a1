#include <doctest.h>

#include "closurelab/checks.hpp"
#include "closurelab/cm.hpp"
#include "closurelab/corpus.hpp"
#include "closurelab/errors.hpp"

using namespace closurelab;

namespace {

MonomialIdeal ideal(std::size_t r, std::vector<ExponentVector> gens) { return minimalize(r, std::move(gens)); }

SimplicialComplex complexOf(std::size_t r, std::vector<VarSet> facets) {
  return SimplicialComplex::fromFacets(r, std::move(facets));
}

const MonomialIdeal kCI = ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
const MonomialIdeal kPath = ideal(3, {{1, 1, 0}, {0, 1, 1}});
const MonomialIdeal kTriangleEdges = ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});

}  // namespace

TEST_CASE("CM quotients") {
  CHECK(isCM(ideal(2, {{1, 0}, {0, 1}})));
  CHECK(isCM(closurePower(exampleFamilyIdeal(3), 2)));
  CHECK_FALSE(isCM(closurePower(exampleFamilyIdeal(3), 3)));
  CHECK(isCM(ideal(2, {{1, 1}})));
  CHECK_FALSE(isCM(ideal(2, {{2, 0}, {1, 1}})));
}

TEST_CASE("equimultiplicity") {
  CHECK(isEquimultiple(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK_FALSE(isEquimultiple(exampleFamilyIdeal(3)));
  CHECK(isEquimultiple(ideal(2, {{1, 1}})));
  CHECK(isEquimultiple(kCI));
  CHECK_FALSE(isEquimultiple(kPath));
  CHECK_THROWS_AS(isEquimultiple(MonomialIdeal::zero(2)), ArgumentError);
}

TEST_CASE("classification of a square-free complete intersection") {
  const auto cls = classify(kCI, {}, 4);
  CHECK(cls.equimultiple);
  CHECK(cls.squarefree);
  CHECK(cls.completeIntersection == true);
  REQUIRE(cls.perN.size() == 4);
  for (const auto& row : cls.perN) CHECK(row.cm);
  for (const auto& c : cls.checks) CHECK(c.outcome == CheckOutcome::kHolds);
}

TEST_CASE("classification of a square-free non-complete intersection") {
  const auto cls = classify(kTriangleEdges, {}, 3);
  CHECK(cls.completeIntersection == false);
  CHECK_FALSE(cls.equimultiple);
  CHECK_FALSE(cls.perN[2].cm);
  for (const auto& c : cls.checks) CHECK(c.outcome != CheckOutcome::kViolated);
}

TEST_CASE("(xy, yz) is a principal ideal times a prime") {
  // (xy, yz) = y (x, z): height 1, spread 2, so closures of powers are never CM beyond n = 1
  const auto cls = classify(kPath, {}, 3);
  CHECK(cls.height == 1);
  CHECK(cls.analyticSpread == 2);
  CHECK_FALSE(cls.equimultiple);
  CHECK_FALSE(cls.perN[2].cm);
}

TEST_CASE("the example family at d = 4") {
  const auto cls = classify(exampleFamilyIdeal(4), {}, 5);
  CHECK(cls.height == 2);
  CHECK(cls.analyticSpread == 3);
  CHECK_FALSE(cls.equimultiple);
  const bool expected[] = {true, true, true, false, false};
  for (std::size_t k = 0; k < 5; ++k) CHECK(cls.perN[k].cm == expected[k]);
  CHECK(cls.checks.front().outcome == CheckOutcome::kHolds);
}

TEST_CASE("a window inside the CM range is unresolved, not a violation") {
  const auto cls = classify(exampleFamilyIdeal(4), {}, 3);
  CHECK(cls.checks.front().outcome == CheckOutcome::kUnresolved);
}

TEST_CASE("symbolic powers of square-free ideals") {
  const auto s = symbolicPowerSquarefree(kTriangleEdges, 2);
  CHECK(s.contains(ExponentVector{1, 1, 1}));
  CHECK_FALSE(power(kTriangleEdges, 2).contains(ExponentVector{1, 1, 1}));
  CHECK(symbolicPowerSquarefree(kTriangleEdges, 1) == kTriangleEdges);
  CHECK(symbolicPowerSquarefree(ideal(2, {{1, 1}}), 3) == ideal(2, {{3, 3}}));
  CHECK_THROWS_AS(symbolicPowerSquarefree(ideal(2, {{2, 0}}), 2), ArgumentError);
}

TEST_CASE("symbolic powers contain ordinary powers") {
  for (std::size_t r = 1; r <= 4; ++r)
    for (const auto& i : allSquarefreeIdeals(r))
      for (int n = 1; n <= 3; ++n) {
        const auto s = symbolicPowerSquarefree(i, n);
        CHECK(s.contains(power(i, n)));
        if (isCompleteIntersectionSquarefree(i)) CHECK(s == power(i, n));
      }
}

TEST_CASE("closure of a primary decomposition") {
  CHECK(checkPrimDecClosure(kCI, 2).outcome == CheckOutcome::kHolds);
  CHECK(checkPrimDecClosure(ideal(2, {{1, 0}, {0, 1}}), 3).outcome == CheckOutcome::kHolds);
  CHECK(checkPrimDecClosure(kTriangleEdges, 1).outcome == CheckOutcome::kHolds);
  // m is associated to closure(I^2) (witness xyz), so the hypothesis fails
  CHECK(checkPrimDecClosure(kTriangleEdges, 2).outcome == CheckOutcome::kNotApplicable);
  const auto mixed = checkPrimDecClosure(ideal(2, {{2, 0}, {1, 1}}), 2);
  CHECK(mixed.outcome == CheckOutcome::kNotApplicable);
  CHECK_FALSE(mixed.witness.has_value());
}

TEST_CASE("links of CM closure powers") {
  CHECK(checkLinkCM(MonomialIdeal::zero(3), 2).outcome == CheckOutcome::kHolds);
  const auto ci = checkLinkCM(kCI, 3);
  CHECK(ci.outcome == CheckOutcome::kHolds);
  CHECK(checkLinkCM(ideal(3, {{1, 1, 1}}), 2).outcome == CheckOutcome::kHolds);
  CHECK(checkLinkCM(kTriangleEdges, 3).outcome == CheckOutcome::kNotApplicable);
  CHECK_THROWS_AS(checkLinkCM(ideal(2, {{2, 0}}), 2), ArgumentError);
}

TEST_CASE("graph shapes") {
  CHECK(graphShape(complexOf(2, {{0, 1}})) == "edge");
  CHECK(graphShape(complexOf(3, {{0, 1}, {1, 2}})) == "path of length 2");
  CHECK(graphShape(complexOf(3, {{0, 1}, {1, 2}, {0, 2}})) == "cycle of length 3");
  CHECK(graphShape(complexOf(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == "cycle of length 4");
  CHECK(graphShape(complexOf(3, {{0}, {1}, {2}})) == "3 isolated vertices");
  CHECK(graphShape(complexOf(4, {{0, 1}, {2, 3}})) == "disconnected graph");
}

TEST_CASE("low-dimensional classification") {
  const auto three = lowDimClassification(complexOf(3, {{0}, {1}, {2}}), 2);
  CHECK_FALSE(three.cm);
  CHECK(three.consistent);
  CHECK(closurePower(kTriangleEdges, 2).contains(ExponentVector{1, 1, 1}) == false);
  CHECK(colon(closurePower(kTriangleEdges, 2), {1, 1, 1}) == ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

  const auto path = lowDimClassification(complexOf(4, {{0, 1}, {1, 2}}), 3);
  CHECK(path.shape == "path of length 2");
  CHECK(path.cm);
  CHECK(path.completeIntersection);
  CHECK(path.consistent);

  const auto square = lowDimClassification(complexOf(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 3);
  CHECK(square.shape == "cycle of length 4");
  CHECK(square.cm);
  CHECK(square.completeIntersection);
  CHECK(stanleyReisnerIdeal(complexOf(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == ideal(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));

  const auto longPath = lowDimClassification(complexOf(4, {{0, 1}, {1, 2}, {2, 3}}), 3);
  CHECK_FALSE(longPath.cm);
  CHECK(longPath.consistent);
  CHECK_THROWS_AS(lowDimClassification(complexOf(3, {{0, 1, 2}}), 3), ArgumentError);
}
