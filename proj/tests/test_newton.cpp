#include <doctest.h>

#include <numeric>
#include <set>

#include "closurelab/corpus.hpp"
#include "closurelab/errors.hpp"
#include "closurelab/exact.hpp"
#include "closurelab/newton.hpp"

using namespace closurelab;

namespace {

MonomialIdeal ideal(std::size_t r, std::vector<ExponentVector> gens) { return minimalize(r, std::move(gens)); }

Halfspace hs(std::vector<std::int64_t> a, std::int64_t b) { return Halfspace{std::move(a), b}; }

std::set<Halfspace> facetSet(const NewtonPolyhedron& np) { return {np.facets.begin(), np.facets.end()}; }

// Every primitive a >= 0 up to the box bound whose minimal face on NP(I) has
// dimension r - 1: tight generators plus the axis directions with a_i = 0.
std::set<Halfspace> bruteForceFacets(const MonomialIdeal& i, std::int64_t bound) {
  const std::size_t r = i.rank();
  std::set<Halfspace> out;
  std::vector<std::int64_t> a(r, 0);
  while (true) {
    std::size_t k = 0;
    while (k < r && a[k] == bound) a[k++] = 0;
    if (k == r) break;
    ++a[k];
    std::int64_t g = 0;
    for (auto v : a) g = std::gcd(g, v);
    if (g != 1) continue;
    Halfspace h{a, 0};
    __int128 best = -1;
    for (const auto& gen : i.generators()) {
      const auto v = h.evaluate(gen);
      if (best < 0 || v < best) best = v;
    }
    h.b = static_cast<std::int64_t>(best);
    std::vector<ExponentVector> tight;
    for (const auto& gen : i.generators())
      if (h.evaluate(gen) == best) tight.push_back(gen);
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t t = 1; t < tight.size(); ++t) {
      std::vector<std::int64_t> row(r);
      for (std::size_t c = 0; c < r; ++c) row[c] = tight[t][c] - tight[0][c];
      rows.push_back(row);
    }
    for (std::size_t c = 0; c < r; ++c)
      if (a[c] == 0) {
        std::vector<std::int64_t> row(r, 0);
        row[c] = 1;
        rows.push_back(row);
      }
    exact::IntMatrix m(rows.size(), r);
    for (std::size_t x = 0; x < rows.size(); ++x)
      for (std::size_t c = 0; c < r; ++c) m(x, c) = rows[x][c];
    if (exact::rank(m) + 1 == r) out.insert(h);
  }
  return out;
}

// Minimal lattice points of NP(I^n) in the box, decided with the facet-free oracle.
MonomialIdeal closureByOracle(const MonomialIdeal& i, int n) {
  const std::size_t r = i.rank();
  const Exponent top = n * i.maxSingleExponent();
  std::vector<ExponentVector> inside;
  ExponentVector x(r);
  while (true) {
    if (membershipOracle(i, x, n)) inside.push_back(x);
    std::size_t k = 0;
    while (k < r && x[k] == top) x[k++] = 0;
    if (k == r) break;
    ++x[k];
  }
  return minimalize(r, inside);
}

}  // namespace

TEST_CASE("Newton polyhedra of small ideals") {
  CHECK(facetSet(computeNewtonPolyhedron(ideal(1, {{1}}))) == std::set<Halfspace>{hs({1}, 1)});
  CHECK(facetSet(computeNewtonPolyhedron(ideal(2, {{2, 0}, {0, 3}}))) ==
        std::set<Halfspace>{hs({3, 2}, 6), hs({1, 0}, 0), hs({0, 1}, 0)});
  CHECK(facetSet(computeNewtonPolyhedron(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))) ==
        std::set<Halfspace>{hs({1, 1, 1}, 1), hs({1, 0, 0}, 0), hs({0, 1, 0}, 0), hs({0, 0, 1}, 0)});
  CHECK_THROWS_AS(computeNewtonPolyhedron(MonomialIdeal::zero(2)), ArgumentError);
}

TEST_CASE("vertices of NP(I) are the generators on r independent facets") {
  const auto np = computeNewtonPolyhedron(ideal(2, {{2, 0}, {1, 2}, {0, 3}}));
  // (1,2) lies above the segment from (2,0) to (0,3): 3 + 4 = 7 > 6
  CHECK(np.vertices == std::vector<ExponentVector>{{0, 3}, {2, 0}});
}

TEST_CASE("facet enumeration matches a brute-force search over normals") {
  const auto corpus = randomIdeals({2, 3, 60, 101, 3, 4});
  int compared = 0;
  for (const auto& i : corpus) {
    const std::int64_t d = i.maxGenDegree();
    std::int64_t bound = static_cast<std::int64_t>(i.rank());
    for (std::size_t k = 1; k < i.rank(); ++k) bound *= d;
    if (bound > 60) continue;
    CAPTURE(i.toString());
    CHECK(facetSet(computeNewtonPolyhedron(i)) == bruteForceFacets(i, bound));
    ++compared;
  }
  CHECK(compared >= 30);
}

TEST_CASE("membership in n NP(I)") {
  const auto np = computeNewtonPolyhedron(ideal(2, {{2, 0}, {0, 3}}));
  CHECK(npMembership(np, {2, 0}, 1));
  CHECK_FALSE(npMembership(np, {1, 1}, 1));
  CHECK_FALSE(npMembership(np, {2, 2}, 2));
  CHECK(npMembership(np, {2, 3}, 2));
  CHECK_THROWS_AS(npMembership(np, {1, 1, 1}, 1), DimensionMismatch);
}

TEST_CASE("convex-combination membership oracle") {
  CHECK(membershipOracle(ideal(2, {{1, 0}, {0, 1}}), {1, 1}, 2));
  CHECK(membershipOracle(ideal(2, {{2, 0}, {0, 2}}), {1, 1}, 1));
  CHECK_FALSE(membershipOracle(ideal(2, {{2, 0}, {0, 3}}), {1, 1}, 1));
  CHECK(membershipOracle(ideal(2, {{2, 0}, {0, 3}}), {1, 2}, 1));
}

TEST_CASE("facet membership and the oracle agree on random boxes") {
  const auto corpus = randomIdeals({1, 3, 40, 55, 4, 4});
  for (const auto& i : corpus) {
    const auto np = computeNewtonPolyhedron(i);
    for (int n = 1; n <= 2; ++n) {
      const Exponent top = n * i.maxSingleExponent();
      ExponentVector x(i.rank());
      while (true) {
        CHECK(npMembership(np, x, n) == membershipOracle(i, x, n));
        std::size_t k = 0;
        while (k < x.rank() && x[k] == top) x[k++] = 0;
        if (k == x.rank()) break;
        ++x[k];
      }
    }
  }
}

TEST_CASE("integral closures of powers") {
  CHECK(closurePower(ideal(2, {{2, 0}, {0, 3}}), 1) == ideal(2, {{2, 0}, {1, 2}, {0, 3}}));
  CHECK(closurePower(ideal(2, {{1, 0}, {0, 1}}), 2) == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(closurePower(ideal(2, {{2, 0}, {0, 2}}), 1) == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(closurePower(ideal(2, {{1, 0}}), 0).isUnit());
  CHECK_THROWS_AS(closurePower(ideal(2, {{1, 0}}), -1), ArgumentError);
}

TEST_CASE("closure by box scan matches closure by the oracle") {
  const auto corpus = randomIdeals({1, 3, 30, 77, 3, 4});
  for (const auto& i : corpus)
    for (int n = 1; n <= 2; ++n) {
      CAPTURE(i.toString());
      CHECK(closurePower(i, n) == closureByOracle(i, n));
    }
}

TEST_CASE("closure scans respect the lattice point cap") {
  const auto i = ideal(3, {{20, 0, 0}, {0, 20, 0}, {0, 0, 20}});
  ScanLimits tight{1000, 1000};
  try {
    closurePower(i, 2, tight);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.required() == 41ull * 41 * 41);
    CHECK(e.cap() == 1000);
  }
}

TEST_CASE("analytic spread") {
  CHECK(analyticSpread(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(analyticSpread(ideal(2, {{5, 0}})) == 1);
  CHECK(analyticSpread(ideal(3, {{3, 0, 0}, {1, 1, 1}, {0, 2, 1}})) == 3);
  CHECK(analyticSpread(ideal(2, {{1, 1}})) == 1);
  CHECK(analyticSpread(ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}})) == 2);
  CHECK(analyticSpread(ideal(3, {{1, 1, 0}, {0, 1, 1}})) == 2);
  CHECK(analyticSpread(ideal(2, {{2, 0}, {0, 3}})) == 2);
}

TEST_CASE("analytic spread is stable under powers and sits between height and rank") {
  const auto corpus = randomIdeals({1, 3, 40, 8, 3, 4});
  for (const auto& i : corpus) {
    CAPTURE(i.toString());
    const auto ell = analyticSpread(i);
    CHECK(ell == analyticSpread(power(i, 2)));
    CHECK(ell >= heightDim(i).height);
    CHECK(ell <= i.rank());
    CHECK(ell <= i.numGenerators());
  }
}

TEST_CASE("maximal generating degree and the coefficient bound") {
  CHECK(maxGenDegree(ideal(3, {{3, 0, 0}, {1, 1, 1}})) == 3);
  CHECK(maxGenDegree(ideal(1, {{1}})) == 1);
  CHECK(maxGenDegree(ideal(2, {{2, 0}, {1, 2}, {0, 3}})) == 3);
  CHECK(coefficientBoundHolds(hs({3, 2}, 6), 3));   // 3, 2 <= 2 * 3
  CHECK_FALSE(coefficientBoundHolds(hs({7, 1}, 7), 3));
}
