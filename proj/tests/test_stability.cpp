#include <doctest.h>

#include <gmpxx.h>

#include "closurelab/checks.hpp"
#include "closurelab/corpus.hpp"
#include "closurelab/stability.hpp"

using namespace closurelab;

namespace {

MonomialIdeal ideal(std::size_t r, std::vector<ExponentVector> gens) { return minimalize(r, std::move(gens)); }

const PrimeSupport kMax3{VarSet::full(3)};

bool hasMaximal(const AssRow& row) {
  for (const auto& p : row.primes)
    if (p == kMax3) return true;
  return false;
}

// The n1 formula in floating point with 1024 bits, rounded up.
mpz_class n1ByFloat(long r, long d) {
  if (r <= 2) return 1;
  mpf_class x(1, 1024);
  x = r * (r * r - 1);
  mpf_class root(0, 1024);
  mpf_class rr(r, 1024);
  mpf_sqrt(root.get_mpf_t(), rr.get_mpf_t());
  for (long k = 0; k < r; ++k) x *= root;
  for (long k = 0; k < r; ++k) x *= r - 1;
  for (long k = 0; k < (r - 2) * (r + 1); ++k) x *= d;
  mpf_class c(0, 1024);
  mpf_ceil(c.get_mpf_t(), x.get_mpf_t());
  return mpz_class(c);
}

}  // namespace

TEST_CASE("Ass of closure powers") {
  const auto scan = assScan(exampleFamilyIdeal(3), 5);
  REQUIRE(scan.size() == 5);
  for (const auto& row : scan) CHECK(hasMaximal(row) == (row.n >= 3));
  CHECK(checkAssMonotone(scan));
  for (const auto& row : assScan(ideal(2, {{1, 0}, {0, 1}}), 3))
    CHECK(row.primes == std::vector<PrimeSupport>{{VarSet{0, 1}}});
  for (const auto& row : assScan(ideal(2, {{1, 1}}), 3))
    CHECK(row.primes == std::vector<PrimeSupport>{{VarSet{0}}, {VarSet{1}}});
}

TEST_CASE("Ass is nondecreasing on random scans") {
  for (const auto& i : randomIdeals({1, 3, 30, 12, 3, 3})) {
    CAPTURE(i.toString());
    CHECK(checkAssMonotone(assScan(i, 3)));
  }
}

TEST_CASE("n0 bound") {
  CHECK(n0Bound(3, 3) == 18);
  CHECK(n0Bound(3, 5) == 30);
  CHECK(n0Bound(4, 2) == 48);
  CHECK(n0Bound(2, 9) == 1);
  CHECK(n0Bound(1, 9) == 1);
  CHECK(n0Bound(exampleFamilyIdeal(3)) == 18);
}

TEST_CASE("n1 bound") {
  CHECK(n1Bound(2, 7) == 1);
  CHECK(n1Bound(3, 3) == 80811);
  CHECK(n1Bound(3, 5) == 623539);
  CHECK(n1Bound(4, 1) == 77760);
  CHECK(n1Bound(4, 2) == 79626240);
  CHECK(n1Bound(exampleFamilyIdeal(3)) == 80811);
  for (long r = 1; r <= 7; ++r)
    for (long d = 1; d <= 6; ++d) {
      CAPTURE(r);
      CAPTURE(d);
      CHECK(n1Bound(static_cast<std::size_t>(r), d) == n1ByFloat(r, d));
    }
}

TEST_CASE("bounds grow with the degree") {
  for (std::size_t r = 1; r <= 6; ++r)
    for (long long d = 1; d < 8; ++d) {
      CHECK(n0Bound(r, d) <= n0Bound(r, d + 1));
      CHECK(n1Bound(r, d) <= n1Bound(r, d + 1));
    }
}

TEST_CASE("empirical Ass stability") {
  const auto a = empiricalAstab(assScan(exampleFamilyIdeal(3), 6), n0Bound(exampleFamilyIdeal(3)));
  CHECK(a.index == 3);
  CHECK_FALSE(a.certified);
  const auto b = empiricalAstab(assScan(ideal(2, {{1, 1}}), 2), 1);
  CHECK(b.index == 1);
  CHECK(b.certified);
  const auto c = empiricalAstab(assScan(ideal(2, {{1, 0}, {0, 1}}), 1), 1);
  CHECK(c.index == 1);
  CHECK(c.certified);
  CHECK_FALSE(empiricalAstab({}, 1).index.has_value());
}

TEST_CASE("empirical depth stability") {
  const auto a = empiricalDstab({1, 1, 0, 0, 0}, 0, 80811);
  CHECK(a.index == 3);
  CHECK(a.certified);
  const auto b = empiricalDstab({1, 1, 1}, 1, 1);
  CHECK(b.index == 1);
  CHECK(b.certified);
  const auto c = empiricalDstab({2, 1, 1}, 0, 80811);
  CHECK(c.index == 2);
  CHECK_FALSE(c.certified);
  const auto d = empiricalDstab({0, 0}, 0, 1);
  CHECK(d.index == 1);
  CHECK(d.certified);
}

TEST_CASE("quasi-decreasing depth") {
  CHECK(checkQuasiDecreasing({1, 1, 0, 0, 0, 0}));
  CHECK(checkQuasiDecreasing({1, 0, 1}));
  CHECK_FALSE(checkQuasiDecreasing({0, 1}));
  CHECK_FALSE(checkQuasiDecreasing({1, 1, 1, 1, 1, 2}));
}

TEST_CASE("restriction commutes with closure powers") {
  CHECK(checkRestrictionCommutes(ideal(3, {{3, 0, 0}, {1, 1, 1}}), VarSet{}, 2));
  CHECK(checkRestrictionCommutes(ideal(3, {{3, 0, 0}, {1, 1, 1}}), VarSet{2}, 2));
  CHECK(checkRestrictionCommutes(ideal(2, {{2, 0}, {0, 3}}), VarSet{0}, 2));
  for (const auto& i : randomIdeals({2, 3, 20, 41, 3, 4}))
    for (std::uint32_t f = 0; f < (1u << i.rank()); ++f) CHECK(checkRestrictionCommutes(i, VarSet(f), 2));
}

TEST_CASE("extension formula") {
  CHECK(checkExtensionFormula(ideal(2, {{2, 0}, {0, 3}}), 1));
  CHECK(checkExtensionFormula(ideal(2, {{2, 0}, {0, 3}}), 2));
  CHECK(checkExtensionFormula(ideal(2, {{1, 0}, {0, 1}}), 3));
  for (const auto& i : randomIdeals({1, 2, 20, 43, 3, 3})) CHECK(checkExtensionFormula(i, 2));
}

TEST_CASE("stability report") {
  const auto rep = stabilityScan(exampleFamilyIdeal(3), 5);
  CHECK(rep.rank == 3);
  CHECK(rep.height == 2);
  CHECK(rep.analyticSpread == 3);
  CHECK(rep.maxDegree == 3);
  CHECK(rep.n0 == 18);
  CHECK(rep.n1 == 80811);
  CHECK(rep.limitDepth == 0);
  CHECK(rep.assMonotone);
  CHECK(rep.quasiDecreasing);
  CHECK(rep.astab.index == 3);
  CHECK(rep.dstab.index == 3);
  REQUIRE(rep.perN.size() == 5);
  for (const auto& row : rep.perN) CHECK(row.dim == 1);
}
