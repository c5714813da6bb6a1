#pragma once

// Executable forms of the library's invariants. Each check runs over a
// corpus of ideals and returns one pass/fail line with the number of
// instances examined and, on failure, the first counterexample.

#include <cstdint>
#include <string>
#include <vector>

#include "closurelab/corpus.hpp"
#include "closurelab/monomial_ideal.hpp"
#include "closurelab/newton.hpp"
#include "closurelab/simplicial_complex.hpp"

namespace closurelab {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::string detail;
  std::string counterexample;
};

struct CheckOptions {
  CorpusSpec corpus;
  std::size_t exhaustiveRank = 4;
  std::size_t sampleRank = 5;
  std::size_t sampleCount = 200;
  std::uint64_t sampleSeed = 11;
  FieldSpec field;
  ScanLimits limits;
  std::size_t jobs = 1;
};

/// The ideal (x^d, x y^{d-2} z, y^{d-1} z) in three variables.
MonomialIdeal exampleFamilyIdeal(int d);

/// m in Ass iff n >= d and CM iff n <= d - 1 for n <= d + 2; height 2, l = 3.
CheckResult checkExampleFamily(int d, const CheckOptions& opts);

/// npMembership == membershipOracle on every point of [0, nD]^r, n <= nMax.
CheckResult checkOracleEquivalence(const std::vector<MonomialIdeal>& ideals, int nMax, const CheckOptions& opts);
/// Facet normals: nonnegative, normalized, supporting, s_j affinely
/// independent tight generators, a_ji <= s_j d^{s_j - 1}.
CheckResult checkFacetInvariants(const std::vector<MonomialIdeal>& ideals, const CheckOptions& opts);
/// closure(I^n) contains I^n, has the same radical, and closure(I^{mn})
/// contains closure(I^m)^n.
CheckResult checkClosureContainments(const std::vector<MonomialIdeal>& ideals, int nMax, const CheckOptions& opts);
/// Decomposition, Ass, radical, restriction and minimalize identities.
std::vector<CheckResult> checkCoreInvariants(const std::vector<MonomialIdeal>& ideals, const CheckOptions& opts);

std::vector<CheckResult> checkHomologyInvariants(const CheckOptions& opts);

/// Takayama depth == Betti depth for I and closure(I^n), n <= nMax.
CheckResult checkDepthAgreement(const std::vector<MonomialIdeal>& ideals, int nMax, const CheckOptions& opts);
/// Degree complexes of closure powers from facets agree with the direct
/// definition, and Δ_alpha(closure(I)) == Δ_{n alpha}(closure(I^n)).
std::vector<CheckResult> checkDegreeComplexes(const std::vector<MonomialIdeal>& ideals, int nMax,
                                              const CheckOptions& opts);
/// depth(m) >= depth(mn) for mn <= nMax, Ass nondecreasing, 0 <= depth <= dim.
std::vector<CheckResult> checkScans(const std::vector<MonomialIdeal>& ideals, int nMax, const CheckOptions& opts);

/// Restriction commutes with closure powers, the extension formula, and the
/// decomposition formula where its hypotheses hold; each needs at least
/// `minInstances` verified cases to pass.
std::vector<CheckResult> checkStructuralIdentities(const std::vector<MonomialIdeal>& ideals, std::size_t minInstances,
                                                   const CheckOptions& opts);
/// n0 and n1 are nondecreasing in d.
CheckResult checkBoundMonotonicity();

/// CM(closure(I^3)) iff CI iff equimultiple iff CM(closure(I^n)) for n <= nMax,
/// over every square-free ideal up to opts.exhaustiveRank variables plus a
/// seeded sample at opts.sampleRank.
CheckResult checkSquarefreeSweep(int nMax, const CheckOptions& opts);
/// Link Cohen-Macaulayness and the low-dimensional shape lists on the same sweep.
std::vector<CheckResult> checkLinkAndShapes(const CheckOptions& opts);
/// Equimultiple implies CM at every scanned n; records unresolved cases.
CheckResult checkEquimultipleCoherence(const std::vector<MonomialIdeal>& ideals, int nWindow, const CheckOptions& opts);
/// Symbolic powers contain ordinary powers, with equality for complete intersections (n <= 3).
CheckResult checkSymbolicPowers(const CheckOptions& opts);

/// suite in {newton, homology, depth, stability, cm, all}.
std::vector<CheckResult> runSuite(const std::string& suite, const CheckOptions& opts);

}  // namespace closurelab
