#pragma once

#include <cstdint>
#include <vector>

#include "closurelab/exponent.hpp"
#include "closurelab/monomial_ideal.hpp"

namespace closurelab {

/// The inequality <a, x> >= b with a nonnegative, a != 0 and gcd(a, b) = 1.
struct Halfspace {
  std::vector<std::int64_t> a;
  std::int64_t b = 0;

  std::size_t suppSize() const;
  VarSet support() const;
  /// <a, alpha> as an exact 128-bit value.
  __int128 evaluate(const ExponentVector& alpha) const;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace&, const Halfspace&) = default;
};

/// NP(I) as an irredundant facet system plus the generator points that are vertices.
struct NewtonPolyhedron {
  std::size_t rank = 0;
  std::vector<Halfspace> facets;
  std::vector<ExponentVector> vertices;
};

struct ScanLimits {
  std::uint64_t maxLatticePoints = 50'000'000;
  std::uint64_t maxFaces = 2'000'000;
};

/// Facets of NP(I). Each candidate hyperplane passes through s generator
/// points and is parallel to the r - s axes outside a chosen support S; its
/// normal is the cofactor vector of the determinant
///   | x_S 1 ; p_1|S 1 ; ... ; p_s|S 1 |
/// expanded along the first row. Candidates with mixed signs, a support
/// smaller than S, or a generator strictly below the hyperplane are dropped.
NewtonPolyhedron computeNewtonPolyhedron(const MonomialIdeal& ideal);

/// alpha in NP(I^n) = n NP(I), i.e. <a_j, alpha> >= n b_j for every facet.
bool npMembership(const NewtonPolyhedron& np, const ExponentVector& alpha, long long n);

/// alpha in n conv(E(G(I))) + R_+^r decided without facets: the system
///   sum_k lambda_k beta_k + s = alpha,  sum_k lambda_k = n,  lambda, s >= 0
/// is feasible iff one of its basic solutions is nonnegative, and all bases
/// are enumerated with exact Cramer solves.
bool membershipOracle(const MonomialIdeal& ideal, const ExponentVector& alpha, long long n);

/// Minimal generators of the integral closure of I^n. The minimal lattice
/// points of NP(I^n) all lie in the box [0, nD]^r (D = largest single
/// exponent in G(I)): if alpha_i > nD then alpha - e_i is still in NP(I^n),
/// because the convex-combination part of any representation has i-th
/// coordinate at most nD.
MonomialIdeal closurePower(const MonomialIdeal& ideal, int n, const ScanLimits& limits = {});
MonomialIdeal closurePower(const MonomialIdeal& ideal, const NewtonPolyhedron& np, int n,
                           const ScanLimits& limits = {});

/// max{dim F + 1 : F a compact face of NP(I)}.
std::size_t analyticSpread(const NewtonPolyhedron& np, const ScanLimits& limits = {});
std::size_t analyticSpread(const MonomialIdeal& ideal, const ScanLimits& limits = {});

long long maxGenDegree(const MonomialIdeal& ideal);

/// Affine rank of the generator points lying on facet `facet`.
std::size_t facetGeneratorRank(const NewtonPolyhedron& np, const MonomialIdeal& ideal, std::size_t facet);

/// a_{ji} <= s_j d(I)^{s_j - 1} for every coordinate.
bool coefficientBoundHolds(const Halfspace& h, long long maxDegree);

}  // namespace closurelab
