#pragma once

#include <optional>
#include <string>
#include <vector>

#include "closurelab/monomial_ideal.hpp"
#include "closurelab/newton.hpp"
#include "closurelab/simplicial_complex.hpp"

namespace closurelab {

enum class DepthMethod { kTakayama, kBetti };

std::string methodName(DepthMethod method);

struct DepthReport {
  std::size_t depth = 0;
  /// Takayama: a degree alpha with H^depth_m(R/J)_alpha != 0.
  /// Betti: a degree alpha with beta_{i,alpha}(J) != 0 for the top i.
  /// Absent for the zero ideal under the Betti method.
  std::optional<ExponentVector> witnessDegree;
  /// Takayama: the local cohomology index (= depth). Betti: the homological degree i.
  int witnessIndex = 0;
  DepthMethod method = DepthMethod::kBetti;
  FieldSpec field;
  /// Set when a Takayama result was compared with the Betti oracle.
  bool crossChecked = false;
  /// Takayama only: whether the scan box had to be widened.
  bool widened = false;
};

/// Δ_alpha(J) = {F ⊆ [r] \ CS_alpha : x^alpha not in J R_{F ∪ CS_alpha}}.
SimplicialComplex degreeComplex(const MonomialIdeal& ideal, const ExponentVector& alpha);

/// The same complex for J = closure of I^n, read off the facets of NP(I):
/// generated by [r] \ supp(a_j) over the facets with <a_j, alpha> < n b_j.
SimplicialComplex degreeComplexClosurePower(const NewtonPolyhedron& np, long long n, const ExponentVector& alpha);

/// dim H^i_m(R/J)_alpha = dim H~_{i - |CS_alpha| - 1}(Δ_alpha(J)).
std::size_t localCohomologyDim(const MonomialIdeal& ideal, int i, const ExponentVector& alpha, FieldSpec field = {});

/// depth R/J = r - pd(R/J), where pd is read from the multigraded Betti
/// numbers beta_{i,alpha}(J) = dim H~_{i-1}(K^alpha(J)) and alpha runs over the
/// divisors of lcm G(J). J must be proper.
DepthReport depthBetti(const MonomialIdeal& ideal, FieldSpec field = {});

/// Least i with H^i_m(R/J)_alpha != 0 over the degrees alpha with
/// alpha_i = -1 on a co-support G and 0 <= alpha_i < rho_i elsewhere, where
/// rho_i is the largest exponent of x_i in G(J) unless `box` overrides it.
/// The witness is the lexicographically least (i, alpha). The result is
/// compared with depthBetti; on disagreement the box is doubled once and a
/// second disagreement raises ConsistencyError.
DepthReport depthTakayama(const MonomialIdeal& ideal, FieldSpec field = {},
                          const std::optional<std::vector<int>>& box = std::nullopt, bool crossCheck = true);

struct DepthScanRow {
  int n = 0;
  std::size_t dim = 0;
  DepthReport report;
};

/// depth R/closure(I^n) for n = 1 .. nMax via closurePower + depthTakayama.
std::vector<DepthScanRow> depthFunctionScan(const MonomialIdeal& ideal, int nMax, FieldSpec field = {},
                                            const ScanLimits& limits = {});

/// lim depth R/closure(I^n) = r - l(I).
std::size_t limitDepth(const MonomialIdeal& ideal, const ScanLimits& limits = {});

}  // namespace closurelab
