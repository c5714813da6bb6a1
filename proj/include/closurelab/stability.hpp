#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "closurelab/depth.hpp"
#include "closurelab/monomial_ideal.hpp"
#include "closurelab/newton.hpp"

namespace closurelab {

struct AssRow {
  int n = 0;
  std::vector<PrimeSupport> primes;
};

/// Ass(R/closure(I^n)) for n = 1 .. nMax.
std::vector<AssRow> assScan(const MonomialIdeal& ideal, int nMax, const ScanLimits& limits = {});

/// l(l-1)d^{l-2}, or 1 when l <= 2.
mpz_class n0Bound(std::size_t analyticSpread, long long maxDegree);
mpz_class n0Bound(const MonomialIdeal& ideal, const ScanLimits& limits = {});

/// ceil(r(r^2-1) r^{r/2} (r-1)^r d^{(r-2)(r+1)}), or 1 when r <= 2. For odd r
/// the value is ceil(sqrt(r * P^2)) with P the integer part of the product,
/// computed with an exact integer square root.
mpz_class n1Bound(std::size_t rank, long long maxDegree);
mpz_class n1Bound(const MonomialIdeal& ideal);

/// An empirical stability index over the window 1 .. nMax.
struct StabilityIndex {
  std::optional<int> index;
  bool certified = false;
  std::string reason;
};

/// Least m with Ass constant on [m, nMax]; certified iff nMax >= n0.
StabilityIndex empiricalAstab(const std::vector<AssRow>& scan, const mpz_class& n0);

/// Least m with depth constant on [m, nMax]. Certified iff nMax >= n1, or the
/// tail value equals r - l(I) and the table is quasi-decreasing.
StabilityIndex empiricalDstab(const std::vector<std::size_t>& depths, std::size_t limit, const mpz_class& n1);

/// Ass(R/closure(I^n)) ⊆ Ass(R/closure(I^{n+1})) along the scan.
bool checkAssMonotone(const std::vector<AssRow>& scan);

/// depth(m) >= depth(mn) for every pair with mn inside the table (depths[k] is n = k + 1).
bool checkQuasiDecreasing(const std::vector<std::size_t>& depths);

/// closure(I^n)[F] == closure(I[F]^n).
bool checkRestrictionCommutes(const MonomialIdeal& ideal, VarSet vars, int n, const ScanLimits& limits = {});

/// closure((I, y)^n) == sum_i y^i closure(I^{n-i}).
bool checkExtensionFormula(const MonomialIdeal& ideal, int n, const ScanLimits& limits = {});

struct StabilityRow {
  int n = 0;
  std::vector<PrimeSupport> ass;
  DepthReport depth;
  std::size_t dim = 0;
};

struct StabilityReport {
  std::size_t rank = 0;
  std::size_t height = 0;
  std::size_t analyticSpread = 0;
  long long maxDegree = 0;
  std::vector<StabilityRow> perN;
  StabilityIndex astab;
  StabilityIndex dstab;
  mpz_class n0;
  mpz_class n1;
  std::size_t limitDepth = 0;
  bool assMonotone = true;
  bool quasiDecreasing = true;
};

StabilityReport stabilityScan(const MonomialIdeal& ideal, int nMax, FieldSpec field = {}, const ScanLimits& limits = {});

}  // namespace closurelab
