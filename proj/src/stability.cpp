#include "closurelab/stability.hpp"

#include <algorithm>

#include "closurelab/errors.hpp"

namespace closurelab {

std::vector<AssRow> assScan(const MonomialIdeal& ideal, int nMax, const ScanLimits& limits) {
  if (nMax < 1) throw ArgumentError("scan needs nMax >= 1");
  if (!ideal.isProper() || ideal.isZero()) throw ArgumentError("scan needs a proper nonzero ideal");
  const auto np = computeNewtonPolyhedron(ideal);
  std::vector<AssRow> rows;
  for (int n = 1; n <= nMax; ++n) rows.push_back({n, associatedPrimes(closurePower(ideal, np, n, limits))});
  return rows;
}

mpz_class n0Bound(std::size_t analyticSpread, long long maxDegree) {
  if (analyticSpread <= 2) return 1;
  mpz_class d = static_cast<long>(maxDegree), out;
  mpz_pow_ui(out.get_mpz_t(), d.get_mpz_t(), analyticSpread - 2);
  return out * static_cast<unsigned long>(analyticSpread) * static_cast<unsigned long>(analyticSpread - 1);
}

mpz_class n0Bound(const MonomialIdeal& ideal, const ScanLimits& limits) {
  return n0Bound(analyticSpread(ideal, limits), ideal.maxGenDegree());
}

mpz_class n1Bound(std::size_t rank, long long maxDegree) {
  if (rank <= 2) return 1;
  const unsigned long r = rank;
  auto pow = [](unsigned long base, unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
  };
  mpz_class p = mpz_class(r) * (r * r - 1) * pow(r - 1, r) * pow(static_cast<unsigned long>(maxDegree), (r - 2) * (r + 1));
  if (r % 2 == 0) return p * pow(r, r / 2);
  p *= pow(r, (r - 1) / 2);
  // p * sqrt(r) = sqrt(p^2 r), rounded up
  const mpz_class squared = p * p * r;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), squared.get_mpz_t());
  if (root * root != squared) root += 1;
  return root;
}

mpz_class n1Bound(const MonomialIdeal& ideal) { return n1Bound(ideal.rank(), ideal.maxGenDegree()); }

namespace {

template <class T>
std::optional<int> constantTailStart(const std::vector<T>& values) {
  if (values.empty()) return std::nullopt;
  std::size_t m = values.size() - 1;
  while (m > 0 && values[m - 1] == values.back()) --m;
  return static_cast<int>(m) + 1;
}

}  // namespace

StabilityIndex empiricalAstab(const std::vector<AssRow>& scan, const mpz_class& n0) {
  std::vector<std::vector<PrimeSupport>> sets;
  for (const auto& row : scan) sets.push_back(row.primes);
  StabilityIndex out;
  out.index = constantTailStart(sets);
  if (!out.index) {
    out.reason = "empty window";
    return out;
  }
  const long nMax = static_cast<long>(scan.size());
  out.certified = mpz_class(nMax) >= n0;
  out.reason = out.certified ? "window reaches n0 = " + n0.get_str() : "heuristic: window " + std::to_string(nMax) + " < n0 = " + n0.get_str();
  return out;
}

StabilityIndex empiricalDstab(const std::vector<std::size_t>& depths, std::size_t limit, const mpz_class& n1) {
  StabilityIndex out;
  out.index = constantTailStart(depths);
  if (!out.index) {
    out.reason = "empty window";
    return out;
  }
  const long nMax = static_cast<long>(depths.size());
  if (mpz_class(nMax) >= n1) {
    out.certified = true;
    out.reason = "window reaches n1 = " + n1.get_str();
  } else if (depths.back() == limit && checkQuasiDecreasing(depths)) {
    out.certified = true;
    out.reason = "tail equals dim R - l(I) = " + std::to_string(limit);
  } else {
    out.reason = "heuristic: window " + std::to_string(nMax) + " < n1 = " + n1.get_str();
  }
  return out;
}

bool checkAssMonotone(const std::vector<AssRow>& scan) {
  for (std::size_t k = 1; k < scan.size(); ++k)
    if (!std::includes(scan[k].primes.begin(), scan[k].primes.end(), scan[k - 1].primes.begin(), scan[k - 1].primes.end()))
      return false;
  return true;
}

bool checkQuasiDecreasing(const std::vector<std::size_t>& depths) {
  const std::size_t top = depths.size();
  for (std::size_t m = 1; m <= top; ++m)
    for (std::size_t n = 2; m * n <= top; ++n)
      if (depths[m - 1] < depths[m * n - 1]) return false;
  return true;
}

bool checkRestrictionCommutes(const MonomialIdeal& ideal, VarSet vars, int n, const ScanLimits& limits) {
  const auto lhs = restrictIdeal(closurePower(ideal, n, limits), vars);
  const auto rhs = closurePower(restrictIdeal(ideal, vars), n, limits);
  return lhs == rhs;
}

bool checkExtensionFormula(const MonomialIdeal& ideal, int n, const ScanLimits& limits) {
  const std::size_t r = ideal.rank();
  const auto lhs = closurePower(extendWithVariable(ideal), n, limits);
  const auto np = computeNewtonPolyhedron(ideal);
  std::vector<ExponentVector> gens;
  for (int i = 0; i <= n; ++i) {
    const auto part = closurePower(ideal, np, n - i, limits);
    for (const auto& g : part.generators()) gens.push_back(g.appended(i));
  }
  return lhs == minimalize(r + 1, std::move(gens));
}

StabilityReport stabilityScan(const MonomialIdeal& ideal, int nMax, FieldSpec field, const ScanLimits& limits) {
  if (nMax < 1) throw ArgumentError("scan needs nMax >= 1");
  if (!ideal.isProper() || ideal.isZero()) throw ArgumentError("scan needs a proper nonzero ideal");
  StabilityReport rep;
  const auto np = computeNewtonPolyhedron(ideal);
  rep.rank = ideal.rank();
  const auto hd = heightDim(ideal);
  rep.height = hd.height;
  rep.analyticSpread = analyticSpread(np, limits);
  rep.maxDegree = ideal.maxGenDegree();
  rep.limitDepth = rep.rank - rep.analyticSpread;
  rep.n0 = n0Bound(rep.analyticSpread, rep.maxDegree);
  rep.n1 = n1Bound(rep.rank, rep.maxDegree);
  std::vector<AssRow> ass;
  std::vector<std::size_t> depths;
  for (int n = 1; n <= nMax; ++n) {
    const auto j = closurePower(ideal, np, n, limits);
    StabilityRow row{n, associatedPrimes(j), depthTakayama(j, field), hd.dim};
    ass.push_back({n, row.ass});
    depths.push_back(row.depth.depth);
    rep.perN.push_back(std::move(row));
  }
  rep.astab = empiricalAstab(ass, rep.n0);
  rep.dstab = empiricalDstab(depths, rep.limitDepth, rep.n1);
  rep.assMonotone = checkAssMonotone(ass);
  rep.quasiDecreasing = checkQuasiDecreasing(depths);
  return rep;
}

}  // namespace closurelab
