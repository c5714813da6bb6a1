#include "closurelab/depth.hpp"

#include <algorithm>

#include "closurelab/errors.hpp"
#include "closurelab/kernels.hpp"

namespace closurelab {

std::string methodName(DepthMethod method) { return method == DepthMethod::kTakayama ? "takayama" : "betti"; }

namespace {

std::vector<std::int32_t> asInt32(const ExponentVector& alpha) { return {alpha.begin(), alpha.end()}; }

/// Steps `alpha` through the box lo <= alpha <= hi in lexicographic order.
bool nextInBox(ExponentVector& alpha, const ExponentVector& lo, const ExponentVector& hi) {
  for (std::size_t i = alpha.rank(); i-- > 0;) {
    if (alpha[i] < hi[i]) {
      ++alpha[i];
      return true;
    }
    alpha[i] = lo[i];
  }
  return false;
}

/// Facets of the complex of subsets of `ground` containing none of `forbidden`.
std::vector<VarSet> avoidingFacets(VarSet ground, const std::vector<VarSet>& forbidden) {
  auto ok = [&](VarSet f) {
    return std::none_of(forbidden.begin(), forbidden.end(), [&](VarSet m) { return m.isSubsetOf(f); });
  };
  std::vector<VarSet> facets;
  const std::uint32_t bits = ground.bits();
  for (std::uint32_t s = bits;; s = (s - 1) & bits) {
    const VarSet f(s);
    if (ok(f)) {
      bool maximal = true;
      for (auto i : ground.minus(f).indices())
        if (ok(f | VarSet::single(i))) {
          maximal = false;
          break;
        }
      if (maximal) facets.push_back(f);
    }
    if (s == 0) break;
  }
  return facets;
}

}  // namespace

SimplicialComplex degreeComplex(const MonomialIdeal& ideal, const ExponentVector& alpha) {
  const std::size_t r = ideal.rank();
  if (alpha.rank() != r) throw DimensionMismatch("degree rank differs from ideal rank");
  const VarSet cs = alpha.coSupport();
  const VarSet free = VarSet::full(r).minus(cs);
  const std::size_t m = ideal.numGenerators();
  std::vector<std::uint32_t> greater(m), equal(m);
  const auto a = asInt32(alpha);
  if (m > 0) kernels::active().compareMasks(ideal.block(), a.data(), greater.data(), equal.data());
  std::vector<VarSet> forbidden;
  for (std::size_t k = 0; k < m; ++k) {
    const VarSet mg = VarSet(greater[k]).minus(cs);
    if (mg.empty()) return SimplicialComplex::voidComplex(r);
    forbidden.push_back(mg);
  }
  return SimplicialComplex::fromFacets(r, avoidingFacets(free, forbidden));
}

SimplicialComplex degreeComplexClosurePower(const NewtonPolyhedron& np, long long n, const ExponentVector& alpha) {
  if (alpha.rank() != np.rank) throw DimensionMismatch("degree rank differs from polyhedron rank");
  if (!alpha.isNonnegative()) throw ArgumentError("degree must be nonnegative");
  std::vector<VarSet> gens;
  for (const auto& f : np.facets)
    if (f.evaluate(alpha) < static_cast<__int128>(n) * f.b) gens.push_back(VarSet::full(np.rank).minus(f.support()));
  return SimplicialComplex::fromFacets(np.rank, std::move(gens));
}

std::size_t localCohomologyDim(const MonomialIdeal& ideal, int i, const ExponentVector& alpha, FieldSpec field) {
  const auto complex = degreeComplex(ideal, alpha);
  return reducedHomologyDims(complex, field)[i - static_cast<int>(alpha.coSupport().size()) - 1];
}

DepthReport depthBetti(const MonomialIdeal& ideal, FieldSpec field) {
  if (ideal.isUnit()) throw ArgumentError("depth of R/J needs a proper ideal J");
  const std::size_t r = ideal.rank();
  DepthReport report;
  report.method = DepthMethod::kBetti;
  report.field = field;
  if (ideal.isZero()) {
    report.depth = r;
    report.witnessIndex = -1;
    return report;
  }
  const std::size_t m = ideal.numGenerators();
  const ExponentVector hi = ideal.lcmExponents();
  const ExponentVector lo(r);
  ExponentVector alpha(r);
  std::vector<std::uint32_t> greater(m), equal(m);
  int best = -1;
  do {
    const auto a = asInt32(alpha);
    kernels::active().compareMasks(ideal.block(), a.data(), greater.data(), equal.data());
    const VarSet p = alpha.support();
    VarSet covered;
    std::vector<VarSet> gens;
    for (std::size_t k = 0; k < m; ++k) {
      if (greater[k] != 0) continue;
      const VarSet t = VarSet(equal[k]) & p;
      covered = covered | t;
      gens.push_back(p.minus(t));
    }
    // alpha must be the lcm of the generators dividing it, otherwise K^alpha is a cone.
    if (gens.empty() || !p.isSubsetOf(covered)) continue;
    const auto h = reducedHomologyDims(SimplicialComplex::fromFacets(r, std::move(gens)), field);
    for (int k = h.top(); k >= -1; --k) {
      if (h[k] == 0) continue;
      if (k + 1 > best) {
        best = k + 1;
        report.witnessDegree = alpha;
      }
      break;
    }
  } while (nextInBox(alpha, lo, hi));
  report.witnessIndex = best;
  report.depth = r - static_cast<std::size_t>(best + 1);
  return report;
}

namespace {

struct TakayamaHit {
  int index;
  ExponentVector alpha;
};

std::optional<TakayamaHit> takayamaScan(const MonomialIdeal& ideal, FieldSpec field, const std::vector<int>& rho) {
  const std::size_t r = ideal.rank();
  std::optional<TakayamaHit> best;
  const std::uint32_t all = VarSet::full(r).bits();
  for (std::uint32_t g = 0; g <= all; ++g) {
    const VarSet cs(g);
    ExponentVector lo(r), hi(r);
    bool emptyRange = false;
    for (std::size_t i = 0; i < r; ++i) {
      if (cs.contains(i)) {
        lo[i] = hi[i] = -1;
      } else {
        lo[i] = 0;
        hi[i] = rho[i] - 1;
        emptyRange |= rho[i] <= 0;
      }
    }
    if (emptyRange) continue;
    ExponentVector alpha = lo;
    do {
      const auto complex = degreeComplex(ideal, alpha);
      if (complex.isVoid()) continue;
      const auto h = reducedHomologyDims(complex, field);
      for (int k = -1; k <= h.top(); ++k) {
        if (h[k] == 0) continue;
        const int i = k + static_cast<int>(cs.size()) + 1;
        if (!best || i < best->index || (i == best->index && alpha < best->alpha)) best = TakayamaHit{i, alpha};
        break;
      }
    } while (nextInBox(alpha, lo, hi));
  }
  return best;
}

}  // namespace

DepthReport depthTakayama(const MonomialIdeal& ideal, FieldSpec field, const std::optional<std::vector<int>>& box,
                          bool crossCheck) {
  if (ideal.isUnit()) throw ArgumentError("depth of R/J needs a proper ideal J");
  const std::size_t r = ideal.rank();
  std::vector<int> natural(r, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < r; ++i) natural[i] = std::max(natural[i], static_cast<int>(g[i]));
  std::vector<int> rho = natural;
  if (box) {
    if (box->size() != r) throw DimensionMismatch("scan box has " + std::to_string(box->size()) + " entries, expected " + std::to_string(r));
    rho = *box;
  }

  DepthReport report;
  report.method = DepthMethod::kTakayama;
  report.field = field;
  auto hit = takayamaScan(ideal, field, rho);
  if (!crossCheck) {
    if (!hit) throw ConsistencyError("no nonvanishing local cohomology degree in the scan box");
    report.depth = static_cast<std::size_t>(hit->index);
    report.witnessIndex = hit->index;
    report.witnessDegree = hit->alpha;
    return report;
  }
  const auto oracle = depthBetti(ideal, field);
  if (!hit || static_cast<std::size_t>(hit->index) != oracle.depth) {
    for (std::size_t i = 0; i < r; ++i) rho[i] = std::max(2 * rho[i], natural[i]);
    hit = takayamaScan(ideal, field, rho);
    report.widened = true;
    if (!hit || static_cast<std::size_t>(hit->index) != oracle.depth)
      throw ConsistencyError("Takayama depth " + (hit ? std::to_string(hit->index) : std::string("none")) +
                             " disagrees with Betti depth " + std::to_string(oracle.depth) + " for " + ideal.toString());
  }
  report.depth = static_cast<std::size_t>(hit->index);
  report.witnessIndex = hit->index;
  report.witnessDegree = hit->alpha;
  report.crossChecked = true;
  return report;
}

std::vector<DepthScanRow> depthFunctionScan(const MonomialIdeal& ideal, int nMax, FieldSpec field,
                                            const ScanLimits& limits) {
  if (nMax < 1) throw ArgumentError("scan needs nMax >= 1");
  if (!ideal.isProper() || ideal.isZero()) throw ArgumentError("scan needs a proper nonzero ideal");
  const auto np = computeNewtonPolyhedron(ideal);
  const std::size_t dim = heightDim(ideal).dim;
  std::vector<DepthScanRow> rows;
  for (int n = 1; n <= nMax; ++n) {
    const auto j = closurePower(ideal, np, n, limits);
    rows.push_back({n, dim, depthTakayama(j, field)});
  }
  return rows;
}

std::size_t limitDepth(const MonomialIdeal& ideal, const ScanLimits& limits) {
  if (!ideal.isProper() || ideal.isZero()) throw ArgumentError("limit depth needs a proper nonzero ideal");
  return ideal.rank() - analyticSpread(ideal, limits);
}

}  // namespace closurelab
