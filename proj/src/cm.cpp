#include "closurelab/cm.hpp"

#include <algorithm>
#include <map>

#include "closurelab/errors.hpp"
#include "closurelab/stability.hpp"

namespace closurelab {

bool isCM(const MonomialIdeal& ideal, FieldSpec field) {
  return depthBetti(ideal, field).depth == heightDim(ideal).dim;
}

bool isEquimultiple(const MonomialIdeal& ideal, const ScanLimits& limits) {
  if (!ideal.isProper() || ideal.isZero()) throw ArgumentError("equimultiplicity needs a proper nonzero ideal");
  return analyticSpread(ideal, limits) == heightDim(ideal).height;
}

std::string outcomeName(CheckOutcome outcome) {
  switch (outcome) {
    case CheckOutcome::kHolds: return "holds";
    case CheckOutcome::kViolated: return "violated";
    case CheckOutcome::kUnresolved: return "unresolved";
    case CheckOutcome::kNotApplicable: return "not-applicable";
  }
  return "?";
}

CMClassification classify(const MonomialIdeal& ideal, FieldSpec field, int nWindow, const ScanLimits& limits) {
  if (nWindow < 1) throw ArgumentError("window must contain n = 1");
  if (!ideal.isProper() || ideal.isZero()) throw ArgumentError("classification needs a proper nonzero ideal");
  CMClassification out;
  out.rank = ideal.rank();
  out.ideal = ideal.toString();
  const auto np = computeNewtonPolyhedron(ideal);
  const auto hd = heightDim(ideal);
  out.height = hd.height;
  out.analyticSpread = analyticSpread(np, limits);
  out.equimultiple = out.analyticSpread == out.height;
  out.squarefree = ideal.isSquarefree();
  if (out.squarefree) out.completeIntersection = isCompleteIntersectionSquarefree(ideal);
  out.n1 = n1Bound(ideal.rank(), ideal.maxGenDegree());
  for (int n = 1; n <= nWindow; ++n) {
    const auto j = closurePower(ideal, np, n, limits);
    const auto depth = depthBetti(j, field).depth;
    out.perN.push_back({n, depth, hd.dim, depth == hd.dim});
  }
  const bool allCM = std::all_of(out.perN.begin(), out.perN.end(), [](const CMRow& row) { return row.cm; });
  auto firstFailure = [&] {
    return std::find_if(out.perN.begin(), out.perN.end(), [](const CMRow& row) { return !row.cm; })->n;
  };

  TheoremCheck equi{"equimultiple iff CM for all n", CheckOutcome::kHolds, ""};
  if (out.equimultiple && !allCM) {
    equi.outcome = CheckOutcome::kViolated;
    equi.detail = "equimultiple but not CM at n = " + std::to_string(firstFailure());
  } else if (out.equimultiple) {
    equi.detail = "equimultiple and CM for n <= " + std::to_string(nWindow);
  } else if (!allCM) {
    equi.detail = "not equimultiple and not CM at n = " + std::to_string(firstFailure());
  } else {
    equi.outcome = CheckOutcome::kUnresolved;
    equi.detail = "not equimultiple but CM for n <= " + std::to_string(nWindow) + "; failure is forced only from n1 = " +
                  out.n1.get_str();
  }
  out.checks.push_back(equi);

  TheoremCheck sq{"square-free: CM(n=3) iff CI iff equimultiple iff CM for all n", CheckOutcome::kNotApplicable, ""};
  if (out.squarefree) {
    const bool ci = *out.completeIntersection;
    if (nWindow >= 3) {
      const bool cm3 = out.perN[2].cm;
      const bool agree = cm3 == ci && ci == out.equimultiple && ci == allCM;
      sq.outcome = agree ? CheckOutcome::kHolds : CheckOutcome::kViolated;
      sq.detail = std::string("CM(n=3)=") + (cm3 ? "yes" : "no") + " CI=" + (ci ? "yes" : "no") +
                  " equimultiple=" + (out.equimultiple ? "yes" : "no") + " CM(all)=" + (allCM ? "yes" : "no");
    } else {
      const bool agree = ci == out.equimultiple && (!ci || allCM);
      sq.outcome = agree ? CheckOutcome::kHolds : CheckOutcome::kViolated;
      sq.detail = "window below 3: only CI iff equimultiple and CI => CM checked";
    }
  }
  out.checks.push_back(sq);

  for (const auto& c : out.checks)
    if (c.outcome == CheckOutcome::kViolated)
      throw ConsistencyError(c.name + " violated for " + out.ideal + ": " + c.detail);
  return out;
}

MonomialIdeal symbolicPowerSquarefree(const MonomialIdeal& ideal, int n) {
  if (!ideal.isSquarefree()) throw ArgumentError("symbolic powers are only implemented for square-free ideals");
  if (n < 1) throw ArgumentError("symbolic power exponent must be positive");
  if (ideal.isZero() || ideal.isUnit()) return ideal;
  const std::size_t r = ideal.rank();
  std::optional<MonomialIdeal> acc;
  for (const auto& p : minimalPrimes(ideal)) {
    std::vector<ExponentVector> gens;
    for (auto i : p.vars.indices()) gens.push_back(ExponentVector::unit(r, i));
    auto q = power(minimalize(r, std::move(gens)), n);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

namespace {

std::optional<ExponentVector> missingGenerator(const MonomialIdeal& a, const MonomialIdeal& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return g;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return g;
  return std::nullopt;
}

}  // namespace

IdentityCheck checkPrimDecClosure(const MonomialIdeal& ideal, int n, const ScanLimits& limits) {
  if (!ideal.isProper() || ideal.isZero()) throw ArgumentError("decomposition check needs a proper nonzero ideal");
  IdentityCheck out;
  if (!isUnmixed(ideal)) {
    out.detail = "I is not unmixed";
    return out;
  }
  const auto lhs = closurePower(ideal, n, limits);
  if (!isUnmixed(lhs)) {
    out.detail = "closure of I^" + std::to_string(n) + " is not unmixed";
    return out;
  }
  std::optional<MonomialIdeal> rhs;
  for (const auto& [prime, q] : primaryDecomposition(ideal)) {
    auto part = closurePower(q, n, limits);
    rhs = rhs ? intersect(*rhs, part) : part;
  }
  out.witness = missingGenerator(lhs, *rhs);
  out.outcome = out.witness ? CheckOutcome::kViolated : CheckOutcome::kHolds;
  out.detail = out.witness ? "sides differ at " + out.witness->toString() : "";
  return out;
}

LinkCheck checkLinkCM(const MonomialIdeal& ideal, int n, FieldSpec field, const ScanLimits& limits) {
  if (!ideal.isSquarefree()) throw ArgumentError("link check needs a square-free ideal");
  LinkCheck out;
  if (!ideal.isProper()) {
    out.detail = "unit ideal";
    return out;
  }
  if (ideal.isZero()) {
    out.outcome = CheckOutcome::kHolds;
    out.detail = "zero ideal: every link is a simplex";
    return out;
  }
  if (!isCM(closurePower(ideal, n, limits), field)) {
    out.detail = "closure of I^" + std::to_string(n) + " is not CM";
    return out;
  }
  const auto delta = stanleyReisnerComplex(ideal);
  for (auto i : delta.vertices().indices()) {
    const auto lk = delta.link(VarSet::single(i));
    const auto verts = lk.vertices().indices();
    std::vector<std::size_t> relabel(delta.ground(), 0);
    for (std::size_t k = 0; k < verts.size(); ++k) relabel[verts[k]] = k;
    std::vector<VarSet> facets;
    for (auto f : lk.facets()) {
      VarSet g;
      for (auto v : f.indices()) g.insert(relabel[v]);
      facets.push_back(g);
    }
    const auto sub = SimplicialComplex::fromFacets(verts.size(), std::move(facets));
    const auto linkIdeal = stanleyReisnerIdeal(sub);
    if (linkIdeal.isZero()) continue;  // a full simplex: polynomial ring
    if (!isCM(closurePower(linkIdeal, n, limits), field)) {
      out.outcome = CheckOutcome::kViolated;
      out.vertex = i;
      out.detail = "link of vertex " + std::to_string(i + 1) + " gives a non-CM closure power";
      return out;
    }
  }
  out.outcome = CheckOutcome::kHolds;
  return out;
}

std::string graphShape(const SimplicialComplex& complex) {
  const int d = complex.dim();
  if (d < 0) return complex.isVoid() ? "void" : "empty";
  const std::size_t nv = complex.vertices().size();
  if (d == 0) return nv == 1 ? "1 vertex" : std::to_string(nv) + " isolated vertices";
  if (d > 1) return "dimension " + std::to_string(d);
  std::size_t edges = 0;
  std::map<std::size_t, std::size_t> degree;
  for (auto f : complex.facets()) {
    if (f.size() != 2) return "graph with isolated vertices";
    ++edges;
    for (auto v : f.indices()) ++degree[v];
  }
  // connectivity by repeated merging of the vertex sets of edges
  VarSet reached = complex.facets().front();
  for (bool grew = true; grew;) {
    grew = false;
    for (auto f : complex.facets())
      if (f.intersects(reached) && !f.isSubsetOf(reached)) {
        reached = reached | f;
        grew = true;
      }
  }
  if (reached.size() != nv) return "disconnected graph";
  const bool maxDeg2 = std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second <= 2; });
  if (maxDeg2 && edges + 1 == nv) return edges == 1 ? "edge" : "path of length " + std::to_string(edges);
  if (maxDeg2 && edges == nv) return "cycle of length " + std::to_string(nv);
  return "graph";
}

LowDimVerdict lowDimClassification(const SimplicialComplex& complex, int n, FieldSpec field, const ScanLimits& limits) {
  const int d = complex.dim();
  if (d != 0 && d != 1) throw ArgumentError("low-dimensional classification needs dim 0 or 1");
  if ((d == 0 && n < 2) || (d == 1 && n < 3)) throw ArgumentError("n is below the range covered by the classification");
  LowDimVerdict out;
  out.shape = graphShape(complex);
  const auto ideal = stanleyReisnerIdeal(complex);
  out.completeIntersection = isCompleteIntersectionSquarefree(ideal);
  out.cm = isCM(closurePower(ideal, n, limits), field);
  bool allowed;
  if (d == 0) {
    allowed = complex.vertices().size() <= 2;
  } else {
    allowed = out.shape == "edge" || out.shape == "path of length 2" || out.shape == "cycle of length 3" ||
              out.shape == "cycle of length 4";
  }
  out.consistent = !out.cm || (allowed && out.completeIntersection);
  return out;
}

}  // namespace closurelab
