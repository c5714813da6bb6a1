#include "closurelab/checks.hpp"

#include <algorithm>
#include <numeric>

#include "closurelab/cm.hpp"
#include "closurelab/depth.hpp"
#include "closurelab/errors.hpp"
#include "closurelab/parallel.hpp"
#include "closurelab/stability.hpp"

namespace closurelab {
namespace {

struct Outcome {
  std::size_t instances = 0;
  std::size_t extra = 0;  // check-specific tally (e.g. unresolved cases)
  std::string failure;
};

CheckResult aggregate(std::string suite, std::string name, const std::vector<Outcome>& outcomes) {
  CheckResult res{std::move(suite), std::move(name), true, 0, "", ""};
  for (const auto& o : outcomes) {
    res.instances += o.instances;
    if (res.passed && !o.failure.empty()) {
      res.passed = false;
      res.counterexample = o.failure;
    }
  }
  return res;
}

template <class Fn>
std::vector<Outcome> overCorpus(const std::vector<MonomialIdeal>& ideals, const CheckOptions& opts, Fn fn) {
  return parallelMap<Outcome>(ideals.size(), opts.jobs, [&](std::size_t k) {
    Outcome o;
    try {
      fn(ideals[k], o);
    } catch (const ResourceError&) {
      throw;
    } catch (const std::exception& e) {
      o.failure = ideals[k].toString() + ": " + e.what();
    }
    return o;
  });
}

bool nextInBox(ExponentVector& alpha, const ExponentVector& hi) {
  for (std::size_t i = alpha.rank(); i-- > 0;) {
    if (alpha[i] < hi[i]) {
      ++alpha[i];
      return true;
    }
    alpha[i] = 0;
  }
  return false;
}

ExponentVector uniformBox(std::size_t r, Exponent top) {
  ExponentVector v(r);
  for (std::size_t i = 0; i < r; ++i) v[i] = top;
  return v;
}

bool hasMaximal(const std::vector<PrimeSupport>& primes, std::size_t r) {
  return std::find(primes.begin(), primes.end(), PrimeSupport{VarSet::full(r)}) != primes.end();
}

}  // namespace

MonomialIdeal exampleFamilyIdeal(int d) {
  if (d < 3) throw ArgumentError("the example family starts at d = 3");
  return minimalize(3, {ExponentVector{d, 0, 0}, ExponentVector{1, d - 2, 1}, ExponentVector{0, d - 1, 1}});
}

CheckResult checkExampleFamily(int d, const CheckOptions& opts) {
  CheckResult res{"example-family", "example family d=" + std::to_string(d), true, 0, "", ""};
  const auto ideal = exampleFamilyIdeal(d);
  const auto np = computeNewtonPolyhedron(ideal);
  const auto hd = heightDim(ideal);
  const auto ell = analyticSpread(np, opts.limits);
  std::string table;
  auto fail = [&](const std::string& why) {
    if (res.passed) res.counterexample = why;
    res.passed = false;
  };
  if (hd.height != 2) fail("height " + std::to_string(hd.height) + " != 2");
  if (ell != 3) fail("analytic spread " + std::to_string(ell) + " != 3");
  for (int n = 1; n <= d + 2; ++n) {
    const auto j = closurePower(ideal, np, n, opts.limits);
    const bool maxAss = hasMaximal(associatedPrimes(j), 3);
    const auto depth = depthBetti(j, opts.field).depth;
    const bool cm = depth == hd.dim;
    ++res.instances;
    table += " n=" + std::to_string(n) + ":" + (maxAss ? "m" : "-") + (cm ? "C" : "-");
    if (maxAss != (n >= d)) fail("maximal ideal associated at n=" + std::to_string(n) + " is " + (maxAss ? "yes" : "no"));
    if (cm != (n <= d - 1)) fail("CM at n=" + std::to_string(n) + " is " + (cm ? "yes" : "no"));
  }
  res.detail = "height=" + std::to_string(hd.height) + " l=" + std::to_string(ell) + table;
  return res;
}

CheckResult checkOracleEquivalence(const std::vector<MonomialIdeal>& ideals, int nMax, const CheckOptions& opts) {
  auto outcomes = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    const auto np = computeNewtonPolyhedron(ideal);
    for (int n = 1; n <= nMax; ++n) {
      const auto hi = uniformBox(ideal.rank(), n * ideal.maxSingleExponent());
      ExponentVector alpha(ideal.rank());
      do {
        ++o.instances;
        if (npMembership(np, alpha, n) != membershipOracle(ideal, alpha, n)) {
          o.failure = ideal.toString() + " n=" + std::to_string(n) + " alpha=" + alpha.toString();
          return;
        }
      } while (nextInBox(alpha, hi));
    }
  });
  auto res = aggregate("newton", "facet membership agrees with convex-combination oracle", outcomes);
  res.detail = std::to_string(ideals.size()) + " ideals, n <= " + std::to_string(nMax) + ", lattice points";
  return res;
}

CheckResult checkFacetInvariants(const std::vector<MonomialIdeal>& ideals, const CheckOptions& opts) {
  auto outcomes = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    const auto np = computeNewtonPolyhedron(ideal);
    const long long d = ideal.maxGenDegree();
    for (std::size_t j = 0; j < np.facets.size(); ++j) {
      const auto& f = np.facets[j];
      ++o.instances;
      const std::string where = ideal.toString() + " facet " + std::to_string(j);
      std::int64_t g = f.b;
      bool nonneg = true;
      for (auto v : f.a) {
        nonneg &= v >= 0;
        g = std::gcd(g, v);
      }
      if (!nonneg || f.suppSize() == 0 || g != 1) {
        o.failure = where + ": normal not nonnegative, zero, or not normalized";
        return;
      }
      for (const auto& gen : ideal.generators())
        if (f.evaluate(gen) < f.b) {
          o.failure = where + ": generator " + gen.toString() + " below the hyperplane";
          return;
        }
      if (facetGeneratorRank(np, ideal, j) < f.suppSize()) {
        o.failure = where + ": fewer than s_j affinely independent tight generators";
        return;
      }
      if (!coefficientBoundHolds(f, d)) {
        o.failure = where + ": coefficient exceeds s_j d^(s_j-1)";
        return;
      }
    }
    for (const auto& v : np.vertices)
      if (std::find(ideal.generators().begin(), ideal.generators().end(), v) == ideal.generators().end()) {
        o.failure = ideal.toString() + ": vertex " + v.toString() + " is not a generator";
        return;
      }
  });
  auto res = aggregate("newton", "facet support, affine rank and coefficient bound", outcomes);
  res.detail = std::to_string(ideals.size()) + " ideals, facets";
  return res;
}

CheckResult checkClosureContainments(const std::vector<MonomialIdeal>& ideals, int nMax, const CheckOptions& opts) {
  auto outcomes = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    const auto np = computeNewtonPolyhedron(ideal);
    std::vector<MonomialIdeal> closures;
    for (int n = 1; n <= nMax; ++n) closures.push_back(closurePower(ideal, np, n, opts.limits));
    for (int n = 1; n <= nMax; ++n) {
      ++o.instances;
      const auto& c = closures[n - 1];
      if (!c.contains(power(ideal, n))) {
        o.failure = ideal.toString() + ": closure of I^" + std::to_string(n) + " misses I^" + std::to_string(n);
        return;
      }
      if (radical(c) != radical(ideal)) {
        o.failure = ideal.toString() + ": radical changes at n=" + std::to_string(n);
        return;
      }
    }
    for (int m = 1; m <= nMax; ++m)
      for (int n = 2; m * n <= nMax; ++n) {
        ++o.instances;
        if (!closures[m * n - 1].contains(power(closures[m - 1], n))) {
          o.failure = ideal.toString() + ": closure(I^" + std::to_string(m * n) + ") misses closure(I^" +
                      std::to_string(m) + ")^" + std::to_string(n);
          return;
        }
      }
  });
  auto res = aggregate("newton", "closure powers contain powers and products of closures", outcomes);
  res.detail = std::to_string(ideals.size()) + " ideals, n <= " + std::to_string(nMax);
  return res;
}

std::vector<CheckResult> checkCoreInvariants(const std::vector<MonomialIdeal>& ideals, const CheckOptions& opts) {
  std::vector<CheckResult> out;
  auto decomp = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    for (int n = 1; n <= 4; ++n) {
      const auto p = power(ideal, n);
      if (p.maxSingleExponent() > 12) break;
      ++o.instances;
      const auto comps = irreducibleDecomposition(p);
      if (intersectComponents(p.rank(), comps) != p) {
        o.failure = ideal.toString() + ": decomposition of I^" + std::to_string(n) + " does not intersect back";
        return;
      }
    }
  });
  out.push_back(aggregate("core", "irreducible decomposition intersects to the ideal (n <= 4)", decomp));

  auto ass = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    ++o.instances;
    const auto a = associatedPrimes(ideal);
    if (a != associatedPrimesByWitness(ideal)) {
      o.failure = ideal.toString() + ": decomposition and colon-witness routes give different Ass";
      return;
    }
    for (const auto& p : minimalPrimes(radical(ideal)))
      if (std::find(a.begin(), a.end(), p) == a.end()) {
        o.failure = ideal.toString() + ": minimal prime missing from Ass";
        return;
      }
  });
  out.push_back(aggregate("core", "Ass by decomposition equals Ass by witnesses and contains minimal primes", ass));

  auto misc = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    const std::size_t r = ideal.rank();
    for (int n = 1; n <= 4; ++n) {
      ++o.instances;
      if (radical(power(ideal, n)) != radical(ideal)) {
        o.failure = ideal.toString() + ": radical of I^" + std::to_string(n) + " differs";
        return;
      }
    }
    std::vector<ExponentVector> gens(ideal.generators().begin(), ideal.generators().end());
    if (minimalize(r, gens) != ideal) {
      o.failure = ideal.toString() + ": minimalize is not idempotent";
      return;
    }
    // restrict(restrict(I, F), G) == restrict(I, F ∪ G) for disjoint F, G
    const std::uint32_t all = VarSet::full(r).bits();
    for (std::uint32_t f = 0; f <= all; ++f) {
      const VarSet fs(f);
      const auto rest = VarSet::full(r).minus(fs).indices();
      for (std::uint32_t g = 0; g < (1u << rest.size()); ++g) {
        VarSet gLocal(g), gGlobal;
        for (auto k : gLocal.indices()) gGlobal.insert(rest[k]);
        ++o.instances;
        if (restrictIdeal(restrictIdeal(ideal, fs), gLocal) != restrictIdeal(ideal, fs | gGlobal)) {
          o.failure = ideal.toString() + ": restriction does not compose";
          return;
        }
      }
    }
  });
  out.push_back(aggregate("core", "radical of powers, minimalize idempotence, restriction composition", misc));
  for (auto& r : out) r.detail = std::to_string(ideals.size()) + " ideals";
  return out;
}

namespace {

SimplicialComplex randomComplex(Rng& rng, std::size_t ground) {
  const int count = rng.between(1, 5);
  std::vector<VarSet> facets;
  for (int k = 0; k < count; ++k) facets.emplace_back(static_cast<std::uint32_t>(rng.below(1u << ground)));
  return SimplicialComplex::fromFacets(ground, facets);
}

}  // namespace

std::vector<CheckResult> checkHomologyInvariants(const CheckOptions& opts) {
  std::vector<CheckResult> out;
  {
    CheckResult res{"homology", "void and empty complex conventions", true, 3, "", ""};
    const auto empty = reducedHomologyDims(SimplicialComplex::emptyComplex(3), opts.field);
    const auto voidH = reducedHomologyDims(SimplicialComplex::voidComplex(3), opts.field);
    const auto point = reducedHomologyDims(SimplicialComplex::simplex(3, VarSet{0}), opts.field);
    if (empty[-1] != 1 || empty.dims().size() != 1) res.passed = false, res.counterexample = "EMPTY complex";
    if (!voidH.isZero()) res.passed = false, res.counterexample = "VOID complex";
    if (!point.isZero()) res.passed = false, res.counterexample = "single point";
    out.push_back(res);
  }
  {
    CheckResult res{"homology", "boundary of the k-simplex is a (k-1)-sphere, k <= 5", true, 0, "", ""};
    for (std::size_t k = 1; k <= 5; ++k) {
      std::vector<VarSet> facets;
      for (std::size_t v = 0; v <= k; ++v) facets.push_back(VarSet::full(k + 1).minus(VarSet::single(v)));
      const auto h = reducedHomologyDims(SimplicialComplex::fromFacets(k + 1, facets), opts.field);
      ++res.instances;
      for (int i = -1; i <= static_cast<int>(k); ++i)
        if (h[i] != (i == static_cast<int>(k) - 1 ? 1u : 0u)) {
          res.passed = false;
          res.counterexample = "k=" + std::to_string(k);
        }
    }
    out.push_back(res);
  }
  {
    CheckResult euler{"homology", "reduced Euler relation", true, 0, "", ""};
    CheckResult perm{"homology", "invariance under vertex permutations", true, 0, "", ""};
    CheckResult reisner{"homology", "Reisner criterion matches depth of the Stanley-Reisner ring", true, 0, "", ""};
    Rng rng(opts.corpus.seed);
    for (int t = 0; t < 200; ++t) {
      const std::size_t ground = static_cast<std::size_t>(rng.between(1, 6));
      const auto c = randomComplex(rng, ground);
      const auto h = reducedHomologyDims(c, opts.field);
      long long chi = 0;
      const auto f = c.fVector();
      for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 1 ? 1 : -1) * static_cast<long long>(f[k]);
      // sum_i (-1)^i f_i - 1 with i = k - 1 starting at the empty face
      ++euler.instances;
      if (h.eulerCharacteristic() != chi && euler.passed) {
        euler.passed = false;
        euler.counterexample = c.toString();
      }
      std::vector<std::size_t> p(ground);
      std::iota(p.begin(), p.end(), 0);
      for (std::size_t k = ground; k > 1; --k) std::swap(p[k - 1], p[rng.below(k)]);
      ++perm.instances;
      if (reducedHomologyDims(c.permuted(p), opts.field) != h && perm.passed) {
        perm.passed = false;
        perm.counterexample = c.toString();
      }
      if (!c.isVoid() && ground <= 5) {
        const auto ideal = stanleyReisnerIdeal(c);
        ++reisner.instances;
        if (isCohenMacaulayComplex(c, opts.field) != isCM(ideal, opts.field) && reisner.passed) {
          reisner.passed = false;
          reisner.counterexample = c.toString();
        }
      }
    }
    out.push_back(euler);
    out.push_back(perm);
    out.push_back(reisner);
  }
  return out;
}

CheckResult checkDepthAgreement(const std::vector<MonomialIdeal>& ideals, int nMax, const CheckOptions& opts) {
  auto outcomes = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    const auto np = computeNewtonPolyhedron(ideal);
    std::vector<std::pair<std::string, MonomialIdeal>> targets{{"I", ideal}};
    for (int n = 1; n <= nMax; ++n)
      targets.emplace_back("closure(I^" + std::to_string(n) + ")", closurePower(ideal, np, n, opts.limits));
    for (const auto& [label, j] : targets) {
      ++o.instances;
      const auto t = depthTakayama(j, opts.field, std::nullopt, false);
      const auto b = depthBetti(j, opts.field);
      if (t.depth != b.depth) {
        o.failure = ideal.toString() + " " + label + ": takayama " + std::to_string(t.depth) + " vs betti " +
                    std::to_string(b.depth);
        return;
      }
      if (b.depth > heightDim(j).dim) {
        o.failure = ideal.toString() + " " + label + ": depth exceeds dimension";
        return;
      }
    }
  });
  auto res = aggregate("depth", "Takayama depth equals Betti depth", outcomes);
  res.detail = std::to_string(ideals.size()) + " ideals, I and closure powers n <= " + std::to_string(nMax);
  return res;
}

std::vector<CheckResult> checkDegreeComplexes(const std::vector<MonomialIdeal>& ideals, int nMax,
                                              const CheckOptions& opts) {
  auto lemma = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    const auto np = computeNewtonPolyhedron(ideal);
    for (int n = 1; n <= nMax; ++n) {
      const auto j = closurePower(ideal, np, n, opts.limits);
      const auto hi = uniformBox(ideal.rank(), n * ideal.maxSingleExponent());
      ExponentVector alpha(ideal.rank());
      do {
        ++o.instances;
        if (degreeComplexClosurePower(np, n, alpha) != degreeComplex(j, alpha)) {
          o.failure = ideal.toString() + " n=" + std::to_string(n) + " alpha=" + alpha.toString();
          return;
        }
      } while (nextInBox(alpha, hi));
    }
  });
  auto scaling = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    const auto np = computeNewtonPolyhedron(ideal);
    const auto j1 = closurePower(ideal, np, 1, opts.limits);
    for (int n = 2; n <= nMax; ++n) {
      const auto jn = closurePower(ideal, np, n, opts.limits);
      const auto hi = uniformBox(ideal.rank(), ideal.maxSingleExponent());
      ExponentVector alpha(ideal.rank());
      do {
        ++o.instances;
        if (degreeComplex(j1, alpha) != degreeComplex(jn, n * alpha)) {
          o.failure = ideal.toString() + " n=" + std::to_string(n) + " alpha=" + alpha.toString();
          return;
        }
      } while (nextInBox(alpha, hi));
    }
  });
  auto a = aggregate("depth", "degree complexes of closure powers read off facets", lemma);
  auto b = aggregate("depth", "degree complexes scale: D_alpha(closure I) = D_{n alpha}(closure I^n)", scaling);
  a.detail = b.detail = std::to_string(ideals.size()) + " ideals, n <= " + std::to_string(nMax);
  return {a, b};
}

std::vector<CheckResult> checkScans(const std::vector<MonomialIdeal>& ideals, int nMax, const CheckOptions& opts) {
  struct Scan {
    std::vector<std::size_t> depths;
    std::vector<AssRow> ass;
    std::size_t dim = 0;
  };
  auto scans = parallelMap<Scan>(ideals.size(), opts.jobs, [&](std::size_t k) {
    Scan s;
    const auto& ideal = ideals[k];
    const auto np = computeNewtonPolyhedron(ideal);
    s.dim = heightDim(ideal).dim;
    for (int n = 1; n <= nMax; ++n) {
      const auto j = closurePower(ideal, np, n, opts.limits);
      s.depths.push_back(depthBetti(j, opts.field).depth);
      s.ass.push_back({n, associatedPrimes(j)});
    }
    return s;
  });
  CheckResult quasi{"stability", "depth(m) >= depth(mn) for mn <= " + std::to_string(nMax), true, 0, "", ""};
  CheckResult mono{"stability", "Ass nondecreasing in n up to " + std::to_string(nMax), true, 0, "", ""};
  CheckResult range{"depth", "0 <= depth <= dim along scans", true, 0, "", ""};
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const auto& s = scans[k];
    ++quasi.instances;
    ++mono.instances;
    if (!checkQuasiDecreasing(s.depths) && quasi.passed) {
      quasi.passed = false;
      quasi.counterexample = ideals[k].toString();
    }
    if (!checkAssMonotone(s.ass) && mono.passed) {
      mono.passed = false;
      mono.counterexample = ideals[k].toString();
    }
    for (auto d : s.depths) {
      ++range.instances;
      if (d > s.dim && range.passed) {
        range.passed = false;
        range.counterexample = ideals[k].toString();
      }
    }
  }
  quasi.detail = mono.detail = range.detail = std::to_string(ideals.size()) + " ideals";
  return {quasi, mono, range};
}

std::vector<CheckResult> checkStructuralIdentities(const std::vector<MonomialIdeal>& ideals, std::size_t minInstances,
                                                   const CheckOptions& opts) {
  auto restriction = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    const std::size_t r = ideal.rank();
    const std::uint32_t all = VarSet::full(r).bits();
    for (std::uint32_t f = 1; f < all; ++f)
      for (int n = 1; n <= 3; ++n) {
        ++o.instances;
        if (!checkRestrictionCommutes(ideal, VarSet(f), n, opts.limits)) {
          o.failure = ideal.toString() + " F=" + std::to_string(f) + " n=" + std::to_string(n);
          return;
        }
      }
  });
  auto extension = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
      ++o.instances;
      if (!checkExtensionFormula(ideal, n, opts.limits)) {
        o.failure = ideal.toString() + " n=" + std::to_string(n);
        return;
      }
    }
  });
  // The decomposition formula needs unmixed I and closure(I^n); square-free
  // ideals supply many such cases alongside the random corpus.
  std::vector<MonomialIdeal> pool = ideals;
  for (std::size_t r = 2; r <= std::min<std::size_t>(opts.exhaustiveRank, 4); ++r)
    for (auto& sq : allSquarefreeIdeals(r)) pool.push_back(std::move(sq));
  auto primdec = overCorpus(pool, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
      const auto c = checkPrimDecClosure(ideal, n, opts.limits);
      if (c.outcome == CheckOutcome::kNotApplicable) {
        ++o.extra;
        continue;
      }
      ++o.instances;
      if (c.outcome == CheckOutcome::kViolated) {
        o.failure = ideal.toString() + " n=" + std::to_string(n) + ": " + c.detail;
        return;
      }
    }
  });
  std::vector<CheckResult> out{aggregate("stability", "restriction commutes with closure powers", restriction),
                               aggregate("stability", "closure of (I, y)^n splits along powers of y", extension),
                               aggregate("cm", "closure of powers of an unmixed decomposition", primdec)};
  std::size_t skipped = 0;
  for (const auto& o : primdec) skipped += o.extra;
  out[2].detail = std::to_string(skipped) + " cases without the unmixedness hypotheses skipped";
  for (auto& r : out) {
    if (r.passed && r.instances < minInstances) {
      r.passed = false;
      r.counterexample = "only " + std::to_string(r.instances) + " instances, need " + std::to_string(minInstances);
    }
    r.detail = (r.detail.empty() ? "" : r.detail + "; ") + std::to_string(r.instances) + " verified instances";
  }
  return out;
}

CheckResult checkBoundMonotonicity() {
  CheckResult res{"stability", "n0 and n1 nondecreasing in d", true, 0, "", ""};
  for (std::size_t r = 1; r <= 7; ++r)
    for (long long d = 1; d < 9; ++d) {
      ++res.instances;
      if (n1Bound(r, d) > n1Bound(r, d + 1) || n0Bound(r, d) > n0Bound(r, d + 1)) {
        res.passed = false;
        res.counterexample = "r=l=" + std::to_string(r) + " d=" + std::to_string(d);
      }
    }
  return res;
}

namespace {

std::vector<MonomialIdeal> squarefreeSweep(const CheckOptions& opts) {
  std::vector<MonomialIdeal> pool;
  for (std::size_t r = 1; r <= opts.exhaustiveRank; ++r)
    for (auto& sq : allSquarefreeIdeals(r)) pool.push_back(std::move(sq));
  if (opts.sampleCount > 0 && opts.sampleRank > opts.exhaustiveRank)
    for (auto& sq : sampleSquarefreeIdeals(opts.sampleRank, opts.sampleCount, opts.sampleSeed)) pool.push_back(std::move(sq));
  return pool;
}

}  // namespace

CheckResult checkSquarefreeSweep(int nMax, const CheckOptions& opts) {
  const auto pool = squarefreeSweep(opts);
  auto outcomes = overCorpus(pool, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    ++o.instances;
    const bool ci = isCompleteIntersectionSquarefree(ideal);
    const bool equi = isEquimultiple(ideal, opts.limits);
    const auto np = computeNewtonPolyhedron(ideal);
    const auto dim = heightDim(ideal).dim;
    std::string verdicts;
    bool allCM = true, cm3 = false;
    for (int n = 1; n <= nMax; ++n) {
      const bool cm = depthBetti(closurePower(ideal, np, n, opts.limits), opts.field).depth == dim;
      allCM &= cm;
      if (n == 3) cm3 = cm;
      verdicts += cm ? 'C' : '-';
    }
    if (!(cm3 == ci && ci == equi && ci == allCM))
      o.failure = ideal.toString() + ": CI=" + (ci ? "yes" : "no") + " equimultiple=" + (equi ? "yes" : "no") +
                  " CM(n=1.." + std::to_string(nMax) + ")=" + verdicts;
  });
  auto res = aggregate("cm", "square-free: CM(closure I^3) iff CI iff equimultiple iff CM(closure I^n), n <= " + std::to_string(nMax), outcomes);
  res.detail = "all square-free ideals on r <= " + std::to_string(opts.exhaustiveRank) + " variables" +
               (opts.sampleCount > 0 && opts.sampleRank > opts.exhaustiveRank
                    ? " plus " + std::to_string(opts.sampleCount) + " sampled at r = " + std::to_string(opts.sampleRank)
                    : std::string());
  return res;
}

std::vector<CheckResult> checkLinkAndShapes(const CheckOptions& opts) {
  std::vector<MonomialIdeal> pool;
  for (std::size_t r = 1; r <= opts.exhaustiveRank; ++r)
    for (auto& sq : allSquarefreeIdeals(r)) pool.push_back(std::move(sq));
  auto links = overCorpus(pool, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
      const auto c = checkLinkCM(ideal, n, opts.field, opts.limits);
      if (c.outcome == CheckOutcome::kNotApplicable) continue;
      ++o.instances;
      if (c.outcome == CheckOutcome::kViolated) {
        o.failure = ideal.toString() + " n=" + std::to_string(n) + ": " + c.detail;
        return;
      }
    }
  });
  auto shapes = overCorpus(pool, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    const auto delta = stanleyReisnerComplex(ideal);
    const int d = delta.dim();
    if (d != 0 && d != 1) return;
    for (int n = (d == 0 ? 2 : 3); n <= 4; ++n) {
      ++o.instances;
      const auto v = lowDimClassification(delta, n, opts.field, opts.limits);
      if (!v.consistent) {
        o.failure = ideal.toString() + " n=" + std::to_string(n) + ": CM with shape " + v.shape;
        return;
      }
    }
  });
  auto a = aggregate("cm", "links of CM closure powers stay CM", links);
  auto b = aggregate("cm", "dim 0 and 1 complexes with CM closure powers have the listed shapes", shapes);
  a.detail = b.detail = "square-free ideals on r <= " + std::to_string(opts.exhaustiveRank) + " variables";
  return {a, b};
}

CheckResult checkEquimultipleCoherence(const std::vector<MonomialIdeal>& ideals, int nWindow, const CheckOptions& opts) {
  auto outcomes = overCorpus(ideals, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    ++o.instances;
    const auto cls = classify(ideal, opts.field, nWindow, opts.limits);  // throws on a contradiction
    if (cls.checks.front().outcome == CheckOutcome::kUnresolved) ++o.extra;
  });
  auto res = aggregate("cm", "equimultiple implies CM for every scanned n", outcomes);
  std::size_t unresolved = 0;
  for (const auto& o : outcomes) unresolved += o.extra;
  res.detail = std::to_string(ideals.size()) + " ideals, window " + std::to_string(nWindow) + "; " +
               std::to_string(unresolved) + " non-equimultiple ideals stay CM inside the window";
  return res;
}

CheckResult checkSymbolicPowers(const CheckOptions& opts) {
  std::vector<MonomialIdeal> pool;
  for (std::size_t r = 1; r <= std::min<std::size_t>(opts.exhaustiveRank, 4); ++r)
    for (auto& sq : allSquarefreeIdeals(r)) pool.push_back(std::move(sq));
  auto outcomes = overCorpus(pool, opts, [&](const MonomialIdeal& ideal, Outcome& o) {
    const bool ci = isCompleteIntersectionSquarefree(ideal);
    for (int n = 1; n <= 3; ++n) {
      ++o.instances;
      const auto sym = symbolicPowerSquarefree(ideal, n);
      const auto pw = power(ideal, n);
      if (!sym.contains(pw) || (ci && sym != pw)) {
        o.failure = ideal.toString() + " n=" + std::to_string(n);
        return;
      }
    }
  });
  auto res = aggregate("cm", "symbolic powers contain powers, equal for complete intersections", outcomes);
  res.detail = "square-free ideals on r <= " + std::to_string(std::min<std::size_t>(opts.exhaustiveRank, 4)) + " variables";
  return res;
}

std::vector<CheckResult> runSuite(const std::string& suite, const CheckOptions& opts) {
  static const std::vector<std::string> known{"newton", "homology", "depth", "stability", "cm", "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end()) throw ArgumentError("unknown suite '" + suite + "'");
  const bool all = suite == "all";
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  const auto corpus = randomIdeals(opts.corpus);
  if (all || suite == "newton") {
    out.push_back(checkOracleEquivalence(corpus, 3, opts));
    out.push_back(checkFacetInvariants(corpus, opts));
    out.push_back(checkClosureContainments(corpus, 4, opts));
    append(checkCoreInvariants(corpus, opts));
  }
  if (all || suite == "homology") append(checkHomologyInvariants(opts));
  if (all || suite == "depth") {
    out.push_back(checkDepthAgreement(corpus, 3, opts));
    append(checkDegreeComplexes(corpus, 3, opts));
  }
  if (all || suite == "stability") {
    append(checkScans(corpus, 6, opts));
    append(checkStructuralIdentities(corpus, 30, opts));
    out.push_back(checkBoundMonotonicity());
  }
  if (all || suite == "cm") {
    out.push_back(checkExampleFamily(3, opts));
    out.push_back(checkExampleFamily(4, opts));
    out.push_back(checkSquarefreeSweep(4, opts));
    append(checkLinkAndShapes(opts));
    out.push_back(checkEquimultipleCoherence(corpus, 3, opts));
    out.push_back(checkSymbolicPowers(opts));
  }
  return out;
}

}  // namespace closurelab
