#include "closurelab/newton.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

#include "closurelab/errors.hpp"
#include "closurelab/exact.hpp"
#include "closurelab/kernels.hpp"

namespace closurelab {
namespace {

void forEachCombination(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::int64_t toInt64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw ResourceError("facet coefficient exceeds 64-bit range", 64, 63);
  return v.get_si();
}

std::optional<Halfspace> candidateFacet(std::size_t rank, const std::vector<std::size_t>& coords,
                                        const std::vector<const ExponentVector*>& points) {
  const std::size_t s = coords.size();
  // Cofactors of the first row of the (s+1)x(s+1) determinant.
  std::vector<mpz_class> cof(s + 1);
  for (std::size_t c = 0; c <= s; ++c) {
    exact::IntMatrix minor(s, s);
    for (std::size_t k = 0; k < s; ++k) {
      std::size_t col = 0;
      for (std::size_t cc = 0; cc <= s; ++cc) {
        if (cc == c) continue;
        minor(k, col++) = cc < s ? (*points[k])[coords[cc]] : 1;
      }
    }
    cof[c] = exact::determinant(minor);
    if (c % 2 == 1) cof[c] = -cof[c];
  }
  bool anyPos = false, anyNeg = false;
  for (std::size_t c = 0; c < s; ++c) {
    anyPos |= cof[c] > 0;
    anyNeg |= cof[c] < 0;
  }
  if (anyPos == anyNeg) return std::nullopt;  // zero normal or mixed signs
  // <a', x> + cof[s] = 0  <=>  <a', x> = -cof[s]
  mpz_class rhs = -cof[s];
  if (anyNeg) {
    for (std::size_t c = 0; c < s; ++c) cof[c] = -cof[c];
    rhs = -rhs;
  }
  Halfspace h;
  h.a.assign(rank, 0);
  for (std::size_t c = 0; c < s; ++c) {
    if (cof[c] == 0) return std::nullopt;  // support smaller than the chosen coordinates
    h.a[coords[c]] = toInt64(cof[c]);
  }
  h.b = toInt64(rhs);
  std::int64_t g = std::abs(h.b);
  for (auto v : h.a) g = std::gcd(g, v);
  for (auto& v : h.a) v /= g;
  h.b /= g;
  return h;
}

bool tight(const Halfspace& h, const ExponentVector& v) { return h.evaluate(v) == static_cast<__int128>(h.b); }

}  // namespace

std::size_t Halfspace::suppSize() const {
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](std::int64_t v) { return v != 0; }));
}

VarSet Halfspace::support() const {
  VarSet s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s.insert(i);
  return s;
}

__int128 Halfspace::evaluate(const ExponentVector& alpha) const {
  if (alpha.rank() != a.size()) throw DimensionMismatch("point rank differs from halfspace rank");
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * alpha[i];
  return s;
}

NewtonPolyhedron computeNewtonPolyhedron(const MonomialIdeal& ideal) {
  if (ideal.isZero()) throw ArgumentError("the Newton polyhedron of the zero ideal is empty");
  const std::size_t r = ideal.rank();
  const auto gens = ideal.generators();
  std::set<Halfspace> found;
  for (std::size_t s = 1; s <= r; ++s) {
    forEachCombination(r, s, [&](const std::vector<std::size_t>& coords) {
      forEachCombination(gens.size(), s, [&](const std::vector<std::size_t>& pick) {
        std::vector<const ExponentVector*> pts;
        for (auto k : pick) pts.push_back(&gens[k]);
        auto h = candidateFacet(r, coords, pts);
        if (!h) return;
        const bool supporting = std::all_of(gens.begin(), gens.end(),
                                            [&](const ExponentVector& g) { return h->evaluate(g) >= h->b; });
        if (supporting) found.insert(*h);
      });
    });
  }
  NewtonPolyhedron np;
  np.rank = r;
  np.facets.assign(found.begin(), found.end());
  for (const auto& g : gens) {
    std::vector<const Halfspace*> active;
    for (const auto& f : np.facets)
      if (tight(f, g)) active.push_back(&f);
    exact::IntMatrix m(active.size(), r);
    for (std::size_t j = 0; j < active.size(); ++j)
      for (std::size_t i = 0; i < r; ++i) m(j, i) = active[j]->a[i];
    if (exact::rank(m) == r) np.vertices.push_back(g);
  }
  return np;
}

bool npMembership(const NewtonPolyhedron& np, const ExponentVector& alpha, long long n) {
  if (alpha.rank() != np.rank) throw DimensionMismatch("point rank differs from polyhedron rank");
  return std::all_of(np.facets.begin(), np.facets.end(), [&](const Halfspace& h) {
    return h.evaluate(alpha) >= static_cast<__int128>(n) * h.b;
  });
}

namespace {

// Determinant of a small integer matrix; int128 Bareiss when the Hadamard
// bound keeps every minor well inside range, GMP otherwise.
int signOfDet(const exact::IntMatrix& m, long double hadamardLog2) {
  if (hadamardLog2 < 120.0L) {
    const std::size_t n = m.rows();
    std::vector<__int128> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    __int128 prev = 1;
    bool neg = false;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
        neg = !neg;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j)
          a[i * n + j] = (a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j]) / prev;
        a[i * n + k] = 0;
      }
      prev = a[k * n + k];
    }
    int sign = prev > 0 ? 1 : -1;
    return neg ? -sign : sign;
  }
  return sgn(exact::determinant(m));
}

}  // namespace

bool membershipOracle(const MonomialIdeal& ideal, const ExponentVector& alpha, long long n) {
  if (alpha.rank() != ideal.rank()) throw DimensionMismatch("point rank differs from ideal rank");
  if (n < 1) throw ArgumentError("membership oracle needs n >= 1");
  const std::size_t r = ideal.rank(), m = ideal.numGenerators();
  if (m == 0) return false;
  const std::size_t rows = r + 1, cols = m + r;
  // Column c < m is (beta_c, 1); column m + i is (e_i, 0).
  auto entry = [&](std::size_t row, std::size_t col) -> std::int64_t {
    if (col < m) return row < r ? ideal.generators()[col][row] : 1;
    return row == col - m ? 1 : 0;
  };
  std::vector<std::int64_t> rhs(rows);
  for (std::size_t i = 0; i < r; ++i) rhs[i] = alpha[i];
  rhs[r] = n;

  long double rowLog = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    long double norm2 = 1;
    for (std::size_t c = 0; c < cols; ++c) norm2 += static_cast<long double>(entry(i, c)) * entry(i, c);
    norm2 += static_cast<long double>(rhs[i]) * rhs[i];
    rowLog += 0.5L * std::log2(norm2);
  }

  bool feasible = false;
  exact::IntMatrix basis(rows, rows);
  forEachCombination(cols, rows, [&](const std::vector<std::size_t>& pick) {
    if (feasible) return;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < rows; ++k) basis(i, k) = entry(i, pick[k]);
    const int d = signOfDet(basis, rowLog);
    if (d == 0) return;
    for (std::size_t k = 0; k < rows; ++k) {
      exact::IntMatrix replaced = basis;
      for (std::size_t i = 0; i < rows; ++i) replaced(i, k) = rhs[i];
      if (signOfDet(replaced, rowLog) * d < 0) return;
    }
    feasible = true;
  });
  return feasible;
}

MonomialIdeal closurePower(const MonomialIdeal& ideal, int n, const ScanLimits& limits) {
  if (n < 0) throw ArgumentError("closure power exponent must be nonnegative");
  if (n == 0 || ideal.isUnit()) return MonomialIdeal::unit(ideal.rank());
  if (ideal.isZero()) return ideal;
  return closurePower(ideal, computeNewtonPolyhedron(ideal), n, limits);
}

MonomialIdeal closurePower(const MonomialIdeal& ideal, const NewtonPolyhedron& np, int n, const ScanLimits& limits) {
  if (n < 0) throw ArgumentError("closure power exponent must be nonnegative");
  if (n == 0 || ideal.isUnit()) return MonomialIdeal::unit(ideal.rank());
  if (ideal.isZero()) return ideal;
  const std::size_t r = ideal.rank();
  const std::int64_t top = static_cast<std::int64_t>(n) * ideal.maxSingleExponent();
  const std::uint64_t side = static_cast<std::uint64_t>(top) + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / side) {
      total = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    total *= side;
  }
  if (total > limits.maxLatticePoints)
    throw ResourceError("closure power box [0," + std::to_string(top) + "]^" + std::to_string(r) + " too large", total,
                        limits.maxLatticePoints);

  std::vector<std::uint64_t> strides(r);
  for (std::size_t i = r; i-- > 0;) strides[i] = (i + 1 == r) ? 1 : strides[i + 1] * side;

  std::vector<std::uint8_t> inside(total, 0);
  auto decode = [&](std::uint64_t idx, std::size_t i) { return static_cast<std::int32_t>(idx / strides[i] % side); };

  std::vector<std::int32_t> rowMajor;
  std::vector<std::int32_t> thresholds;
  bool fits = true;
  for (const auto& f : np.facets) {
    const __int128 t = static_cast<__int128>(n) * f.b;
    fits &= t <= std::numeric_limits<std::int32_t>::max();
    for (auto v : f.a) {
      fits &= v <= std::numeric_limits<std::int32_t>::max();
      rowMajor.push_back(static_cast<std::int32_t>(v));
    }
    thresholds.push_back(static_cast<std::int32_t>(t));
  }
  kernels::FacetBlock block(r, std::move(rowMajor));
  fits = fits && block.fitsInt32(top);

  if (fits) {
    constexpr std::uint64_t kChunk = 4096;
    std::vector<std::int32_t> coords(r * kChunk);
    const auto& kt = kernels::active();
    for (std::uint64_t start = 0; start < total; start += kChunk) {
      const std::uint64_t count = std::min(kChunk, total - start);
      for (std::uint64_t k = 0; k < count; ++k)
        for (std::size_t i = 0; i < r; ++i) coords[i * kChunk + k] = decode(start + k, i);
      kernels::PointBatch batch{r, static_cast<std::size_t>(count), static_cast<std::size_t>(kChunk), coords.data()};
      kt.insideMask(block, thresholds.data(), batch, inside.data() + start);
    }
  } else {
    ExponentVector alpha(r);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      for (std::size_t i = 0; i < r; ++i) alpha[i] = decode(idx, i);
      inside[idx] = npMembership(np, alpha, n);
    }
  }

  std::vector<ExponentVector> minimal;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!inside[idx]) continue;
    bool isMinimal = true;
    ExponentVector alpha(r);
    for (std::size_t i = 0; i < r; ++i) {
      alpha[i] = decode(idx, i);
      if (alpha[i] > 0 && inside[idx - strides[i]]) isMinimal = false;
    }
    if (isMinimal) minimal.push_back(alpha);
  }
  std::sort(minimal.begin(), minimal.end());
  return fromMinimalSorted(r, std::move(minimal));
}

namespace {

class FacetSet {
 public:
  explicit FacetSet(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t j) { words_[j / 64] |= (1ull << (j % 64)); }
  bool test(std::size_t j) const { return (words_[j / 64] >> (j % 64)) & 1ull; }
  friend auto operator<=>(const FacetSet&, const FacetSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

std::size_t analyticSpread(const NewtonPolyhedron& np, const ScanLimits& limits) {
  const std::size_t q = np.facets.size(), r = np.rank;
  const std::size_t nv = np.vertices.size();
  // incidence[v][j]: vertex v lies on facet j
  std::vector<std::vector<bool>> incidence(nv, std::vector<bool>(q));
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t j = 0; j < q; ++j) incidence[v][j] = tight(np.facets[j], np.vertices[v]);

  struct Face {
    FacetSet facets;
    std::vector<std::size_t> verts;
    VarSet rays;
  };
  auto describe = [&](const std::vector<std::size_t>& want) {
    Face f{FacetSet(q), {}, VarSet::full(r)};
    for (std::size_t v = 0; v < nv; ++v)
      if (std::all_of(want.begin(), want.end(), [&](std::size_t j) { return incidence[v][j]; })) f.verts.push_back(v);
    for (auto j : want)
      for (std::size_t i = 0; i < r; ++i)
        if (np.facets[j].a[i] != 0) f.rays.erase(i);
    // close the facet set: every facet containing all vertices and rays of the face
    for (std::size_t j = 0; j < q; ++j) {
      bool contains = std::all_of(f.verts.begin(), f.verts.end(), [&](std::size_t v) { return incidence[v][j]; });
      for (auto i : f.rays.indices()) contains = contains && np.facets[j].a[i] == 0;
      if (contains) f.facets.set(j);
    }
    return f;
  };

  std::set<FacetSet> seen;
  std::vector<std::vector<std::size_t>> stack{{}};
  std::size_t best = 0;
  while (!stack.empty()) {
    auto want = std::move(stack.back());
    stack.pop_back();
    Face f = describe(want);
    if (f.verts.empty() || !seen.insert(f.facets).second) continue;
    if (seen.size() > limits.maxFaces) throw ResourceError("face enumeration of NP(I)", seen.size(), limits.maxFaces);
    if (f.rays.empty()) {
      std::vector<std::vector<std::int64_t>> pts;
      for (auto v : f.verts) pts.emplace_back(np.vertices[v].begin(), np.vertices[v].end());
      best = std::max(best, exact::affineRank(pts));
    }
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < q; ++j)
      if (f.facets.test(j)) members.push_back(j);
    for (std::size_t j = 0; j < q; ++j) {
      if (f.facets.test(j)) continue;
      auto next = members;
      next.push_back(j);
      stack.push_back(std::move(next));
    }
  }
  return best;
}

std::size_t analyticSpread(const MonomialIdeal& ideal, const ScanLimits& limits) {
  if (ideal.isZero()) return 0;
  return analyticSpread(computeNewtonPolyhedron(ideal), limits);
}

long long maxGenDegree(const MonomialIdeal& ideal) { return ideal.maxGenDegree(); }

std::size_t facetGeneratorRank(const NewtonPolyhedron& np, const MonomialIdeal& ideal, std::size_t facet) {
  std::vector<std::vector<std::int64_t>> pts;
  for (const auto& g : ideal.generators())
    if (tight(np.facets.at(facet), g)) pts.emplace_back(g.begin(), g.end());
  return exact::affineRank(pts);
}

bool coefficientBoundHolds(const Halfspace& h, long long maxDegree) {
  const std::size_t s = h.suppSize();
  mpz_class bound = static_cast<long>(s);
  for (std::size_t k = 1; k < s; ++k) bound *= static_cast<long>(maxDegree);
  return std::all_of(h.a.begin(), h.a.end(), [&](std::int64_t v) { return mpz_class(static_cast<long>(v)) <= bound; });
}

}  // namespace closurelab
