#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "closurelab/errors.hpp"
#include "closurelab/exact.hpp"
#include "closurelab/simplicial_complex.hpp"

namespace closurelab {

bool ReducedHomology::isZero() const {
  return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
}

long long ReducedHomology::eulerCharacteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    const long long d = static_cast<long long>(dims_[k]);
    chi += (k % 2 == 1) ? d : -d;  // k = i + 1, sign (-1)^i
  }
  return chi;
}

namespace {

using CacheKey = std::tuple<std::size_t, int, std::vector<std::uint32_t>, std::uint32_t>;

ReducedHomology compute(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.isVoid()) return ReducedHomology{};
  const int top = complex.dim();
  std::vector<std::size_t> out(static_cast<std::size_t>(top + 2), 0);
  if (complex.isEmptyComplex()) {
    out[0] = 1;
    return ReducedHomology(std::move(out));
  }
  // A cone has vanishing reduced homology.
  VarSet common = VarSet::full(complex.ground());
  for (auto f : complex.facets()) common = common & f;
  if (!common.empty()) return ReducedHomology(std::move(out));

  std::vector<std::vector<VarSet>> byDim(static_cast<std::size_t>(top + 2));
  for (auto f : complex.faces()) byDim[f.size()].push_back(f);

  // rank of the boundary map from (k)-faces to (k-1)-faces, indexed by k + 1
  std::vector<std::size_t> ranks(byDim.size() + 1, 0);
  for (std::size_t k = 1; k < byDim.size(); ++k) {
    const auto& lower = byDim[k - 1];
    const auto& upper = byDim[k];
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (std::size_t j = 0; j < lower.size(); ++j) index.emplace(lower[j].bits(), j);
    exact::IntMatrix m(lower.size(), upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
      auto verts = upper[c].indices();
      for (std::size_t j = 0; j < verts.size(); ++j) {
        VarSet face = upper[c];
        face.erase(verts[j]);
        m(index.at(face.bits()), c) = (j % 2 == 0) ? 1 : -1;
      }
    }
    ranks[k] = field.characteristic == 0 ? exact::rank(m) : exact::rankModP(m, field.characteristic);
  }
  for (std::size_t k = 0; k < byDim.size(); ++k) out[k] = byDim[k].size() - ranks[k] - ranks[k + 1];
  return ReducedHomology(std::move(out));
}

}  // namespace

ReducedHomology reducedHomologyDims(const SimplicialComplex& complex, FieldSpec field) {
  thread_local std::map<CacheKey, ReducedHomology> cache;
  std::vector<std::uint32_t> bits;
  for (auto f : complex.facets()) bits.push_back(f.bits());
  CacheKey key{complex.ground(), static_cast<int>(complex.state()), std::move(bits), field.characteristic};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto result = compute(complex, field);
  if (cache.size() > 200'000) cache.clear();
  cache.emplace(std::move(key), result);
  return result;
}

bool isCohenMacaulayComplex(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.isVoid()) throw ArgumentError("Cohen-Macaulayness of the void complex is undefined");
  for (auto face : complex.faces()) {
    const auto lk = complex.link(face);
    const auto h = reducedHomologyDims(lk, field);
    for (int i = -1; i < lk.dim(); ++i)
      if (h[i] != 0) return false;
  }
  return true;
}

}  // namespace closurelab
