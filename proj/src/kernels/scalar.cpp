#include "closurelab/kernels.hpp"

namespace closurelab::kernels {
namespace {

void compareMasksScalar(const GeneratorBlock& gens, const std::int32_t* alpha, std::uint32_t* greater,
                        std::uint32_t* equal) {
  for (std::size_t k = 0; k < gens.count(); ++k) {
    std::uint32_t gt = 0, eq = 0;
    for (std::size_t i = 0; i < gens.rank(); ++i) {
      const std::int32_t g = gens.column(i)[k];
      gt |= static_cast<std::uint32_t>(g > alpha[i]) << i;
      eq |= static_cast<std::uint32_t>(g == alpha[i]) << i;
    }
    greater[k] = gt;
    equal[k] = eq;
  }
}

std::ptrdiff_t firstDivisorScalar(const GeneratorBlock& gens, const std::int32_t* alpha) {
  for (std::size_t k = 0; k < gens.count(); ++k) {
    bool divides = true;
    for (std::size_t i = 0; i < gens.rank() && divides; ++i) divides = gens.column(i)[k] <= alpha[i];
    if (divides) return static_cast<std::ptrdiff_t>(k);
  }
  return -1;
}

void insideMaskScalar(const FacetBlock& facets, const std::int32_t* thresholds, const PointBatch& points,
                      std::uint8_t* out) {
  for (std::size_t k = 0; k < points.count; ++k) {
    std::uint8_t inside = 1;
    for (std::size_t j = 0; j < facets.count() && inside; ++j) {
      std::int32_t acc = 0;
      for (std::size_t i = 0; i < facets.rank(); ++i) acc += facets.row(j)[i] * points.data[i * points.stride + k];
      inside = acc >= thresholds[j];
    }
    out[k] = inside;
  }
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{Isa::scalar, &compareMasksScalar, &firstDivisorScalar, &insideMaskScalar};
}

}  // namespace closurelab::kernels
