#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and
// optional AVX2 / NEON versions; the variant is chosen once at runtime from
// the CPU features (override with CLOSURELAB_ISA=scalar|avx2|neon). All
// variants must produce bit-identical output, which tests/test_kernels.cpp
// checks on random inputs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "closurelab/exponent.hpp"

namespace closurelab::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isaName(Isa isa);

inline constexpr std::size_t kLanes = 8;

/// Generators in structure-of-arrays layout: coordinate i of generator k
/// lives at column(i)[k]. Columns are padded to a multiple of kLanes with
/// INT32_MAX, so padding lanes never divide anything.
class GeneratorBlock {
 public:
  GeneratorBlock() = default;
  GeneratorBlock(std::size_t rank, std::span<const ExponentVector> gens);

  std::size_t rank() const { return rank_; }
  std::size_t count() const { return count_; }
  std::size_t stride() const { return stride_; }
  const std::int32_t* column(std::size_t i) const { return data_.data() + i * stride_; }

 private:
  std::size_t rank_ = 0;
  std::size_t count_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::int32_t> data_;
};

/// Integer facet normals, row-major (count x rank).
class FacetBlock {
 public:
  FacetBlock() = default;
  FacetBlock(std::size_t rank, std::vector<std::int32_t> rowMajor);

  std::size_t rank() const { return rank_; }
  std::size_t count() const { return count_; }
  const std::int32_t* row(std::size_t j) const { return coeffs_.data() + j * rank_; }

  /// True when every dot product with a point whose coordinates lie in
  /// [0, maxCoord] fits in int32.
  bool fitsInt32(std::int64_t maxCoord) const;

 private:
  std::size_t rank_ = 0;
  std::size_t count_ = 0;
  std::vector<std::int32_t> coeffs_;
};

/// Points in structure-of-arrays layout: coordinate i of point k at data[i * stride + k].
struct PointBatch {
  std::size_t rank = 0;
  std::size_t count = 0;
  std::size_t stride = 0;
  const std::int32_t* data = nullptr;
};

struct KernelTable {
  Isa isa;
  /// greater[k] gets bit i set iff gen_k[i] > alpha[i]; equal[k] iff gen_k[i] == alpha[i].
  void (*compareMasks)(const GeneratorBlock& gens, const std::int32_t* alpha, std::uint32_t* greater,
                       std::uint32_t* equal);
  /// Index of the first generator dividing alpha, or -1.
  std::ptrdiff_t (*firstDivisor)(const GeneratorBlock& gens, const std::int32_t* alpha);
  /// out[k] = 1 iff <a_j, p_k> >= thresholds[j] for every facet j.
  void (*insideMask)(const FacetBlock& facets, const std::int32_t* thresholds, const PointBatch& points,
                     std::uint8_t* out);
};

const KernelTable& active();

/// Table for a specific ISA, or nullptr when it is not compiled in or the
/// CPU lacks the feature.
const KernelTable* table(Isa isa);

std::vector<Isa> availableIsas();

namespace detail {
extern const KernelTable kScalarTable;
#if defined(CLOSURELAB_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(CLOSURELAB_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif
}  // namespace detail

}  // namespace closurelab::kernels
