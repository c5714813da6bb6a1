#include <cstdlib>
#include <limits>
#include <string>

#include "closurelab/errors.hpp"
#include "closurelab/kernels.hpp"

namespace closurelab::kernels {

std::string_view isaName(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

GeneratorBlock::GeneratorBlock(std::size_t rank, std::span<const ExponentVector> gens)
    : rank_(rank), count_(gens.size()), stride_((gens.size() + kLanes - 1) / kLanes * kLanes) {
  data_.assign(rank_ * stride_, std::numeric_limits<std::int32_t>::max());
  for (std::size_t k = 0; k < count_; ++k) {
    if (gens[k].rank() != rank_) throw DimensionMismatch("generator rank differs from block rank");
    for (std::size_t i = 0; i < rank_; ++i) data_[i * stride_ + k] = gens[k][i];
  }
}

FacetBlock::FacetBlock(std::size_t rank, std::vector<std::int32_t> rowMajor)
    : rank_(rank), count_(rank == 0 ? 0 : rowMajor.size() / rank), coeffs_(std::move(rowMajor)) {
  if (rank_ != 0 && coeffs_.size() % rank_ != 0) throw DimensionMismatch("facet coefficient count not divisible by rank");
}

bool FacetBlock::fitsInt32(std::int64_t maxCoord) const {
  for (std::size_t j = 0; j < count_; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank_; ++i) s += std::abs(static_cast<std::int64_t>(row(j)[i]));
    if (s > 0 && maxCoord > std::numeric_limits<std::int32_t>::max() / s) return false;
  }
  return true;
}

namespace {

bool cpuHas(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(CLOSURELAB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(CLOSURELAB_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select() {
  if (const char* env = std::getenv("CLOSURELAB_ISA")) {
    std::string want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
      if (want == isaName(isa))
        if (const KernelTable* t = table(isa)) return *t;
  }
  for (Isa isa : {Isa::avx2, Isa::neon})
    if (const KernelTable* t = table(isa)) return *t;
  return detail::kScalarTable;
}

}  // namespace

const KernelTable* table(Isa isa) {
  if (!cpuHas(isa)) return nullptr;
  switch (isa) {
    case Isa::scalar:
      return &detail::kScalarTable;
    case Isa::avx2:
#if defined(CLOSURELAB_HAVE_AVX2)
      return &detail::kAvx2Table;
#else
      return nullptr;
#endif
    case Isa::neon:
#if defined(CLOSURELAB_HAVE_NEON)
      return &detail::kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

std::vector<Isa> availableIsas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
    if (table(isa) != nullptr) out.push_back(isa);
  return out;
}

}  // namespace closurelab::kernels
