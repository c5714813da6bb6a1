#include <immintrin.h>

#include "closurelab/kernels.hpp"

namespace closurelab::kernels {
namespace {

void compareMasksAvx2(const GeneratorBlock& gens, const std::int32_t* alpha, std::uint32_t* greater,
                      std::uint32_t* equal) {
  const std::size_t full = gens.count() / kLanes * kLanes;
  for (std::size_t k = 0; k < gens.stride(); k += kLanes) {
    __m256i gt = _mm256_setzero_si256();
    __m256i eq = _mm256_setzero_si256();
    for (std::size_t i = 0; i < gens.rank(); ++i) {
      const __m256i g = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gens.column(i) + k));
      const __m256i a = _mm256_set1_epi32(alpha[i]);
      const __m256i bit = _mm256_set1_epi32(static_cast<int>(1u << i));
      gt = _mm256_or_si256(gt, _mm256_and_si256(_mm256_cmpgt_epi32(g, a), bit));
      eq = _mm256_or_si256(eq, _mm256_and_si256(_mm256_cmpeq_epi32(g, a), bit));
    }
    if (k < full) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(greater + k), gt);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(equal + k), eq);
    } else {
      alignas(32) std::uint32_t gtl[kLanes], eql[kLanes];
      _mm256_store_si256(reinterpret_cast<__m256i*>(gtl), gt);
      _mm256_store_si256(reinterpret_cast<__m256i*>(eql), eq);
      for (std::size_t l = 0; k + l < gens.count(); ++l) {
        greater[k + l] = gtl[l];
        equal[k + l] = eql[l];
      }
    }
  }
}

std::ptrdiff_t firstDivisorAvx2(const GeneratorBlock& gens, const std::int32_t* alpha) {
  for (std::size_t k = 0; k < gens.stride(); k += kLanes) {
    __m256i fail = _mm256_setzero_si256();
    for (std::size_t i = 0; i < gens.rank(); ++i) {
      const __m256i g = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gens.column(i) + k));
      fail = _mm256_or_si256(fail, _mm256_cmpgt_epi32(g, _mm256_set1_epi32(alpha[i])));
    }
    const unsigned ok = ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(fail))) & 0xffu;
    if (ok != 0) return static_cast<std::ptrdiff_t>(k + static_cast<std::size_t>(__builtin_ctz(ok)));
  }
  return -1;
}

void insideMaskAvx2(const FacetBlock& facets, const std::int32_t* thresholds, const PointBatch& points,
                    std::uint8_t* out) {
  std::size_t k = 0;
  for (; k + kLanes <= points.count; k += kLanes) {
    __m256i fail = _mm256_setzero_si256();
    for (std::size_t j = 0; j < facets.count(); ++j) {
      __m256i acc = _mm256_setzero_si256();
      const std::int32_t* a = facets.row(j);
      for (std::size_t i = 0; i < facets.rank(); ++i) {
        const __m256i p =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(points.data + i * points.stride + k));
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(_mm256_set1_epi32(a[i]), p));
      }
      fail = _mm256_or_si256(fail, _mm256_cmpgt_epi32(_mm256_set1_epi32(thresholds[j]), acc));
    }
    const unsigned bad = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(fail)));
    for (std::size_t l = 0; l < kLanes; ++l) out[k + l] = static_cast<std::uint8_t>(((bad >> l) & 1u) ^ 1u);
  }
  for (; k < points.count; ++k) {
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
const KernelTable kAvx2Table{Isa::avx2, &compareMasksAvx2, &firstDivisorAvx2, &insideMaskAvx2};
}

}  // namespace closurelab::kernels
