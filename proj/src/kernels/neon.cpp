#include <arm_neon.h>

#include "closurelab/kernels.hpp"

namespace closurelab::kernels {
namespace {

// Two 128-bit registers per kLanes group.

void compareMasksNeon(const GeneratorBlock& gens, const std::int32_t* alpha, std::uint32_t* greater,
                      std::uint32_t* equal) {
  for (std::size_t k = 0; k < gens.stride(); k += 4) {
    uint32x4_t gt = vdupq_n_u32(0);
    uint32x4_t eq = vdupq_n_u32(0);
    for (std::size_t i = 0; i < gens.rank(); ++i) {
      const int32x4_t g = vld1q_s32(gens.column(i) + k);
      const int32x4_t a = vdupq_n_s32(alpha[i]);
      const uint32x4_t bit = vdupq_n_u32(1u << i);
      gt = vorrq_u32(gt, vandq_u32(vcgtq_s32(g, a), bit));
      eq = vorrq_u32(eq, vandq_u32(vceqq_s32(g, a), bit));
    }
    std::uint32_t gtl[4], eql[4];
    vst1q_u32(gtl, gt);
    vst1q_u32(eql, eq);
    for (std::size_t l = 0; l < 4 && k + l < gens.count(); ++l) {
      greater[k + l] = gtl[l];
      equal[k + l] = eql[l];
    }
  }
}

std::ptrdiff_t firstDivisorNeon(const GeneratorBlock& gens, const std::int32_t* alpha) {
  for (std::size_t k = 0; k < gens.stride(); k += 4) {
    uint32x4_t fail = vdupq_n_u32(0);
    for (std::size_t i = 0; i < gens.rank(); ++i)
      fail = vorrq_u32(fail, vcgtq_s32(vld1q_s32(gens.column(i) + k), vdupq_n_s32(alpha[i])));
    std::uint32_t lanes[4];
    vst1q_u32(lanes, fail);
    for (std::size_t l = 0; l < 4; ++l)
      if (lanes[l] == 0) return static_cast<std::ptrdiff_t>(k + l);
  }
  return -1;
}

void insideMaskNeon(const FacetBlock& facets, const std::int32_t* thresholds, const PointBatch& points,
                    std::uint8_t* out) {
  std::size_t k = 0;
  for (; k + 4 <= points.count; k += 4) {
    uint32x4_t fail = vdupq_n_u32(0);
    for (std::size_t j = 0; j < facets.count(); ++j) {
      int32x4_t acc = vdupq_n_s32(0);
      const std::int32_t* a = facets.row(j);
      for (std::size_t i = 0; i < facets.rank(); ++i)
        acc = vmlaq_s32(acc, vdupq_n_s32(a[i]), vld1q_s32(points.data + i * points.stride + k));
      fail = vorrq_u32(fail, vcgtq_s32(vdupq_n_s32(thresholds[j]), acc));
    }
    std::uint32_t lanes[4];
    vst1q_u32(lanes, fail);
    for (std::size_t l = 0; l < 4; ++l) out[k + l] = lanes[l] == 0 ? 1 : 0;
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
const KernelTable kNeonTable{Isa::neon, &compareMasksNeon, &firstDivisorNeon, &insideMaskNeon};
}

}  // namespace closurelab::kernels
