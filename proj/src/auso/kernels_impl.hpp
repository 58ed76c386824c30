#pragma once

#include <cstdint>
#include <span>

namespace clb::auso::kernels::detail {

void face_sinks_scalar(std::span<const std::uint32_t> outmap, std::uint32_t free, std::span<std::uint32_t> counts);
std::uint64_t pair_violations_scalar(std::span<const std::uint32_t> outmap);

#ifdef CLB_HAVE_AVX2
void face_sinks_avx2(std::span<const std::uint32_t> outmap, std::uint32_t free, std::span<std::uint32_t> counts);
std::uint64_t pair_violations_avx2(std::span<const std::uint32_t> outmap);
#endif

}  // namespace clb::auso::kernels::detail
