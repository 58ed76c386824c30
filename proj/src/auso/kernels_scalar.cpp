#include "kernels_impl.hpp"

namespace clb::auso::kernels::detail {

void face_sinks_scalar(std::span<const std::uint32_t> outmap, std::uint32_t free, std::span<std::uint32_t> counts) {
  for (std::uint32_t v = 0; v < outmap.size(); ++v)
    if ((outmap[v] & free) == 0) ++counts[v & ~free];
}

std::uint64_t pair_violations_scalar(std::span<const std::uint32_t> outmap) {
  std::uint64_t bad = 0;
  const auto size = static_cast<std::uint32_t>(outmap.size());
  for (std::uint32_t u = 0; u < size; ++u) {
    const std::uint32_t su = outmap[u];
    for (std::uint32_t v = u + 1; v < size; ++v) bad += ((u ^ v) & (su ^ outmap[v])) == 0;
  }
  return bad;
}

}  // namespace clb::auso::kernels::detail
