#include "clb/auso/kernels.hpp"

#include <stdexcept>

#include "kernels_impl.hpp"

namespace clb::auso::kernels {

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(CLB_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa best = isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  return best;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

namespace {
void require(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("kernel ISA not available: " + std::string(isa_name(isa)));
}
}  // namespace

void accumulate_face_sinks(std::span<const std::uint32_t> outmap, std::uint32_t free, std::span<std::uint32_t> counts,
                           Isa isa) {
  if (counts.size() < outmap.size()) throw std::invalid_argument("counts smaller than the vertex set");
  require(isa);
#ifdef CLB_HAVE_AVX2
  if (isa == Isa::Avx2) return detail::face_sinks_avx2(outmap, free, counts);
#endif
  detail::face_sinks_scalar(outmap, free, counts);
}

void accumulate_face_sinks(std::span<const std::uint32_t> outmap, std::uint32_t free, std::span<std::uint32_t> counts) {
  accumulate_face_sinks(outmap, free, counts, best_isa());
}

std::uint64_t uso_pair_violations(std::span<const std::uint32_t> outmap, Isa isa) {
  require(isa);
#ifdef CLB_HAVE_AVX2
  if (isa == Isa::Avx2) return detail::pair_violations_avx2(outmap);
#endif
  return detail::pair_violations_scalar(outmap);
}

std::uint64_t uso_pair_violations(std::span<const std::uint32_t> outmap) {
  return uso_pair_violations(outmap, best_isa());
}

}  // namespace clb::auso::kernels
