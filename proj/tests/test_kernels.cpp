#include <doctest.h>

#include <random>

#include "clb/auso/hypercube.hpp"
#include "clb/auso/kernels.hpp"

using namespace clb::auso;
using namespace clb::auso::kernels;

namespace {
std::vector<std::uint32_t> random_outmap(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> out(std::size_t{1} << dim);
  const std::uint32_t full = dim == 32 ? ~0u : ((1u << dim) - 1);
  for (auto& x : out) x = static_cast<std::uint32_t>(rng()) & full;
  return out;
}

void compare_face_sinks(std::span<const std::uint32_t> om, int dim, std::uint32_t free) {
  std::vector<std::uint32_t> a(om.size()), b(om.size());
  accumulate_face_sinks(om, free, a, Isa::Scalar);
  accumulate_face_sinks(om, free, b, Isa::Avx2);
  CHECK(a == b);
  (void)dim;
}
}  // namespace

TEST_CASE("isa names and dispatch") {
  CHECK(isa_available(Isa::Scalar));
  CHECK(isa_name(Isa::Scalar) == "scalar");
  CHECK(isa_name(Isa::Avx2) == "avx2");
  CHECK(isa_available(best_isa()));
}

TEST_CASE("scalar face-sink kernel on a tiny cube") {
  // 00 -> 01 -> 11, 00 -> 10 -> 11 : sink 11
  std::vector<std::uint32_t> om{3, 2, 1, 0};
  std::vector<std::uint32_t> counts(4);
  accumulate_face_sinks(om, 3, counts, Isa::Scalar);
  CHECK(counts[0] == 1);
  std::fill(counts.begin(), counts.end(), 0);
  accumulate_face_sinks(om, 1, counts, Isa::Scalar);
  CHECK(counts[0] == 1);
  CHECK(counts[2] == 1);
  CHECK(uso_pair_violations(om, Isa::Scalar) == 0);
}

TEST_CASE("avx2 matches scalar") {
  if (!isa_available(Isa::Avx2)) {
    MESSAGE("avx2 unavailable, skipped");
    return;
  }
  for (int dim : {1, 2, 3, 5, 8, 11}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto om = random_outmap(dim, seed * 31 + static_cast<std::uint64_t>(dim));
      CHECK(uso_pair_violations(om, Isa::Scalar) == uso_pair_violations(om, Isa::Avx2));
      for (std::uint32_t free : {0u, 1u, (1u << dim) - 1, 0x2au & ((1u << dim) - 1)}) compare_face_sinks(om, dim, free);
    }
  }
  auto c = orient_hypercube(3);
  auto om = c.orientation.outmaps();
  CHECK(uso_pair_violations(om, Isa::Avx2) == 0);
  for (std::uint32_t free = 0; free < 1024; free += 37) compare_face_sinks(om, 10, free);
  CHECK(check_faces_all(c.orientation, Isa::Scalar).failed == check_faces_all(c.orientation, Isa::Avx2).failed);
}
