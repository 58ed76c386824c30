#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// bitmask kernels over a hypercube outmap (bit i of outmap[v] = edge v -> v^(1<<i))
namespace clb::auso::kernels {

enum class Isa { Scalar, Avx2 };

bool isa_available(Isa isa);
Isa best_isa();
std::string_view isa_name(Isa isa);

// counts[v & ~free] += 1 for every vertex v with no outgoing free coordinate
void accumulate_face_sinks(std::span<const std::uint32_t> outmap, std::uint32_t free, std::span<std::uint32_t> counts,
                           Isa isa);
void accumulate_face_sinks(std::span<const std::uint32_t> outmap, std::uint32_t free, std::span<std::uint32_t> counts);

// pairs u < v with (u ^ v) & (out[u] ^ out[v]) == 0; zero iff the orientation is a USO
std::uint64_t uso_pair_violations(std::span<const std::uint32_t> outmap, Isa isa);
std::uint64_t uso_pair_violations(std::span<const std::uint32_t> outmap);

}  // namespace clb::auso::kernels
