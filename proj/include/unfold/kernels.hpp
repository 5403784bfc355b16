#pragma once

// Residue-sum kernel behind t(ℓ): sums[ℓ] = Σ_i (ℓ·q_i mod k) for ℓ in [0, k).
//
// A scalar reference and an AVX2 variant produce identical output; the
// dispatcher picks the widest variant the running CPU supports.

#include <cstdint>
#include <span>
#include <string_view>

namespace unfold::kernels {

/// Requires 0 < q_i, n·2k <= kMaxModulus so lane arithmetic stays in int32.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 30;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Widest variant supported by this CPU and build.
Isa best_isa();
Isa active_isa();
/// Pins dispatch to `isa` (tests and benchmarks). Falls back to Scalar when
/// the requested variant is unavailable; returns the variant now active.
Isa force_isa(Isa isa);

void residue_sums_scalar(std::span<const std::int32_t> q, std::int32_t k, std::span<std::int32_t> sums);
void residue_sums_avx2(std::span<const std::int32_t> q, std::int32_t k, std::span<std::int32_t> sums);

/// Dispatching entry point. sums.size() must equal k.
void residue_sums(std::span<const std::int32_t> q, std::int32_t k, std::span<std::int32_t> sums);

}  // namespace unfold::kernels
