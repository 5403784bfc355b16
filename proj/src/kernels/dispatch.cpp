#include <atomic>
#include <cstdint>
#include <span>
#include <string>

#include "unfold/errors.hpp"
#include "unfold/kernels.hpp"

namespace unfold::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{best_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa best_isa() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

Isa force_isa(Isa isa) {
  if (isa == Isa::Avx2 && !cpu_has_avx2()) isa = Isa::Scalar;
  active().store(isa, std::memory_order_relaxed);
  return isa;
}

void residue_sums(std::span<const std::int32_t> q, std::int32_t k, std::span<std::int32_t> sums) {
  if (k < 1 || static_cast<std::int64_t>(sums.size()) != k)
    throw InvalidInput("residue_sums: output length must equal k = " + std::to_string(k));
  if (static_cast<std::int64_t>(q.size()) * 2 * k > kMaxModulus)
    throw InvalidInput("residue_sums: modulus too large");
  for (const auto qi : q) {
    if (qi < 1) throw InvalidInput("residue_sums: numerators must be positive");
  }
  switch (active_isa()) {
    case Isa::Avx2: residue_sums_avx2(q, k, sums); return;
    case Isa::Scalar: residue_sums_scalar(q, k, sums); return;
  }
}

}  // namespace unfold::kernels
