#include <cstdint>
#include <span>

#include "unfold/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define UNFOLD_HAVE_AVX2_KERNEL 1
#endif

namespace unfold::kernels {

#if defined(UNFOLD_HAVE_AVX2_KERNEL)

// Eight consecutive ℓ per vector. Each lane carries r = ℓ·q mod k and advances
// by (8·q mod k) per block with one conditional subtraction, so no division
// happens in the inner loop.
__attribute__((target("avx2"))) void residue_sums_avx2(std::span<const std::int32_t> q, std::int32_t k,
                                                       std::span<std::int32_t> sums) {
  const std::size_t len = sums.size();
  const std::size_t blocks = len / 8;
  const __m256i kv = _mm256_set1_epi32(k);
  const __m256i k_minus_1 = _mm256_set1_epi32(k - 1);

  for (std::size_t b = 0; b < blocks; ++b)
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(sums.data() + 8 * b), _mm256_setzero_si256());

  for (const std::int32_t qi : q) {
    const std::int32_t qr = qi % k;
    alignas(32) std::int32_t init[8];
    for (int j = 0; j < 8; ++j) init[j] = static_cast<std::int32_t>((static_cast<std::int64_t>(j) * qr) % k);
    __m256i r = _mm256_load_si256(reinterpret_cast<const __m256i*>(init));
    const __m256i step = _mm256_set1_epi32(static_cast<std::int32_t>((8 * static_cast<std::int64_t>(qr)) % k));

    for (std::size_t b = 0; b < blocks; ++b) {
      auto* dst = reinterpret_cast<__m256i*>(sums.data() + 8 * b);
      _mm256_storeu_si256(dst, _mm256_add_epi32(_mm256_loadu_si256(dst), r));
      r = _mm256_add_epi32(r, step);
      const __m256i wrap = _mm256_cmpgt_epi32(r, k_minus_1);
      r = _mm256_sub_epi32(r, _mm256_and_si256(wrap, kv));
    }
  }

  for (std::size_t ell = 8 * blocks; ell < len; ++ell) {
    std::int64_t s = 0;
    for (const auto qi : q) s += (static_cast<std::int64_t>(ell) * qi) % k;
    sums[ell] = static_cast<std::int32_t>(s);
  }
}

#else

void residue_sums_avx2(std::span<const std::int32_t> q, std::int32_t k, std::span<std::int32_t> sums) {
  residue_sums_scalar(q, k, sums);
}

#endif

}  // namespace unfold::kernels
