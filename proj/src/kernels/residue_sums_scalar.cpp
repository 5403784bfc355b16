#include <cstdint>
#include <span>

#include "unfold/kernels.hpp"

namespace unfold::kernels {

void residue_sums_scalar(std::span<const std::int32_t> q, std::int32_t k, std::span<std::int32_t> sums) {
  for (std::size_t ell = 0; ell < sums.size(); ++ell) {
    std::int64_t s = 0;
    for (const auto qi : q) s += (static_cast<std::int64_t>(ell) * qi) % k;
    sums[ell] = static_cast<std::int32_t>(s);
  }
}

}  // namespace unfold::kernels
