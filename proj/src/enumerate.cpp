#include <algorithm>
#include <numeric>
#include <thread>

#include "unfold/certify.hpp"
#include "unfold/errors.hpp"

namespace unfold {

std::vector<std::array<std::int64_t, 3>> enumerate_triples(std::int64_t k_max, EnumerationFilters filters) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t k = 3; k <= k_max; ++k) {
    if (filters.odd_k && k % 2 == 0) continue;
    for (std::int64_t q1 = 1; 3 * q1 <= k; ++q1) {
      for (std::int64_t q2 = q1; q1 + 2 * q2 <= k; ++q2) {
        const std::int64_t q3 = k - q1 - q2;
        if (filters.distinct_q && (q1 == q2 || q2 == q3)) continue;
        if (filters.gcd_one && std::gcd(std::gcd(q1, q2), q3) != 1) continue;
        out.push_back({q1, q2, q3});
      }
    }
  }
  return out;
}

std::vector<EnumeratedCertificate> enumerate_certificates(std::int64_t k_max, EnumerationFilters filters,
                                                          unsigned workers) {
  if (k_max < 3) throw InvalidInput("k_max must be at least 3");
  const auto triples = enumerate_triples(k_max, filters);

  std::vector<std::optional<EnumeratedCertificate>> slots(triples.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(triples.size(), 1)));

  // Strided partition; every slot is written by exactly one worker and the
  // merge is by index, so the result is independent of scheduling.
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < triples.size(); i += workers) {
      const auto& [q1, q2, q3] = triples[i];
      slots[i] = EnumeratedCertificate{q1, q2, q3, make_certificate(make_angle_system({q1, q2, q3}, GcdMode::Reduce))};
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) {
      pool.emplace_back([&, id] {
        try {
          work(id);
        } catch (...) {
          errors[id] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<EnumeratedCertificate> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace unfold
