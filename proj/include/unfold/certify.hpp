#pragma once

// Full-rank certification for triangle unfoldings: the divisor set D, the
// relation pairs E, the unit subset A, and the verdict built on them.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unfold/angle_core.hpp"
#include "unfold/hodge.hpp"

namespace unfold {

struct RelationTrace {
  /// Divisors d | k with some a, gcd(a,k) = d, t(−a) > 1. Sorted.
  std::vector<std::int64_t> divisors;
  /// Unordered pairs (smaller first) that generate the equivalence on D. Sorted.
  std::vector<std::pair<std::int64_t, std::int64_t>> relations;
  /// Units collected by the loop and the a ≡ 1 mod k/d augmentation.
  ResidueSet a_generators{1, {}};
  ResidueSet a_closure{1, {}};
  /// Partition of D under the generated equivalence; each class sorted,
  /// classes ordered by their smallest member.
  std::vector<std::vector<std::int64_t>> classes;

  bool single_class() const { return classes.size() == 1; }
};

enum class Verdict {
  DenseInStratumComponent,
  FullRankUndetermined,
  Inconclusive,
};

std::string_view verdict_name(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view name);

struct Certificate {
  AngleSystem sys;
  int genus = 0;
  StratumSignature stratum{};
  int rank_lower_bound = 0;
  bool full_rank_certified = false;
  bool hyperelliptic_excluded = false;
  Verdict verdict = Verdict::Inconclusive;
  RelationTrace trace{};
};

/// The divisor set D for a normalized triangle.
std::vector<std::int64_t> divisor_set(const AngleSystem& sys);

/// Runs the certification loop over a = 2..k−1 and records D, E and A.
RelationTrace build_relations(const AngleSystem& sys);

/// True iff D forms one class under E and A generates (ℤ/k)*.
bool full_rank_certified(const AngleSystem& sys);
bool full_rank_certified(const RelationTrace& trace, std::int64_t k);

/// Some a in (ℤ/k)* with 2a ≢ 2, t(−a) > 1 and t(−(2−a)) > 1.
bool rank_exceeds_trivial_bound(const AngleSystem& sys);

int rank_lower_bound(const AngleSystem& sys);

Certificate make_certificate(const AngleSystem& sys);

struct EnumerationFilters {
  bool odd_k = true;
  bool distinct_q = true;
  /// Skip triples with a common factor. When off, such triples are
  /// certified through their reduced form.
  bool gcd_one = true;
};

struct EnumeratedCertificate {
  /// The enumerated triple (may carry a common factor when gcd_one is off).
  std::int64_t q1 = 0, q2 = 0, q3 = 0;
  Certificate cert;  // of the reduced system
};

/// All q1 ≤ q2 ≤ q3 with q1+q2+q3 = k ≤ k_max passing the filters, ordered by
/// k then lexicographically. `workers` = 0 uses the hardware concurrency.
/// The output does not depend on the worker count.
std::vector<EnumeratedCertificate> enumerate_certificates(std::int64_t k_max, EnumerationFilters filters,
                                                          unsigned workers = 0);

/// Enumeration without certification (same order and filters).
std::vector<std::array<std::int64_t, 3>> enumerate_triples(std::int64_t k_max, EnumerationFilters filters);

}  // namespace unfold
