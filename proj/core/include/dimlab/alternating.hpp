#pragma once

#include <cstdint>
#include <string>

#include "dimlab/enumeration.hpp"
#include "dimlab/partition.hpp"

namespace dimlab {

inline constexpr std::int64_t kDefaultAltOracleBound = 36;

/// Irreducibles of A_n by degree mod 4, tallied from partitions of n.
struct AltReport {
  std::int64_t n = 0;
  std::uint64_t a1_circ = 0;
  std::uint64_t a3_circ = 0;
  std::uint64_t a_circ = 0;
  std::int64_t delta_circ = 0;
  std::uint64_t m2_hat = 0;  ///< self-conjugate partitions with f = 2 mod 4
  Source counts_source = Source::formula;  ///< a_circ and m2_hat
  Source split_source = Source::formula;   ///< delta_circ, a1_circ and a3_circ

  std::string source_label() const;
  friend bool operator==(const AltReport&, const AltReport&) = default;
};

bool is_self_conjugate(const Partition& lambda);

/// 1 for n = 3, 2^(k-2) for n = 2^k or 2^k + 1 with k > 1, else 0.
std::uint64_t hat_m2(std::uint64_t n);

/// Odd-degree irreducibles of A_n: 1 for n <= 2, else 2 hat_m2(n) + a(n)/2.
std::uint64_t a_circ(std::uint64_t n);

/// a1_circ - a3_circ. n = 1, 2 give 1 (the trivial group). Otherwise the closed
/// forms for n = 3, 2^k, 2^k + 1 and delta(n)/2 elsewhere, with delta's status.
DeltaResult delta_circ(std::uint64_t n, std::int64_t oracle_bound = kDefaultOracleBound);

/// Walks every partition of n: a self-conjugate lambda gives two irreducibles of degree
/// f/2, a conjugate pair gives one of degree f. Requires 3 <= n <= bound.
AltReport alternating_oracle(std::int64_t n, std::int64_t bound = kDefaultAltOracleBound);

/// Formula-first report.
AltReport alternating_report(std::uint64_t n, std::int64_t oracle_bound = kDefaultOracleBound);

}  // namespace dimlab
