#include "dimlab/alternating.hpp"

#include <bit>

#include "dimlab/dimension.hpp"
#include "dimlab/error.hpp"

namespace dimlab {

namespace {

// k when n = 2^k, otherwise -1.
int power_of_two_exponent(std::uint64_t n) {
  return std::has_single_bit(n) ? std::countr_zero(n) : -1;
}

}  // namespace

std::string AltReport::source_label() const {
  if (counts_source == split_source) {
    return to_string(counts_source);
  }
  return "mixed";
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

std::uint64_t hat_m2(std::uint64_t n) {
  if (n == 3) {
    return 1;
  }
  int k = power_of_two_exponent(n);
  if (k < 0 && n > 1) {
    k = power_of_two_exponent(n - 1);
  }
  return k > 1 ? std::uint64_t{1} << (k - 2) : 0;
}

std::uint64_t a_circ(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("a_circ: n must be positive");
  }
  if (n <= 2) {
    return 1;
  }
  return 2 * hat_m2(n) + count_odd(n) / 2;
}

DeltaResult delta_circ(std::uint64_t n, std::int64_t oracle_bound) {
  if (n == 0) {
    throw DomainError("delta_circ: n must be positive");
  }
  if (n <= 2) {
    return {1, DeltaStatus::exact_formula, DeltaRule::base_case};
  }
  if (n == 3) {
    return {3, DeltaStatus::exact_formula, DeltaRule::base_case};
  }
  if (const int k = power_of_two_exponent(n); k > 1) {
    return {std::int64_t{1} << (k - 1), DeltaStatus::exact_formula, DeltaRule::base_case};
  }
  if (const int k = power_of_two_exponent(n - 1); k > 1) {
    return {(std::int64_t{1} << (k - 1)) - 2, DeltaStatus::exact_formula, DeltaRule::base_case};
  }
  DeltaResult result = delta(n, oracle_bound);
  if (result.value % 2 != 0) {
    throw ConsistencyError("delta_circ: delta(" + std::to_string(n) + ") = " +
                           std::to_string(result.value) + " is odd");
  }
  result.value /= 2;
  return result;
}

AltReport alternating_oracle(std::int64_t n, std::int64_t bound) {
  if (n < 3) {
    throw DomainError("alternating_oracle: n must be at least 3");
  }
  if (n > bound) {
    throw SizeError("alternating_oracle: n = " + std::to_string(n) +
                    " exceeds the oracle bound " + std::to_string(bound));
  }
  AltReport report;
  report.n = n;
  for (const Partition& lambda : enumerate_partitions(n)) {
    const Partition mirror = conjugate(lambda);
    const DimClass cls = dim_class(lambda);
    if (mirror == lambda) {
      if (cls.is_odd()) {
        throw ConsistencyError("alternating_oracle: self-conjugate " + to_string(lambda) +
                               " has odd dimension");
      }
      if (cls.v2 == 1) {
        // Each half has v2 = 0 and keeps the odd-part sign.
        const DimClass half{cls.v2 - 1, cls.od};
        (half.residue() == 1 ? report.a1_circ : report.a3_circ) += 2;
        ++report.m2_hat;
      }
    } else if (mirror < lambda && cls.is_odd()) {
      ++(cls.residue() == 1 ? report.a1_circ : report.a3_circ);
    }
  }
  report.a_circ = report.a1_circ + report.a3_circ;
  report.delta_circ =
      static_cast<std::int64_t>(report.a1_circ) - static_cast<std::int64_t>(report.a3_circ);
  report.counts_source = report.split_source = Source::oracle;
  return report;
}

AltReport alternating_report(std::uint64_t n, std::int64_t oracle_bound) {
  AltReport report;
  report.n = static_cast<std::int64_t>(n);
  report.a_circ = a_circ(n);
  report.m2_hat = hat_m2(n);
  const DeltaResult d = delta_circ(n, oracle_bound);
  report.delta_circ = d.value;
  const auto total = static_cast<std::int64_t>(report.a_circ);
  if ((total + d.value) % 2 != 0 || d.value > total || -d.value > total) {
    throw ConsistencyError("alternating_report: a_circ = " + std::to_string(total) +
                           " and delta_circ = " + std::to_string(d.value) + " are incompatible");
  }
  report.a1_circ = static_cast<std::uint64_t>((total + d.value) / 2);
  report.a3_circ = static_cast<std::uint64_t>((total - d.value) / 2);
  if (d.status == DeltaStatus::oracle_fallback) {
    report.split_source = Source::oracle;
  }
  return report;
}

}  // namespace dimlab
