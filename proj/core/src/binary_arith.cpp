#include "dimlab/binary_arith.hpp"

#include <bit>

#include "dimlab/error.hpp"

namespace dimlab {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) {
    throw DomainError(std::string(what) + ": argument must be positive");
  }
}

}  // namespace

int valuation2(std::uint64_t n) {
  require_positive(n, "valuation2");
  return std::countr_zero(n);
}

int digit_sum(std::uint64_t n) { return std::popcount(n); }

int adjacent_ones(std::uint64_t n) { return std::popcount(n & (n >> 1)); }

int leading_pair_sum(std::uint64_t n) {
  require_positive(n, "leading_pair_sum");
  const int top = std::bit_width(n) - 1;
  if (top == 0) {
    return 1;
  }
  return 1 + static_cast<int>((n >> (top - 1)) & 1U);
}

BinaryStats binary_stats(std::uint64_t n) {
  require_positive(n, "binary_stats");
  BinaryStats stats;
  stats.n = n;
  stats.v2 = std::countr_zero(n);
  stats.digit_sum = digit_sum(n);
  stats.adjacent_ones = adjacent_ones(n);
  stats.leading_pair = leading_pair_sum(n);
  for (std::uint64_t rest = n; rest != 0; rest &= rest - 1) {
    stats.bits.push_back(std::countr_zero(rest));
  }
  return stats;
}

OdSign od(std::uint64_t n) {
  require_positive(n, "od");
  const std::uint64_t odd = n >> std::countr_zero(n);
  return (odd & 3U) == 1 ? OdSign::plus() : OdSign::minus();
}

OdSign od_factorial(std::uint64_t n) {
  return OdSign::from_parity(adjacent_ones(n) + digit_sum(n >> 2));
}

std::uint64_t valuation2_factorial(std::uint64_t n) {
  return n - static_cast<std::uint64_t>(digit_sum(n));
}

bool is_sparse(std::uint64_t n) { return (n & (n >> 1)) == 0; }

Mod4Counts binom_mod4_counts(std::uint64_t n) {
  Mod4Counts counts;
  const int n_digits = digit_sum(n);
  const OdSign top = od_factorial(n);
  for (std::uint64_t k = 0; k <= n; ++k) {
    // Kummer: v2(C(n,k)) is the number of carries when adding k and n-k.
    if (digit_sum(k) + digit_sum(n - k) != n_digits) {
      continue;
    }
    const OdSign sign = top * od_factorial(k) * od_factorial(n - k);
    if (sign.is_plus()) {
      ++counts.ones;
    } else {
      ++counts.threes;
    }
    if (k == n) {
      break;
    }
  }
  return counts;
}

}  // namespace dimlab
