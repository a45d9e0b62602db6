#pragma once

#include <cstdint>
#include <vector>

namespace dimlab {

/// Sign of the odd part of a positive integer modulo 4: +1 for 1 (mod 4), -1 for 3 (mod 4).
///
/// Multiplicative, so it is carried through products and quotients of factorials
/// without ever forming the (huge) integers themselves.
class OdSign {
 public:
  constexpr OdSign() = default;

  static constexpr OdSign plus() { return OdSign(1); }
  static constexpr OdSign minus() { return OdSign(-1); }
  /// (-1)^exponent; negative exponents are fine.
  static constexpr OdSign from_parity(std::int64_t exponent) {
    return (exponent % 2 == 0) ? plus() : minus();
  }

  constexpr int value() const { return value_; }
  constexpr bool is_plus() const { return value_ == 1; }
  /// The residue 1 or 3 this sign stands for.
  constexpr int residue() const { return value_ == 1 ? 1 : 3; }

  constexpr OdSign operator-() const { return OdSign(-value_); }
  constexpr OdSign& operator*=(OdSign other) {
    value_ *= other.value_;
    return *this;
  }
  friend constexpr OdSign operator*(OdSign a, OdSign b) { return a *= b; }
  friend constexpr bool operator==(OdSign, OdSign) = default;

 private:
  constexpr explicit OdSign(int value) : value_(value) {}
  int value_ = 1;
};

/// Binary-expansion statistics of a positive integer.
struct BinaryStats {
  std::uint64_t n = 0;
  int v2 = 0;             ///< 2-adic valuation (lowest set bit)
  int digit_sum = 0;      ///< number of 1-bits
  int adjacent_ones = 0;  ///< number of i with bits i and i+1 both set
  int leading_pair = 0;   ///< top bit plus the bit just below it, in {1, 2}
  std::vector<int> bits;  ///< positions of the 1-bits, ascending
};

/// Throws DomainError for n == 0.
BinaryStats binary_stats(std::uint64_t n);

/// 2-adic valuation. Throws DomainError for n == 0.
int valuation2(std::uint64_t n);
/// Number of 1-bits; 0 for n == 0.
int digit_sum(std::uint64_t n);
/// Number of adjacent 1-bit pairs (overlapping pairs count); 0 for n == 0.
int adjacent_ones(std::uint64_t n);
/// Sum of the two leftmost binary digits. A single-bit number reads its missing
/// second digit as 0, so leading_pair_sum(1) == 1. Throws DomainError for n == 0.
int leading_pair_sum(std::uint64_t n);

/// Throws DomainError for n == 0.
OdSign od(std::uint64_t n);
/// od(n!) in O(1): (-1)^(adjacent_ones(n) + digit_sum(n / 4)). od_factorial(0) is +1.
OdSign od_factorial(std::uint64_t n);
/// v2(n!) = n - digit_sum(n) (Legendre).
std::uint64_t valuation2_factorial(std::uint64_t n);

/// No two adjacent 1-bits.
bool is_sparse(std::uint64_t n);

struct Mod4Counts {
  std::uint64_t ones = 0;
  std::uint64_t threes = 0;
  friend bool operator==(const Mod4Counts&, const Mod4Counts&) = default;
};

/// How many C(n, k), 0 <= k <= n, are 1 and 3 modulo 4. Uses valuations and od_factorial only.
Mod4Counts binom_mod4_counts(std::uint64_t n);

}  // namespace dimlab
