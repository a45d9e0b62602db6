#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dimlab/partition.hpp"

namespace dimlab {

struct TwoQuotient {
  Partition zero;  ///< built from the even elements of an even-size beta-set
  Partition one;   ///< built from the odd elements
  friend bool operator==(const TwoQuotient&, const TwoQuotient&) = default;
};

/// The 2-quotient of lambda. Satisfies |lambda| = 2(|zero| + |one|) + |t_core(lambda, 2)|.
TwoQuotient two_quotient(const Partition& lambda);

/// Staircase (s, s-1, ..., 1), including the empty partition.
bool is_two_core(const Partition& lambda);

/// The unique partition with the given 2-quotient and 2-core.
/// Throws DomainError if `core` is not a staircase.
Partition combine(const Partition& zero, const Partition& one, const Partition& core);

/// Rooted binary tree of 2-cores. Row i holds 2^i nodes indexed by binary strings
/// b_1...b_i read as integers with b_1 most significant, so the children of node j
/// are 2j (append 0) and 2j + 1 (append 1). Only rows up to the last non-empty one
/// are stored.
class CoreTower {
 public:
  CoreTower() = default;
  /// Throws ValidationError on a malformed row or a non-2-core node. Trailing
  /// all-empty rows are dropped.
  explicit CoreTower(std::vector<std::vector<Partition>> rows);

  const std::vector<std::vector<Partition>>& rows() const { return rows_; }
  /// Smallest d such that every row >= d is empty.
  std::size_t depth() const { return rows_.size(); }
  /// Node label; rows past depth() read as empty.
  Partition node(std::size_t row, std::size_t index) const;

  friend bool operator==(const CoreTower&, const CoreTower&) = default;

 private:
  std::vector<std::vector<Partition>> rows_;
};

CoreTower tower(const Partition& lambda);

/// Inverse of tower().
Partition from_tower(const CoreTower& tower);

/// w_i = sum of node sizes in row i, for i < depth. Sum of w_i 2^i equals |lambda|.
using WeightVector = std::vector<std::int64_t>;
WeightVector row_weights(const CoreTower& tower);

enum class TowerClass { odd, two_mod_4, other };

/// odd iff w_i = b_i for all i (b = binary digits of |lambda|); two_mod_4 iff for some
/// R > 0 with b_R = 1 the weights are w_{R-1} = b_{R-1} + 2, w_R = 0 and w_i = b_i elsewhere.
TowerClass classify_by_tower(const Partition& lambda);

const char* to_string(TowerClass cls);

/// Number of ways to label the 2^k nodes of a row with 2-cores of total size w, for w <= 3.
/// Throws DomainError for w > 3, SizeError on overflow.
std::uint64_t count_towers_row(int k, int w);

/// Mirror image: the node at string b moves to the complementary string.
/// flip(tower(lambda)) == tower(conjugate(lambda)).
CoreTower flip(const CoreTower& tower);

/// One row per line, nodes separated by " | ", e.g. "2,1" / "- | -".
std::string render(const CoreTower& tower);

}  // namespace dimlab
