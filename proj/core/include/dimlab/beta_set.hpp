#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dimlab/partition.hpp"

namespace dimlab {

/// A finite set of distinct non-negative integers, kept sorted in descending order.
///
/// Any set decodes to a partition (to_partition); sets related by shifts decode to the
/// same one. Operations here never normalize implicitly, because parent construction
/// works on shifted sets.
class BetaSet {
 public:
  using Element = std::int64_t;

  BetaSet() = default;
  /// Elements in any order. Throws ValidationError on negatives or duplicates.
  explicit BetaSet(std::vector<Element> elements);
  BetaSet(std::initializer_list<Element> elements);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(Element x) const;
  /// i-th largest element, 0-based.
  Element operator[](std::size_t i) const { return elements_[i]; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  struct Sorted {};
  BetaSet(Sorted, std::vector<Element> descending) : elements_(std::move(descending)) {}
  friend BetaSet first_column_hooks(const Partition&);
  friend BetaSet shift(const BetaSet&, std::int64_t);
  friend BetaSet remove_hook(const BetaSet&, Element, std::int64_t);

  std::vector<Element> elements_;
};

/// First-column hook lengths {lambda_i + k - i}, the normalized beta-set of lambda.
BetaSet first_column_hooks(const Partition& lambda);

/// {x + r : x in X} together with {0, ..., r-1}.
BetaSet shift(const BetaSet& set, std::int64_t r);

/// lambda_i = h_i + i - k over the descending elements, dropping non-positive rows.
Partition to_partition(const BetaSet& set);

/// first_column_hooks(to_partition(set)).
BetaSet normalized(const BetaSet& set);

/// Whether one set is a shift of the other.
bool equivalent(const BetaSet& a, const BetaSet& b);

/// Which precondition of remove_hook failed.
enum class HookClause { not_member, too_short, target_occupied };

class HookError : public std::invalid_argument {
 public:
  HookError(HookClause clause, const std::string& what)
      : std::invalid_argument(what), clause_(clause) {}
  HookClause clause() const { return clause_; }

 private:
  HookClause clause_;
};

/// Replace h by h - t. Requires h in X, h >= t and h - t not in X; throws HookError otherwise.
BetaSet remove_hook(const BetaSet& set, BetaSet::Element h, std::int64_t t);

/// Elements h of the set admitting remove_hook(set, h, t), descending.
std::vector<BetaSet::Element> removable_hooks(const BetaSet& set, std::int64_t t);

/// t-core of lambda: strips t-hooks, largest removable element first. Throws DomainError if t < 1.
Partition t_core(const Partition& lambda, std::int64_t t);

/// (#even elements) - (#odd elements).
std::int64_t parity_gap(const BetaSet& set);

/// Text form "{10,8,7,5,2}".
std::string to_string(const BetaSet& set);
BetaSet parse_beta_set(std::string_view text);
std::ostream& operator<<(std::ostream& os, const BetaSet& set);

}  // namespace dimlab
