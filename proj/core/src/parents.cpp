#include "dimlab/parents.hpp"

#include <algorithm>
#include <cstdlib>

#include "dimlab/dimension.hpp"
#include "dimlab/error.hpp"

namespace dimlab {

namespace {

std::int64_t checked_hook(const Partition& core, int r_power) {
  if (r_power < 1 || r_power > 62) {
    throw DomainError("parents: R = " + std::to_string(r_power) + " outside 1..62");
  }
  const std::int64_t hook = std::int64_t{1} << r_power;
  if (core.size() >= hook) {
    throw DomainError("parents: |core| = " + std::to_string(core.size()) +
                      " is not below 2^R = " + std::to_string(hook));
  }
  return hook;
}

bool in_set(const BetaSet& set, std::int64_t x) { return x >= 0 && set.contains(x); }

}  // namespace

std::vector<ParentRecord> type1_parents(const Partition& core, int r_power) {
  const std::int64_t hook = checked_hook(core, r_power);
  const BetaSet base = first_column_hooks(core);
  std::vector<ParentRecord> out;
  out.reserve(base.size());
  for (auto x : base) {
    std::vector<BetaSet::Element> elements;
    elements.reserve(base.size());
    for (auto y : base) {
      elements.push_back(y == x ? x + hook : y);
    }
    out.push_back({to_partition(BetaSet(std::move(elements))), core, r_power, ParentType::type1, x,
                   x + hook});
  }
  return out;
}

std::vector<ParentRecord> type2_parents(const Partition& core, int r_power) {
  const std::int64_t hook = checked_hook(core, r_power);
  const BetaSet base = first_column_hooks(core);
  std::vector<ParentRecord> out;
  out.reserve(static_cast<std::size_t>(hook) - base.size());
  for (std::int64_t r = 1; r <= hook; ++r) {
    // 2^R lies in the r-shift exactly when 2^R - r is an element of H(core).
    if (base.contains(hook - r)) {
      continue;
    }
    std::vector<BetaSet::Element> elements;
    elements.reserve(base.size() + static_cast<std::size_t>(r));
    for (auto y : base) {
      elements.push_back(y + r);
    }
    for (std::int64_t i = 1; i < r; ++i) {
      elements.push_back(i);
    }
    elements.push_back(hook);
    out.push_back({to_partition(BetaSet(std::move(elements))), core, r_power, ParentType::type2, r,
                   hook});
  }
  return out;
}

std::vector<ParentRecord> all_parents(const Partition& core, int r_power) {
  auto out = type1_parents(core, r_power);
  auto second = type2_parents(core, r_power);
  out.insert(out.end(), std::make_move_iterator(second.begin()),
             std::make_move_iterator(second.end()));
  return out;
}

std::int64_t n_between(const Partition& lambda, std::int64_t h, int r_power) {
  const BetaSet hooks = first_column_hooks(lambda);
  if (!hooks.contains(h)) {
    throw DomainError("n_between: " + std::to_string(h) + " is not a first-column hook of " +
                      to_string(lambda));
  }
  const std::int64_t low = h - (std::int64_t{1} << r_power);
  return std::count_if(hooks.begin(), hooks.end(), [&](auto y) { return low < y && y < h; });
}

int eta(const ParentRecord& record) {
  const BetaSet hooks = first_column_hooks(record.parent);
  const std::int64_t h = record.affected;
  const std::int64_t half = record.hook() / 2;
  const std::int64_t exponent = n_between(record.parent, h, record.r_power) -
                                in_set(hooks, h - half) + in_set(hooks, h + half) +
                                in_set(hooks, h - 3 * half);
  return static_cast<int>(((exponent % 2) + 2) % 2);
}

int eta_by_definition(const ParentRecord& record) {
  const BetaSet hooks = first_column_hooks(record.parent);
  const std::int64_t h = record.affected;
  const std::int64_t hook = record.hook();
  OdSign product;
  for (auto x : hooks) {
    if (x == h) {
      continue;
    }
    const auto near = static_cast<std::uint64_t>(std::llabs(h - x));
    const auto far = static_cast<std::uint64_t>(std::llabs(h - hook - x));
    if (far == 0) {
      throw ConsistencyError("eta_by_definition: h - 2^R is still an element of H(parent)");
    }
    product *= od(near) * od(far);
  }
  return product.is_plus() ? 0 : 1;
}

OdSign workhorse_predict(const ParentRecord& record, OdSign od_core) {
  const std::int64_t n = record.parent.size();
  if (n <= 3) {
    throw DomainError("workhorse_predict: |parent| must exceed 3");
  }
  if (record.core.size() >= record.hook()) {
    throw DomainError("workhorse_predict: |core| must be below 2^R");
  }
  const int exponent = leading_pair_sum(static_cast<std::uint64_t>(n)) +
                       leading_pair_sum(static_cast<std::uint64_t>(record.affected)) +
                       eta(record);
  return OdSign::from_parity(exponent) * od_core;
}

std::int64_t signed_sum(std::span<const ParentRecord> family, const Partition& core) {
  const DimClass base = dim_class(core);
  if (!base.is_odd()) {
    throw DomainError("signed_sum: core " + to_string(core) + " has even dimension");
  }
  std::int64_t total = 0;
  for (const auto& record : family) {
    if (record.core != core) {
      throw DomainError("signed_sum: record for " + to_string(record.parent) +
                        " has a different core");
    }
    const DimClass cls = dim_class(record.parent);
    if (!cls.is_odd()) {
      throw DomainError("signed_sum: " + to_string(record.parent) + " has even dimension");
    }
    total += (cls.od * base.od).value();
  }
  return total;
}

std::vector<ParentRecord> type2_with_shift_in(std::span<const ParentRecord> family,
                                              std::int64_t lo, std::int64_t hi) {
  std::vector<ParentRecord> out;
  for (const auto& record : family) {
    if (record.type == ParentType::type2 && lo <= record.parameter && record.parameter <= hi) {
      out.push_back(record);
    }
  }
  return out;
}

std::vector<ParentRecord> type2_upper(std::span<const ParentRecord> family, int r_power) {
  const std::int64_t half = std::int64_t{1} << (r_power - 1);
  return type2_with_shift_in(family, 1, half);
}

std::vector<ParentRecord> type2_lower(std::span<const ParentRecord> family, int r_power) {
  const std::int64_t half = std::int64_t{1} << (r_power - 1);
  return type2_with_shift_in(family, half + 1, 2 * half);
}

}  // namespace dimlab
