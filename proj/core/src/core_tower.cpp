#include "dimlab/core_tower.hpp"

#include <algorithm>

#include "dimlab/beta_set.hpp"
#include "dimlab/error.hpp"

namespace dimlab {

namespace {

__extension__ typedef unsigned __int128 u128;

// Beads on the even and odd runners of an even-size beta-set, halved.
struct Runners {
  std::vector<BetaSet::Element> even;
  std::vector<BetaSet::Element> odd;
};

Runners split_runners(const Partition& lambda) {
  BetaSet set = first_column_hooks(lambda);
  if (set.size() % 2 != 0) {
    set = shift(set, 1);
  }
  Runners runners;
  for (auto x : set) {
    (x % 2 == 0 ? runners.even : runners.odd).push_back(x / 2);
  }
  return runners;
}

// Staircase length s from its size s(s+1)/2, or -1.
std::int64_t staircase_length(const Partition& lambda) {
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<std::int64_t>(p.size() - i)) {
      return -1;
    }
  }
  return static_cast<std::int64_t>(p.size());
}

}  // namespace

TwoQuotient two_quotient(const Partition& lambda) {
  Runners runners = split_runners(lambda);
  return {to_partition(BetaSet(std::move(runners.even))),
          to_partition(BetaSet(std::move(runners.odd)))};
}

bool is_two_core(const Partition& lambda) { return staircase_length(lambda) >= 0; }

Partition combine(const Partition& zero, const Partition& one, const Partition& core) {
  const std::int64_t s = staircase_length(core);
  if (s < 0) {
    throw DomainError("combine: " + to_string(core) + " is not a 2-core");
  }
  // Runner imbalance (even beads minus odd beads) of an even-size beta-set of the
  // staircase of length s: -s for even s, s + 1 for odd s.
  const std::int64_t charge = (s % 2 == 0) ? -s : s + 1;
  const auto len0 = static_cast<std::int64_t>(zero.length());
  const auto len1 = static_cast<std::int64_t>(one.length());
  const std::int64_t beads0 = std::max({len0, len1 + charge, charge});
  const std::int64_t beads1 = beads0 - charge;
  const BetaSet set0 = shift(first_column_hooks(zero), beads0 - len0);
  const BetaSet set1 = shift(first_column_hooks(one), beads1 - len1);
  std::vector<BetaSet::Element> merged;
  merged.reserve(set0.size() + set1.size());
  for (auto y : set0) merged.push_back(2 * y);
  for (auto y : set1) merged.push_back(2 * y + 1);
  return to_partition(BetaSet(std::move(merged)));
}

CoreTower::CoreTower(std::vector<std::vector<Partition>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != (std::size_t{1} << i)) {
      throw ValidationError("core tower row " + std::to_string(i) + " must have 2^" +
                            std::to_string(i) + " nodes");
    }
    for (const auto& node : rows_[i]) {
      if (!is_two_core(node)) {
        throw ValidationError("core tower node " + to_string(node) + " is not a 2-core");
      }
    }
  }
  while (!rows_.empty() && std::all_of(rows_.back().begin(), rows_.back().end(),
                                       [](const Partition& p) { return p.empty(); })) {
    rows_.pop_back();
  }
}

Partition CoreTower::node(std::size_t row, std::size_t index) const {
  if (row >= rows_.size()) {
    return {};
  }
  return rows_[row].at(index);
}

CoreTower tower(const Partition& lambda) {
  std::vector<std::vector<Partition>> rows;
  std::vector<Partition> level{lambda};
  while (std::any_of(level.begin(), level.end(), [](const Partition& p) { return !p.empty(); })) {
    std::vector<Partition> cores;
    std::vector<Partition> next;
    cores.reserve(level.size());
    next.reserve(2 * level.size());
    for (const auto& p : level) {
      cores.push_back(t_core(p, 2));
      auto quotient = two_quotient(p);
      next.push_back(std::move(quotient.zero));
      next.push_back(std::move(quotient.one));
    }
    rows.push_back(std::move(cores));
    level = std::move(next);
  }
  return CoreTower(std::move(rows));
}

Partition from_tower(const CoreTower& t) {
  // Below the last row everything is empty, so each bottom node is its own partition.
  std::vector<Partition> level;
  for (std::size_t row = t.depth(); row-- > 0;) {
    const auto& cores = t.rows()[row];
    std::vector<Partition> built;
    built.reserve(cores.size());
    for (std::size_t j = 0; j < cores.size(); ++j) {
      if (level.empty()) {
        built.push_back(cores[j]);
      } else {
        built.push_back(combine(level[2 * j], level[2 * j + 1], cores[j]));
      }
    }
    level = std::move(built);
  }
  return level.empty() ? Partition{} : level.front();
}

WeightVector row_weights(const CoreTower& t) {
  WeightVector weights;
  weights.reserve(t.depth());
  for (const auto& row : t.rows()) {
    std::int64_t w = 0;
    for (const auto& node : row) {
      w += node.size();
    }
    weights.push_back(w);
  }
  return weights;
}

TowerClass classify_by_tower(const Partition& lambda) {
  const WeightVector weights = row_weights(tower(lambda));
  const auto n = static_cast<std::uint64_t>(lambda.size());
  const std::size_t span = std::max<std::size_t>(weights.size(), 64);
  auto weight = [&](std::size_t i) { return i < weights.size() ? weights[i] : 0; };
  auto digit = [&](std::size_t i) -> std::int64_t { return i < 64 ? (n >> i) & 1U : 0; };

  std::vector<std::size_t> mismatches;
  for (std::size_t i = 0; i < span; ++i) {
    if (weight(i) != digit(i)) {
      mismatches.push_back(i);
    }
  }
  if (mismatches.empty()) {
    return TowerClass::odd;
  }
  // The perturbed pattern differs from the digits in exactly rows R-1 and R.
  if (mismatches.size() == 2 && mismatches[1] == mismatches[0] + 1) {
    const std::size_t r = mismatches[1];
    if (digit(r) == 1 && weight(r) == 0 && weight(r - 1) == digit(r - 1) + 2) {
      return TowerClass::two_mod_4;
    }
  }
  return TowerClass::other;
}

const char* to_string(TowerClass cls) {
  switch (cls) {
    case TowerClass::odd:
      return "odd";
    case TowerClass::two_mod_4:
      return "two_mod_4";
    case TowerClass::other:
      return "other";
  }
  return "other";
}

std::uint64_t count_towers_row(int k, int w) {
  if (w < 0 || w > 3) {
    throw DomainError("count_towers_row: weight " + std::to_string(w) +
                      " is unsupported (only 0..3)");
  }
  if (k < 0 || k > 62) {
    throw SizeError("count_towers_row: row index " + std::to_string(k) + " out of range");
  }
  const u128 nodes = static_cast<u128>(1) << k;
  u128 count = 0;
  switch (w) {
    case 0:
      count = 1;
      break;
    case 1:
      count = nodes;
      break;
    case 2:
      count = nodes * (nodes - 1) / 2;
      break;
    case 3:
      // (nodes choose 3) + nodes; nodes^3 overflows 128 bits only for k > 42.
      if (k > 42) {
        throw SizeError("count_towers_row: result for k = " + std::to_string(k) + " overflows");
      }
      count = nodes * (nodes - 1) * (nodes - 2) / 6 + nodes;
      break;
  }
  if (count > static_cast<u128>(UINT64_MAX)) {
    throw SizeError("count_towers_row: result for k = " + std::to_string(k) + " overflows");
  }
  return static_cast<std::uint64_t>(count);
}

CoreTower flip(const CoreTower& t) {
  auto rows = t.rows();
  for (auto& row : rows) {
    std::reverse(row.begin(), row.end());
  }
  return CoreTower(std::move(rows));
}

std::string render(const CoreTower& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) {
        out += " | ";
      }
      out += to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace dimlab
