#include "dimlab/beta_set.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

#include "dimlab/error.hpp"

namespace dimlab {

BetaSet::BetaSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), std::greater<>());
  if (!elements_.empty() && elements_.back() < 0) {
    throw ValidationError("beta-set elements must be non-negative");
  }
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw ValidationError("beta-set elements must be distinct");
  }
}

BetaSet::BetaSet(std::initializer_list<Element> elements)
    : BetaSet(std::vector<Element>(elements)) {}

bool BetaSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x, std::greater<>());
}

BetaSet first_column_hooks(const Partition& lambda) {
  const auto k = static_cast<std::int64_t>(lambda.length());
  std::vector<BetaSet::Element> hooks;
  hooks.reserve(lambda.length());
  for (std::int64_t i = 0; i < k; ++i) {
    hooks.push_back(lambda.row(static_cast<std::size_t>(i)) + k - i - 1);
  }
  return BetaSet(BetaSet::Sorted{}, std::move(hooks));
}

BetaSet shift(const BetaSet& set, std::int64_t r) {
  if (r < 0) {
    throw DomainError("shift amount must be non-negative");
  }
  std::vector<BetaSet::Element> out;
  out.reserve(set.size() + static_cast<std::size_t>(r));
  for (auto x : set) {
    out.push_back(x + r);
  }
  for (std::int64_t i = r - 1; i >= 0; --i) {
    out.push_back(i);
  }
  return BetaSet(BetaSet::Sorted{}, std::move(out));
}

Partition to_partition(const BetaSet& set) {
  const auto k = static_cast<std::int64_t>(set.size());
  std::vector<Partition::Part> parts;
  for (std::int64_t i = 0; i < k; ++i) {
    const auto part = set[static_cast<std::size_t>(i)] + (i + 1) - k;
    if (part <= 0) {
      break;
    }
    parts.push_back(part);
  }
  return make_partition_unchecked(std::move(parts));
}

BetaSet normalized(const BetaSet& set) { return first_column_hooks(to_partition(set)); }

bool equivalent(const BetaSet& a, const BetaSet& b) { return to_partition(a) == to_partition(b); }

BetaSet remove_hook(const BetaSet& set, BetaSet::Element h, std::int64_t t) {
  if (t < 1) {
    throw DomainError("hook length must be positive");
  }
  if (!set.contains(h)) {
    throw HookError(HookClause::not_member, std::to_string(h) + " is not in " + to_string(set));
  }
  if (h < t) {
    throw HookError(HookClause::too_short,
                    std::to_string(h) + " is smaller than the hook length " + std::to_string(t));
  }
  if (set.contains(h - t)) {
    throw HookError(HookClause::target_occupied,
                    std::to_string(h - t) + " is already in " + to_string(set));
  }
  std::vector<BetaSet::Element> out;
  out.reserve(set.size());
  for (auto x : set) {
    if (x != h) {
      out.push_back(x);
    }
  }
  out.insert(std::upper_bound(out.begin(), out.end(), h - t, std::greater<>()), h - t);
  return BetaSet(BetaSet::Sorted{}, std::move(out));
}

std::vector<BetaSet::Element> removable_hooks(const BetaSet& set, std::int64_t t) {
  std::vector<BetaSet::Element> out;
  for (auto h : set) {
    if (h >= t && !set.contains(h - t)) {
      out.push_back(h);
    }
  }
  return out;
}

Partition t_core(const Partition& lambda, std::int64_t t) {
  if (t < 1) {
    throw DomainError("t_core: t must be positive");
  }
  BetaSet set = first_column_hooks(lambda);
  while (true) {
    const auto removable = removable_hooks(set, t);
    if (removable.empty()) {
      break;
    }
    set = remove_hook(set, removable.front(), t);
  }
  return to_partition(set);
}

std::int64_t parity_gap(const BetaSet& set) {
  std::int64_t gap = 0;
  for (auto x : set) {
    gap += (x % 2 == 0) ? 1 : -1;
  }
  return gap;
}

std::string to_string(const BetaSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(set[i]);
  }
  return out + "}";
}

BetaSet parse_beta_set(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ValidationError("beta-set text must be wrapped in braces: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<BetaSet::Element> elements;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto field = text.substr(0, comma);
    BetaSet::Element value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ValidationError("cannot parse beta-set element '" + std::string(field) + "'");
    }
    elements.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
    if (text.empty()) {
      throw ValidationError("trailing comma in beta-set text");
    }
  }
  return BetaSet(std::move(elements));
}

std::ostream& operator<<(std::ostream& os, const BetaSet& set) { return os << to_string(set); }

}  // namespace dimlab
