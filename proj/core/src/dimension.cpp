#include "dimlab/dimension.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "dimlab/beta_set.hpp"
#include "dimlab/error.hpp"

namespace dimlab {

Dimension dim_exact(const Partition& lambda, std::int64_t bound) {
  const std::int64_t n = lambda.size();
  if (n > bound) {
    throw SizeError("dim_exact: |lambda| = " + std::to_string(n) + " exceeds the exact bound " +
                    std::to_string(bound));
  }
  if (n <= 1) {
    return 1;
  }
  const auto size = static_cast<std::size_t>(n) + 1;
  // exponent[k]: multiplicity of k in n! / prod hooks, before splitting composites.
  std::vector<std::int64_t> exponent(size, 0);
  for (std::size_t k = 2; k < size; ++k) {
    exponent[k] = 1;
  }
  for (auto h : all_hook_lengths(lambda)) {
    if (h >= 2) {
      --exponent[static_cast<std::size_t>(h)];
    }
  }
  std::vector<std::size_t> smallest_factor(size, 0);
  for (std::size_t p = 2; p < size; ++p) {
    if (smallest_factor[p] == 0) {
      for (std::size_t m = p; m < size; m += p) {
        if (smallest_factor[m] == 0) smallest_factor[m] = p;
      }
    }
  }
  for (std::size_t k = size - 1; k >= 2; --k) {
    const std::size_t p = smallest_factor[k];
    if (p != k && exponent[k] != 0) {
      exponent[p] += exponent[k];
      exponent[k / p] += exponent[k];
      exponent[k] = 0;
    }
  }
  Dimension result = 1;
  for (std::size_t p = 2; p < size; ++p) {
    if (exponent[p] < 0) {
      throw ConsistencyError("dim_exact: negative prime exponent for " + to_string(lambda));
    }
    for (std::int64_t e = 0; e < exponent[p]; ++e) {
      if (__builtin_mul_overflow(result, static_cast<Dimension>(p), &result)) {
        throw SizeError("dim_exact: f^lambda for " + to_string(lambda) +
                        " overflows the 128-bit accumulator (bound " + std::to_string(bound) + ")");
      }
    }
  }
  return result;
}

std::string to_string(Dimension value) {
  if (value == 0) {
    return "0";
  }
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

DimClass dim_class_from_hooks(const Partition& lambda) {
  const auto n = static_cast<std::uint64_t>(lambda.size());
  std::int64_t v2 = static_cast<std::int64_t>(valuation2_factorial(n));
  OdSign sign = od_factorial(n);
  for (auto h : all_hook_lengths(lambda)) {
    const auto hook = static_cast<std::uint64_t>(h);
    v2 -= valuation2(hook);
    sign *= od(hook);
  }
  return {static_cast<int>(v2), sign};
}

DimClass dim_class_from_beta_set(const Partition& lambda) {
  const auto n = static_cast<std::uint64_t>(lambda.size());
  const BetaSet hooks = first_column_hooks(lambda);
  std::int64_t v2 = static_cast<std::int64_t>(valuation2_factorial(n));
  OdSign sign = od_factorial(n);
  // od(m!)^-1 == od(m!), so division and multiplication coincide for signs.
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    const auto hi = static_cast<std::uint64_t>(hooks[i]);
    v2 -= static_cast<std::int64_t>(valuation2_factorial(hi));
    sign *= od_factorial(hi);
    for (std::size_t j = i + 1; j < hooks.size(); ++j) {
      const auto diff = hi - static_cast<std::uint64_t>(hooks[j]);
      v2 += valuation2(diff);
      sign *= od(diff);
    }
  }
  return {static_cast<int>(v2), sign};
}

DimClass dim_class(const Partition& lambda) {
  const DimClass result = dim_class_from_hooks(lambda);
  assert(result == dim_class_from_beta_set(lambda));
  return result;
}

}  // namespace dimlab
