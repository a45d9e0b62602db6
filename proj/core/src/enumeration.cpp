#include "dimlab/enumeration.hpp"

#include <atomic>
#include <bit>
#include <thread>

#include "dimlab/binary_arith.hpp"
#include "dimlab/dimension.hpp"
#include "dimlab/error.hpp"
#include "memo.hpp"

namespace dimlab {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t narrow(u128 value, const char* what) {
  if (value > static_cast<u128>(UINT64_MAX)) {
    throw SizeError(std::string(what) + ": result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

int top_bit(std::uint64_t n) { return 63 - std::countl_zero(n); }

detail::Memo<std::uint64_t, DeltaResult>& delta_memo() {
  static detail::Memo<std::uint64_t, DeltaResult> memo;
  return memo;
}

detail::Memo<std::uint64_t, std::uint64_t>& a2_memo() {
  static detail::Memo<std::uint64_t, std::uint64_t> memo;
  return memo;
}

detail::Memo<std::int64_t, CountReport>& oracle_memo() {
  static detail::Memo<std::int64_t, CountReport> memo;
  return memo;
}

DeltaResult compute_delta(std::uint64_t n, std::int64_t oracle_bound) {
  using enum DeltaRule;
  if (n == 1) return {1, DeltaStatus::exact_formula, base_case};
  if (n == 2) return {2, DeltaStatus::exact_formula, base_case};
  if (std::has_single_bit(n)) return {0, DeltaStatus::exact_formula, base_case};

  const int r = top_bit(n);
  const std::uint64_t half = std::uint64_t{1} << (r - 1);
  const std::uint64_t m = n - (std::uint64_t{1} << r);

  if (m == half) {
    const std::int64_t value = n == 3 ? 2 : n == 6 ? 8 : 0;
    return {value, DeltaStatus::exact_formula, eleven_prefix};
  }
  if (is_sparse(n)) {
    // nu(n) <= 32 for a sparse 64-bit n, so 4^(nu - 1) fits.
    const std::int64_t value = n % 2 == 0 ? 0 : std::int64_t{1} << (2 * (digit_sum(n) - 1));
    return {value, DeltaStatus::exact_formula, sparse};
  }
  if (m < half) {
    if (m % 2 == 0) {
      return {0, DeltaStatus::exact_formula, recursion};
    }
    const DeltaResult inner = delta(m, oracle_bound);
    std::int64_t value = 0;
    if (__builtin_mul_overflow(inner.value, std::int64_t{4}, &value)) {
      throw SizeError("delta: value for n = " + std::to_string(n) + " overflows");
    }
    return {value, inner.status, recursion};
  }
  if (n > static_cast<std::uint64_t>(oracle_bound)) {
    throw SizeError("delta: n = " + std::to_string(n) + " = 2^" + std::to_string(r) + " + " +
                    std::to_string(m) + " has 2^(R-1) < m < 2^R, no closed form, and exceeds " +
                    "the oracle bound " + std::to_string(oracle_bound));
  }
  const CountReport counted =
      oracle_counts(static_cast<std::int64_t>(n), OracleOptions{oracle_bound, 0});
  return {counted.delta, DeltaStatus::oracle_fallback, oracle};
}

// The 2^R-parents of `core`, with R = 0 allowed for the empty core.
std::vector<Partition> parents_of(const Partition& core, int r_power) {
  if (r_power == 0) {
    return {make_partition_unchecked({1})};
  }
  std::vector<Partition> out;
  for (auto& record : all_parents(core, r_power)) {
    out.push_back(std::move(record.parent));
  }
  return out;
}

struct Tally {
  std::uint64_t a1 = 0;
  std::uint64_t a2 = 0;
  std::uint64_t a3 = 0;

  void add(const Partition& lambda) {
    const DimClass cls = dim_class(lambda);
    if (cls.v2 == 0) {
      ++(cls.od.is_plus() ? a1 : a3);
    } else if (cls.v2 == 1) {
      ++a2;
    }
  }
  Tally& operator+=(const Tally& other) {
    a1 += other.a1;
    a2 += other.a2;
    a3 += other.a3;
    return *this;
  }
};

CountReport compute_oracle(std::int64_t n, unsigned threads) {
  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

  // Work unit: all partitions whose largest part is `largest`.
  std::atomic<std::int64_t> next_largest{1};
  std::vector<Tally> partial(threads);
  auto worker = [&](Tally& tally) {
    for (std::int64_t largest = next_largest++; largest <= n; largest = next_largest++) {
      PartitionStream rest(n - largest, largest);
      while (auto tail = rest.next()) {
        std::vector<Partition::Part> parts;
        parts.reserve(tail->length() + 1);
        parts.push_back(largest);
        parts.insert(parts.end(), tail->parts().begin(), tail->parts().end());
        tally.add(make_partition_unchecked(std::move(parts)));
      }
    }
  };
  if (threads == 1) {
    worker(partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker, std::ref(partial[t]));
    }
  }

  Tally total;
  for (const auto& t : partial) {
    total += t;
  }
  CountReport report;
  report.n = n;
  report.a1 = total.a1;
  report.a2 = total.a2;
  report.a3 = total.a3;
  report.a = total.a1 + total.a3;
  report.delta = static_cast<std::int64_t>(total.a1) - static_cast<std::int64_t>(total.a3);
  report.m4 = report.a + report.a2;
  report.sources = {Source::oracle, Source::oracle, Source::oracle,
                    Source::oracle, Source::oracle, Source::oracle};
  return report;
}

}  // namespace

std::uint64_t count_odd(std::uint64_t n) {
  int exponent = 0;
  for (std::uint64_t rest = n; rest != 0; rest &= rest - 1) {
    exponent += std::countr_zero(rest);
  }
  if (exponent >= 64) {
    throw SizeError("count_odd: 2^" + std::to_string(exponent) + " does not fit 64 bits (n = " +
                    std::to_string(n) + ")");
  }
  return std::uint64_t{1} << exponent;
}

const char* to_string(DeltaStatus status) {
  return status == DeltaStatus::exact_formula ? "exact-formula" : "oracle-fallback";
}

const char* to_string(DeltaRule rule) {
  switch (rule) {
    case DeltaRule::base_case:
      return "base-case";
    case DeltaRule::eleven_prefix:
      return "eleven-prefix";
    case DeltaRule::sparse:
      return "sparse";
    case DeltaRule::recursion:
      return "recursion";
    case DeltaRule::oracle:
      return "oracle";
  }
  return "oracle";
}

DeltaResult delta(std::uint64_t n, std::int64_t oracle_bound) {
  if (n == 0) {
    throw DomainError("delta: n must be positive");
  }
  if (auto hit = delta_memo().find(n)) {
    return *hit;
  }
  return delta_memo().store(n, compute_delta(n, oracle_bound));
}

OddSplit a1_a3(std::uint64_t n, std::int64_t oracle_bound) {
  const auto d = delta(n, oracle_bound);
  const u128 a = count_odd(n);
  const auto magnitude = static_cast<u128>(d.value < 0 ? -d.value : d.value);
  if (magnitude > a || (a + magnitude) % 2 != 0) {
    throw ConsistencyError("a1_a3: a(" + std::to_string(n) + ") = " +
                           std::to_string(static_cast<std::uint64_t>(a)) +
                           " and delta = " + std::to_string(d.value) + " disagree in parity");
  }
  const u128 a1 = d.value >= 0 ? (a + magnitude) / 2 : (a - magnitude) / 2;
  return {static_cast<std::uint64_t>(a1), static_cast<std::uint64_t>(a - a1), d.status};
}

std::optional<OddSplit> a1_a3_by_top_bit(std::uint64_t n, std::int64_t oracle_bound) {
  if (n < 2 || std::has_single_bit(n)) {
    return std::nullopt;
  }
  const int r = top_bit(n);
  const std::uint64_t half = std::uint64_t{1} << (r - 1);
  const std::uint64_t m = n - (std::uint64_t{1} << r);
  if (m >= half) {
    return std::nullopt;
  }
  const std::uint64_t a = count_odd(n);
  if (n % 2 == 0) {
    return OddSplit{a / 2, a / 2, DeltaStatus::exact_formula};
  }
  const OddSplit inner = a1_a3(m, oracle_bound);
  const u128 spill = static_cast<u128>(half - 2) * count_odd(m);
  return OddSplit{narrow(4 * static_cast<u128>(inner.a1) + spill, "a1_a3_by_top_bit"),
                  narrow(4 * static_cast<u128>(inner.a3) + spill, "a1_a3_by_top_bit"),
                  inner.status};
}

std::uint64_t a2(std::uint64_t n) {
  if (n < 2) {
    return 0;
  }
  if (auto hit = a2_memo().find(n)) {
    return *hit;
  }
  const int r = top_bit(n);
  if (r > 42) {
    throw SizeError("a2: n = " + std::to_string(n) + " is too large");
  }
  const u128 half = u128{1} << (r - 1);
  const std::uint64_t m = n - (std::uint64_t{1} << r);
  const u128 scaled = (u128{1} << r) * a2(m);
  u128 extra = 0;
  if (m < half) {
    extra = half * (half - 1) / 2 * count_odd(m);
  } else {
    // Exact division: the top bit of m is R - 1.
    const u128 weight3 = half * (half - 1) * (half - 2) / 6 + half;
    extra = weight3 * (count_odd(m) / static_cast<std::uint64_t>(half));
  }
  return a2_memo().store(n, narrow(scaled + extra, "a2"));
}

std::uint64_t a2_sparse(std::uint64_t n) {
  if (!is_sparse(n)) {
    throw DomainError("a2_sparse: " + std::to_string(n) + " is not sparse");
  }
  if (n % 2 == 1) {
    return n == 1 ? 0 : a2_sparse(n - 1);
  }
  const u128 product =
      static_cast<u128>(count_odd(n)) * (n - 2 * static_cast<std::uint64_t>(digit_sum(n)));
  return narrow(product / 8, "a2_sparse");
}

std::uint64_t m4(std::uint64_t n) {
  return narrow(static_cast<u128>(count_odd(n)) + a2(n), "m4");
}

OddPartitionStream::OddPartitionStream(std::uint64_t n) {
  for (std::uint64_t rest = n; rest != 0; rest &= rest - 1) {
    digits_.push_back(std::countr_zero(rest));
  }
  levels_.resize(digits_.size());
}

void OddPartitionStream::descend() {
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (!levels_[j].options.empty()) {
      continue;
    }
    const Partition core = j == 0 ? Partition{} : levels_[j - 1].options[levels_[j - 1].index];
    levels_[j] = {parents_of(core, digits_[j]), 0};
  }
}

std::optional<Partition> OddPartitionStream::next() {
  if (done_) {
    return std::nullopt;
  }
  if (!started_) {
    started_ = true;
    if (levels_.empty()) {
      done_ = true;
      return Partition{};
    }
    descend();
    return levels_.back().options.front();
  }
  for (std::size_t j = levels_.size(); j-- > 0;) {
    if (++levels_[j].index < levels_[j].options.size()) {
      for (std::size_t k = j + 1; k < levels_.size(); ++k) {
        levels_[k] = {};
      }
      descend();
      return levels_.back().options[levels_.back().index];
    }
  }
  done_ = true;
  return std::nullopt;
}

OddPartitionStream enumerate_odd_partitions(std::uint64_t n) { return OddPartitionStream(n); }

const char* to_string(Source source) { return source == Source::formula ? "formula" : "oracle"; }

std::string CountReport::source_label() const {
  const Source all[] = {sources.a, sources.a1, sources.a2, sources.a3, sources.delta, sources.m4};
  bool any_formula = false;
  bool any_oracle = false;
  for (auto s : all) {
    (s == Source::formula ? any_formula : any_oracle) = true;
  }
  if (any_formula && any_oracle) return "mixed";
  return any_oracle ? "oracle" : "formula";
}

CountReport oracle_counts(std::int64_t n, const OracleOptions& options) {
  if (n < 1) {
    throw DomainError("oracle_counts: n must be positive");
  }
  if (n > options.bound) {
    throw SizeError("oracle_counts: n = " + std::to_string(n) + " exceeds the oracle bound " +
                    std::to_string(options.bound));
  }
  if (n > kMaxEnumerable) {
    throw SizeError("oracle_counts: n = " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxEnumerable));
  }
  if (auto hit = oracle_memo().find(n)) {
    return *hit;
  }
  return oracle_memo().store(n, compute_oracle(n, options.threads));
}

CountReport count_report(std::uint64_t n, std::int64_t oracle_bound) {
  if (n == 0) {
    throw DomainError("count_report: n must be positive");
  }
  const OddSplit split = a1_a3(n, oracle_bound);
  CountReport report;
  report.n = static_cast<std::int64_t>(n);
  report.a = count_odd(n);
  report.a1 = split.a1;
  report.a3 = split.a3;
  report.delta = static_cast<std::int64_t>(split.a1) - static_cast<std::int64_t>(split.a3);
  report.a2 = a2(n);
  report.m4 = m4(n);
  if (split.status == DeltaStatus::oracle_fallback) {
    report.sources.delta = report.sources.a1 = report.sources.a3 = Source::oracle;
  }
  return report;
}

}  // namespace dimlab
