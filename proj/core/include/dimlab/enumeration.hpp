#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "dimlab/parents.hpp"
#include "dimlab/partition.hpp"

namespace dimlab {

/// Exhaustive enumeration is capped here unless the caller raises it.
inline constexpr std::int64_t kDefaultOracleBound = 40;

/// Number of odd-dimensional partitions of n: 2^(sum of the bit positions of n).
/// count_odd(0) = 1. Throws SizeError if the exponent reaches 64.
std::uint64_t count_odd(std::uint64_t n);

enum class DeltaStatus { exact_formula, oracle_fallback };
const char* to_string(DeltaStatus status);

/// Which rule produced a delta value.
enum class DeltaRule {
  base_case,       ///< n = 1, 2 or a power of two
  eleven_prefix,   ///< n = 2^R + 2^(R-1)
  sparse,          ///< no two adjacent 1-bits
  recursion,       ///< n = 2^R + m with 0 < m < 2^(R-1)
  oracle,          ///< exhaustive count
};
const char* to_string(DeltaRule rule);

struct DeltaResult {
  std::int64_t value = 0;
  DeltaStatus status = DeltaStatus::exact_formula;
  DeltaRule rule = DeltaRule::base_case;
  friend bool operator==(const DeltaResult&, const DeltaResult&) = default;
};

/// a1(n) - a3(n). Proven cases come from closed forms; the remaining case
/// 2^(R-1) < m < 2^R (somewhere down the recursion) is counted exhaustively and
/// reported as oracle_fallback. Throws SizeError if that count would exceed
/// oracle_bound, DomainError for n = 0.
DeltaResult delta(std::uint64_t n, std::int64_t oracle_bound = kDefaultOracleBound);

struct OddSplit {
  std::uint64_t a1 = 0;
  std::uint64_t a3 = 0;
  DeltaStatus status = DeltaStatus::exact_formula;
  friend bool operator==(const OddSplit&, const OddSplit&) = default;
};

/// (a + delta) / 2 and (a - delta) / 2. ConsistencyError if the parity is off.
OddSplit a1_a3(std::uint64_t n, std::int64_t oracle_bound = kDefaultOracleBound);

/// Direct a1/a3 recursion for n = 2^R + m, 0 < m < 2^(R-1):
/// even n splits a(n) evenly; odd n gives 4 a_i(m) + (2^(R-1) - 2) a(m).
/// nullopt when n is not of that shape.
std::optional<OddSplit> a1_a3_by_top_bit(std::uint64_t n,
                                         std::int64_t oracle_bound = kDefaultOracleBound);

/// Partitions with f = 2 mod 4, by recursion on the top bit. a2(0) = a2(1) = 0.
/// Throws SizeError on overflow.
std::uint64_t a2(std::uint64_t n);

/// The closed form for sparse n: a(n)(n - 2 nu(n))/8 when even, a2(n - 1) when odd.
/// Throws DomainError if n is not sparse.
std::uint64_t a2_sparse(std::uint64_t n);

/// Partitions with f not divisible by 4: a(n) + a2(n).
std::uint64_t m4(std::uint64_t n);

/// Odd-dimensional partitions of n, generated as chains of parents along the binary
/// digits of n, largest digit outermost. Never visits an even-dimensional partition.
class OddPartitionStream {
 public:
  explicit OddPartitionStream(std::uint64_t n);

  std::optional<Partition> next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(OddPartitionStream* stream) : stream_(stream) { ++*this; }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    OddPartitionStream* stream_ = nullptr;
    std::optional<Partition> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  struct Level {
    std::vector<Partition> options;
    std::size_t index = 0;
  };

  void descend();

  std::vector<int> digits_;    // bit positions, smallest first
  std::vector<Level> levels_;  // levels_[i] holds parents for digits_[i]
  bool started_ = false;
  bool done_ = false;
};

OddPartitionStream enumerate_odd_partitions(std::uint64_t n);

enum class Source { formula, oracle };
const char* to_string(Source source);

struct CountReport {
  std::int64_t n = 0;
  std::uint64_t a = 0;
  std::uint64_t a1 = 0;
  std::uint64_t a2 = 0;
  std::uint64_t a3 = 0;
  std::int64_t delta = 0;
  std::uint64_t m4 = 0;

  struct Sources {
    Source a = Source::formula;
    Source a1 = Source::formula;
    Source a2 = Source::formula;
    Source a3 = Source::formula;
    Source delta = Source::formula;
    Source m4 = Source::formula;
    friend bool operator==(const Sources&, const Sources&) = default;
  } sources;

  /// "formula", "oracle" or "mixed".
  std::string source_label() const;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

struct OracleOptions {
  std::int64_t bound = kDefaultOracleBound;
  unsigned threads = 0;  ///< 0 picks the hardware concurrency
};

/// Classifies every partition of n. Deterministic for any thread count.
/// Throws SizeError above the bound, DomainError for n < 1.
CountReport oracle_counts(std::int64_t n, const OracleOptions& options = {});

/// Formula-first report. delta, a1 and a3 carry source oracle when delta fell back.
CountReport count_report(std::uint64_t n, std::int64_t oracle_bound = kDefaultOracleBound);

}  // namespace dimlab
