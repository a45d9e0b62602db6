#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dimlab {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// Immutable once built; every constructor validates.
class Partition {
 public:
  using Part = std::int64_t;

  Partition() = default;
  /// Throws ValidationError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  /// |lambda|, the sum of the parts.
  std::int64_t size() const { return size_; }
  /// Number of rows.
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// 0-based row access; rows past the end read as 0.
  Part row(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  struct Trusted {};
  Partition(Trusted, std::vector<Part> parts);

  friend class PartitionStream;
  friend Partition conjugate(const Partition&);
  friend Partition make_partition_unchecked(std::vector<Part> parts);

  std::vector<Part> parts_;
  std::int64_t size_ = 0;
};

/// Validating factory; same contract as the constructor.
Partition make_partition(std::vector<Partition::Part> parts);
/// For callers that already guarantee the invariant (beta-set decoding, generators).
Partition make_partition_unchecked(std::vector<Partition::Part> parts);

/// Transpose of the Ferrers diagram.
Partition conjugate(const Partition& lambda);

/// Hook length at the 1-based cell (row, col). Throws RangeError outside the diagram.
std::int64_t hook_length(const Partition& lambda, std::int64_t row, std::int64_t col);

/// Every hook length, row-major over the cells.
std::vector<std::int64_t> all_hook_lengths(const Partition& lambda);

/// (a+1, 1, ..., 1) or (n). The empty partition is not a hook.
bool is_hook_partition(const Partition& lambda);

/// Text form "4,3,3,1"; the empty partition renders as "-".
std::string to_string(const Partition& lambda);
/// Inverse of to_string. Whitespace around parts is ignored.
Partition parse_partition(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Partition& lambda);

/// Largest n accepted by enumerate_partitions (p(80) is about 1.6e7).
inline constexpr std::int64_t kMaxEnumerable = 80;

/// Partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1,...,1).
/// Optionally restricted to parts no larger than max_part.
class PartitionStream {
 public:
  explicit PartitionStream(std::int64_t n);
  PartitionStream(std::int64_t n, std::int64_t max_part);

  /// Next partition, or nullopt once exhausted.
  std::optional<Partition> next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(PartitionStream* stream) : stream_(stream) { ++*this; }

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
    PartitionStream* stream_ = nullptr;
    std::optional<Partition> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  bool advance();

  std::vector<Partition::Part> parts_;
  bool started_ = false;
  bool done_ = false;
};

/// Throws SizeError for n > kMaxEnumerable, DomainError for n < 0.
PartitionStream enumerate_partitions(std::int64_t n);

}  // namespace dimlab
