#include "dimlab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "dimlab/error.hpp"

namespace dimlab {

namespace {

void validate(const std::vector<Partition::Part>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) {
      throw ValidationError("partition part " + std::to_string(i + 1) + " is not positive");
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw ValidationError("partition parts increase at position " + std::to_string(i + 1));
    }
  }
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  validate(parts_);
  size_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Partition::Partition(std::initializer_list<Part> parts)
    : Partition(std::vector<Part>(parts)) {}

Partition::Partition(Trusted, std::vector<Part> parts) : parts_(std::move(parts)) {
  size_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Partition make_partition(std::vector<Partition::Part> parts) {
  return Partition(std::move(parts));
}

Partition make_partition_unchecked(std::vector<Partition::Part> parts) {
  return Partition(Partition::Trusted{}, std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  const auto& rows = lambda.parts();
  if (rows.empty()) {
    return {};
  }
  std::vector<Partition::Part> cols(static_cast<std::size_t>(rows.front()), 0);
  // Column j has as many cells as there are rows longer than j.
  std::size_t len = rows.size();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    while (len > 0 && rows[len - 1] <= static_cast<Partition::Part>(j)) {
      --len;
    }
    cols[j] = static_cast<Partition::Part>(len);
  }
  return Partition(Partition::Trusted{}, std::move(cols));
}

std::int64_t hook_length(const Partition& lambda, std::int64_t row, std::int64_t col) {
  if (row < 1 || col < 1 || row > static_cast<std::int64_t>(lambda.length()) ||
      col > lambda.row(static_cast<std::size_t>(row - 1))) {
    throw RangeError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                     ") is outside the diagram of " + to_string(lambda));
  }
  const std::int64_t arm = lambda.row(static_cast<std::size_t>(row - 1)) - col;
  std::int64_t leg = 0;
  for (auto i = static_cast<std::size_t>(row); i < lambda.length() && lambda.row(i) >= col; ++i) {
    ++leg;
  }
  return arm + leg + 1;
}

std::vector<std::int64_t> all_hook_lengths(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  std::vector<std::int64_t> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const auto row_len = lambda.row(i);
    for (Partition::Part j = 0; j < row_len; ++j) {
      const auto col_len = cols.row(static_cast<std::size_t>(j));
      hooks.push_back((row_len - j - 1) + (col_len - static_cast<std::int64_t>(i) - 1) + 1);
    }
  }
  return hooks;
}

bool is_hook_partition(const Partition& lambda) {
  const auto& p = lambda.parts();
  return !p.empty() && std::all_of(p.begin() + 1, p.end(), [](auto x) { return x == 1; });
}

std::string to_string(const Partition& lambda) {
  if (lambda.empty()) {
    return "-";
  }
  std::string out;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(lambda.row(i));
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "-" || text == "()" || text.empty()) {
    return {};
  }
  if (text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Partition::Part> parts;
  while (true) {
    const auto comma = text.find(',');
    const auto field = trim(text.substr(0, comma));
    Partition::Part value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ValidationError("cannot parse partition part '" + std::string(field) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
  return os << to_string(lambda);
}

PartitionStream::PartitionStream(std::int64_t n) : PartitionStream(n, n) {}

PartitionStream::PartitionStream(std::int64_t n, std::int64_t max_part) {
  if (n < 0) {
    throw DomainError("cannot enumerate partitions of a negative number");
  }
  if (n > 0 && max_part <= 0) {
    done_ = true;
    return;
  }
  // Greedy start: the reverse-lexicographically largest partition with parts <= max_part.
  for (std::int64_t rest = n; rest > 0; rest -= std::min(rest, max_part)) {
    parts_.push_back(std::min(rest, max_part));
  }
}

bool PartitionStream::advance() {
  // Rightmost part exceeding 1; everything after it is a run of 1s.
  std::size_t i = parts_.size();
  while (i > 0 && parts_[i - 1] == 1) {
    --i;
  }
  if (i == 0) {
    return false;
  }
  --i;
  std::int64_t rest = static_cast<std::int64_t>(parts_.size() - i - 1) + 1;
  const std::int64_t cap = --parts_[i];
  parts_.resize(i + 1);
  while (rest > 0) {
    const std::int64_t piece = std::min(rest, cap);
    parts_.push_back(piece);
    rest -= piece;
  }
  return true;
}

std::optional<Partition> PartitionStream::next() {
  if (done_) {
    return std::nullopt;
  }
  if (!started_) {
    started_ = true;
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Partition(Partition::Trusted{}, parts_);
}

PartitionStream enumerate_partitions(std::int64_t n) {
  if (n > kMaxEnumerable) {
    throw SizeError("enumerate_partitions: n = " + std::to_string(n) +
                    " exceeds the enumeration bound " + std::to_string(kMaxEnumerable));
  }
  return PartitionStream(n);
}

}  // namespace dimlab
