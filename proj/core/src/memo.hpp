#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace dimlab::detail {

// Process-wide cache keyed on n. Readers share the lock; a value is computed outside
// the lock and the first writer wins, so concurrent callers always agree.
template <class Key, class Value>
class Memo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Value store(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    if (auto hit = find(key)) {
      return *hit;
    }
    return store(key, compute());
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value> table_;
};

}  // namespace dimlab::detail
