#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

namespace hurwitz::detail {

// Process-wide memo table. Readers share the lock; a miss computes outside
// the lock and inserts under the exclusive lock (first writer wins, all
// writers compute the same pure value).
template <typename Key, typename Value>
class Memo {
 public:
  std::optional<Value> find(const Key& k) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(k);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  template <typename Compute>
  Value get(const Key& k, Compute&& compute) {
    if (auto hit = find(k)) return *hit;
    Value v = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(k, std::move(v)).first->second;
  }

  size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace hurwitz::detail
