#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace hurwitz::detail {

// Process-lifetime cache keyed by degree n. Each value is built exactly once;
// concurrent callers for the same n block until construction finishes.
template <typename T>
class DegreeCache {
 public:
  template <typename Build>
  const T& get(int n, Build&& build) {
    Slot* slot = nullptr;
    {
      std::lock_guard lock(mutex_);
      auto& entry = slots_[n];
      if (!entry) entry = std::make_unique<Slot>();
      slot = entry.get();
    }
    std::call_once(slot->once, [&] { slot->value = std::make_unique<const T>(build(n)); });
    return *slot->value;
  }

 private:
  struct Slot {
    std::once_flag once;
    std::unique_ptr<const T> value;
  };
  std::mutex mutex_;
  std::map<int, std::unique_ptr<Slot>> slots_;
};

}  // namespace hurwitz::detail
