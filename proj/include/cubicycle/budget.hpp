#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "cubicycle/error.hpp"

namespace cubicycle {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Node-expansion cap shared by every search that charges it. Safe to share
/// across threads. Exceeding the cap throws BudgetExceeded; since each search
/// expands a deterministic number of nodes, whether the cap is hit does not
/// depend on scheduling.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  void charge(std::uint64_t n = 1) {
    if (used_.fetch_add(n, std::memory_order_relaxed) + n > limit_)
      throw BudgetExceeded("node-expansion budget of " + std::to_string(limit_) + " exceeded");
  }

  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace cubicycle
