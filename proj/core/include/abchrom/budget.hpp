#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "abchrom/error.hpp"

namespace abchrom {

/// Counts search nodes against a hard limit; exhausting it throws BudgetExceeded.
class SearchBudget {
 public:
  static constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

  explicit SearchBudget(std::uint64_t limit = unlimited, std::string what = "search") noexcept
      : limit_(limit), what_(std::move(what)) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) throw BudgetExceeded(what_ + " budget exceeded", limit_);
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string what_;
};

}  // namespace abchrom
