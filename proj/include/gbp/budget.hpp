#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gbp {

// Thrown when a search exhausts its node budget. Callers that want an
// explicit "budget exceeded" outcome catch this; nothing ever degrades
// into a silent wrong answer.
struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t default_budget_nodes = 50'000'000;

// Node-count effort budget, shared across nested searches. Budgets are
// node counts rather than wall time so runs are reproducible.
class budget {
 public:
  explicit budget(std::uint64_t limit = default_budget_nodes)
      : remaining_(limit), limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    if (remaining_ < nodes) {
      remaining_ = 0;
      throw budget_exceeded("search budget exceeded (" + std::to_string(limit_) + " nodes)");
    }
    remaining_ -= nodes;
  }

  std::uint64_t remaining() const { return remaining_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return limit_ - remaining_; }

 private:
  std::uint64_t remaining_;
  std::uint64_t limit_;
};

}  // namespace gbp
