#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "qcompile/dfo.hpp"

namespace qcompile::detail {

struct BudgetExhausted {};

/// Negates the user objective (the public API maximizes, the methods
/// minimize), counts evaluations, records the trace, and throws
/// BudgetExhausted once the evaluation budget is spent.
class BudgetedObjective {
 public:
  BudgetedObjective(const Objective& objective, std::int64_t budget)
      : objective_(objective), budget_(budget) {}

  double operator()(const std::vector<double>& x) {
    if (count_ >= budget_) throw BudgetExhausted{};
    const double value = objective_(x);
    ++count_;
    if (value > best_value_) {
      best_value_ = value;
      best_x_ = x;
    }
    trace_.push_back({count_, value, best_value_});
    return -value;
  }

  const std::vector<double>& best_x() const { return best_x_; }
  std::int64_t count() const { return count_; }

  void finish(DfoResult& result) {
    result.best_x = best_x_;
    result.best_value = best_value_;
    result.trace = std::move(trace_);
    result.evals = count_;
  }

 private:
  const Objective& objective_;
  std::int64_t budget_;
  std::int64_t count_ = 0;
  double best_value_ = -std::numeric_limits<double>::infinity();
  std::vector<double> best_x_;
  std::vector<DfoTraceRow> trace_;
};

}  // namespace qcompile::detail
