#pragma once

#include <string>

#include "sectio/errors.hpp"

namespace sectio {

inline constexpr long long kDefaultHomSearchBudget = 10'000'000;
inline constexpr long long kDefaultCoverBudget = 100'000'000;
inline constexpr long long kDefaultCoboundaryBudget = 10'000'000;

// Node counter for backtracking searches.  Exhausting the budget is a hard
// error: an "absent" answer is only sound if the search space was exhausted,
// so we never silently truncate.
struct SearchBudget {
  long long limit;
  long long used = 0;

  explicit SearchBudget(long long limit) : limit(limit) {}

  void tick(const char* what) {
    if (++used > limit)
      throw SearchBudgetExceeded(std::string(what) + ": search budget of " +
                                 std::to_string(limit) + " nodes exceeded");
  }
};

}  // namespace sectio
