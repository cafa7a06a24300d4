#ifndef BRAIDNORM_WORD_PROBLEM_HPP
#define BRAIDNORM_WORD_PROBLEM_HPP

#include <cstdint>
#include <stdexcept>

#include "braidnorm/braid_word.hpp"

namespace braidnorm {

/// Thrown when the handle-reduction step budget is exhausted. Never a wrong
/// answer: callers either retry with a bigger budget or report the failure.
class budget_exhausted_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReductionBudget {
  /// Maximum number of handle reductions before giving up.
  std::uint64_t max_steps = 8'000'000;
};

/// Dehornoy handle reduction of w: repeatedly rewrites the leftmost-closing
/// handle until none remains. The result is handle-free and represents the
/// same element; it is empty iff w is trivial.
BraidWord handle_reduce(const BraidWord& w, ReductionBudget budget = {});

/// Exact word problem for B_inf. Fast negative pre-filters (exponent sum,
/// underlying permutation) short-circuit most inputs before handle reduction.
bool is_trivial(const BraidWord& w, ReductionBudget budget = {});

/// u and v represent the same element, decided as is_trivial(u v^{-1}).
bool equal_elements(const BraidWord& u, const BraidWord& v,
                    ReductionBudget budget = {});

}  // namespace braidnorm

#endif
