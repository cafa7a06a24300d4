#include "braidnorm/word_problem.hpp"

#include <cstdlib>
#include <vector>

#include "braidnorm/permutation.hpp"

namespace braidnorm {

namespace {

// A handle is a factor w[r..p] = s_i^e ... s_i^{-e} whose interior letters
// all have index > i. Reducing the leftmost-closing handle first guarantees
// the interior carries at most one sign of s_{i+1}, the classical condition
// under which handle reduction terminates.
struct Handle {
  std::size_t r, p;
};

bool find_handle(const std::vector<int>& w, std::size_t from, Handle& out) {
  for (std::size_t p = from; p < w.size(); ++p) {
    const int i = std::abs(w[p]);
    for (std::size_t r = p; r-- > 0;) {
      const int j = std::abs(w[r]);
      if (j < i) break;
      if (j == i) {
        if (w[r] == -w[p]) {
          out = {r, p};
          return true;
        }
        break;
      }
    }
  }
  return false;
}

// Replace w[r..p] by the rewritten interior: s_{i+1}^d becomes
// s_{i+1}^{-e} s_i^d s_{i+1}^e, higher letters pass through. Free-reduces the
// splice against the prefix and returns the lowest touched index.
std::size_t reduce_handle(std::vector<int>& w, const Handle& h) {
  const int v = w[static_cast<std::size_t>(h.r)];
  const int i = std::abs(v);
  const int e = v > 0 ? 1 : -1;

  std::vector<int> repl;
  repl.reserve(3 * (h.p - h.r));
  for (std::size_t t = h.r + 1; t < h.p; ++t) {
    const int l = w[t];
    const int j = std::abs(l);
    if (j == i + 1) {
      const int d = l > 0 ? 1 : -1;
      repl.push_back(-e * (i + 1));
      repl.push_back(d * i);
      repl.push_back(e * (i + 1));
    } else {
      repl.push_back(l);
    }
  }

  std::vector<int> out;
  out.reserve(w.size() + repl.size());
  out.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h.r));
  std::size_t lowest = out.size();
  auto push = [&](int l) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
      if (out.size() < lowest) lowest = out.size();
    } else {
      out.push_back(l);
    }
  };
  for (int l : repl) push(l);
  for (std::size_t t = h.p + 1; t < w.size(); ++t) push(w[t]);
  w = std::move(out);
  return lowest;
}

}  // namespace

BraidWord handle_reduce(const BraidWord& word, ReductionBudget budget) {
  std::vector<int> w = free_reduce(word).letters();
  std::uint64_t steps = 0;
  std::size_t from = 0;
  Handle h;
  while (find_handle(w, from, h)) {
    if (++steps > budget.max_steps)
      throw budget_exhausted_error("handle reduction budget exhausted");
    from = reduce_handle(w, h);
  }
  return BraidWord(std::move(w));
}

bool is_trivial(const BraidWord& word, ReductionBudget budget) {
  const BraidWord w = free_reduce(word);
  if (w.empty()) return true;
  if (exponent_sum(w) != 0) return false;
  if (!underlying_permutation(w, width(w)).is_identity()) return false;
  return handle_reduce(w, budget).empty();
}

bool equal_elements(const BraidWord& u, const BraidWord& v,
                    ReductionBudget budget) {
  return is_trivial(concat(u, inverse(v)), budget);
}

}  // namespace braidnorm
