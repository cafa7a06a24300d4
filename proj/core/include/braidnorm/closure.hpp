#ifndef BRAIDNORM_CLOSURE_HPP
#define BRAIDNORM_CLOSURE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "braidnorm/braid_word.hpp"
#include "braidnorm/int_matrix.hpp"

namespace braidnorm {

/// Number of link components of the closure of w in B_n = number of cycles
/// of the underlying permutation. Requires n >= width(w).
std::size_t closure_components(const BraidWord& w, int n);

/// Partition of {1..n} into maximal blocks of consecutive strands, split at
/// every gap i/i+1 crossed by no letter. The closure is the split union of
/// the blocks' closures. Requires n >= width(w).
std::vector<std::pair<int, int>> split_blocks(const BraidWord& w, int n);

/// One H_1 generator of the Seifert surface: the loop through two
/// consecutive bands (word positions band_above < band_below) in the same
/// column, i.e. between the same adjacent pair of disks.
struct SeifertGenerator {
  int column;      // bands join disks (column, column+1)
  int band_above;  // 0-based position in the word
  int band_below;
};

struct SeifertMatrix {
  IntMatrix entries;
  std::vector<SeifertGenerator> basis;
};

/// Seifert matrix of the closure of w in B_n, from Seifert's algorithm on the
/// standard closed-braid diagram: one disk per strand, one band per letter.
/// Split blocks are processed independently (the result is their direct sum)
/// and letterless strands contribute nothing. The sign convention is
/// normalized so that the closure of three positive twists on two strands
/// (the positive trefoil) has symmetrized signature -2 and the positive Hopf
/// link -1. Requires n >= width(w).
SeifertMatrix seifert_matrix(const BraidWord& w, int n);

}  // namespace braidnorm

#endif
