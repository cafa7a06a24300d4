#ifndef BRAIDNORM_PERMUTATION_HPP
#define BRAIDNORM_PERMUTATION_HPP

#include <cstddef>
#include <vector>

#include "braidnorm/braid_word.hpp"

namespace braidnorm {

/// Permutation of {1..n}. images()[i-1] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t cycle_count() const;
  /// Number of non-fixed points.
  int moved_points() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Composition (a * b)(i) = a(b(i)); apply b first. With this product the
/// braid-to-permutation map below is a homomorphism.
Permutation operator*(const Permutation& a, const Permutation& b);

/// Image of w under B_n -> S_n, sending generator i to the transposition
/// (i, i+1). Convention fixed so that conjugation is compatible:
/// perm(g w g^{-1}) = perm(g) perm(w) perm(g)^{-1}, and the word with letters
/// (+1, +2) on three strands maps to the cycle 1->2->3->1.
/// Throws std::invalid_argument if n < width(w).
Permutation underlying_permutation(const BraidWord& w, int n);

}  // namespace braidnorm

#endif
