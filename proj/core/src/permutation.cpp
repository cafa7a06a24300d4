#include "braidnorm/permutation.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidnorm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i)
    img[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)] - 1)] = i + 1;
  return Permutation(std::move(img));
}

std::size_t Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t cycles = 0;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    ++cycles;
    int j = i;
    while (!seen[static_cast<std::size_t>(j - 1)]) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      j = apply(j);
    }
  }
  return cycles;
}

int Permutation::moved_points() const noexcept {
  int moved = 0;
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) ++moved;
  return moved;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("permutation degrees differ");
  std::vector<int> img(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i)
    img[static_cast<std::size_t>(i - 1)] = a.apply(b.apply(i));
  return Permutation(std::move(img));
}

Permutation underlying_permutation(const BraidWord& w, int n) {
  if (n < width(w))
    throw std::invalid_argument("strand count too small");
  // Track positions through the word, then invert: with the inverse map the
  // assignment is a homomorphism compatible with conjugation.
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
  for (int l : w) {
    const int j = std::abs(l);
    for (int i = 0; i < n; ++i) {
      int& p = pos[static_cast<std::size_t>(i)];
      if (p == j)
        p = j + 1;
      else if (p == j + 1)
        p = j;
    }
  }
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    img[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)] - 1)] = i + 1;
  return Permutation(std::move(img));
}

}  // namespace braidnorm
