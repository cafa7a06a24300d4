#ifndef BRAIDNORM_INT_MATRIX_HPP
#define BRAIDNORM_INT_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace braidnorm {

/// Dense square integer matrix, just big enough for Seifert forms.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const noexcept { return n_; }
  std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_symmetric() const noexcept;
  IntMatrix transposed() const;
  /// this + this^T
  IntMatrix symmetrized() const;
  /// this - this^T
  IntMatrix antisymmetrized() const;

  /// Rows newline-separated, entries space-separated; "0 x 0" for empty.
  std::string to_text() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

}  // namespace braidnorm

#endif
