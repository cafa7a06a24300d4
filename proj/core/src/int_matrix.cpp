#include "braidnorm/int_matrix.hpp"

#include <sstream>

namespace braidnorm {

bool IntMatrix::is_symmetric() const noexcept {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::symmetrized() const {
  IntMatrix s(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s.at(i, j) = at(i, j) + at(j, i);
  return s;
}

IntMatrix IntMatrix::antisymmetrized() const {
  IntMatrix s(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s.at(i, j) = at(i, j) - at(j, i);
  return s;
}

std::string IntMatrix::to_text() const {
  if (n_ == 0) return "0 x 0";
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    if (i + 1 < n_) os << '\n';
  }
  return os.str();
}

}  // namespace braidnorm
