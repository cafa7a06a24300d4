#ifndef BRAIDNORM_SIGNATURE_HPP
#define BRAIDNORM_SIGNATURE_HPP

#include "braidnorm/braid_word.hpp"
#include "braidnorm/int_matrix.hpp"

namespace braidnorm {

struct SignatureValue {
  int sigma = 0;
  int nullity = 0;
};

/// Exact signature and nullity of a symmetric integer matrix, by congruence
/// diagonalization over the rationals: symmetric pivoting with 2x2 hyperbolic
/// pivots when every diagonal entry of the active block vanishes. No floating
/// point anywhere. Throws std::invalid_argument on non-symmetric input.
SignatureValue matrix_signature(const IntMatrix& s);

/// Exact integer determinant (Bareiss elimination over arbitrary-precision
/// integers), returned as a decimal string so callers stay GMP-agnostic.
std::string determinant_string(const IntMatrix& m);

/// The braid signature: signature of V + V^T for V = seifert_matrix(w, n).
/// Independent of the choice of n >= width(w).
int link_signature(const BraidWord& w, int n);
int link_signature(const BraidWord& w);  // n = width(w)

}  // namespace braidnorm

#endif
