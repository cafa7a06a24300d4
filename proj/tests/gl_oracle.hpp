#ifndef BRAIDNORM_TESTS_GL_ORACLE_HPP
#define BRAIDNORM_TESTS_GL_ORACLE_HPP

#include <vector>

#include "braidnorm/braid_word.hpp"

namespace braidnorm::testing {

/// Independent signature oracle for braid closures, via the checkerboard
/// Goeritz form and the Gordon-Litherland correction term on the standard
/// closed-braid diagram. Shares no code with the Seifert-matrix route; the
/// sign conventions were normalized against published knot-table values
/// (torus links on two strands, both trefoils, the figure eight).
int gl_link_signature(const BraidWord& w, int n);

/// Signature of a symmetric rational matrix given as num/den = 1 integers;
/// small standalone diagonalizer used only inside the oracle and for
/// cross-checking the library's matrix_signature.
int oracle_symmetric_signature(std::vector<std::vector<long long>> a);

}  // namespace braidnorm::testing

#endif
