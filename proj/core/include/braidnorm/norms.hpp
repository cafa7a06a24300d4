#ifndef BRAIDNORM_NORMS_HPP
#define BRAIDNORM_NORMS_HPP

#include <utility>
#include <vector>

#include "braidnorm/braid_word.hpp"
#include "braidnorm/certificates.hpp"

namespace braidnorm {

/// Positive permutation braid exchanging the block [1..a] with the block
/// [a+1..a+b], one row of generators per strand of the first block.
BraidWord block_transposition(int a, int b);

/// Conjugating by block_transposition(k, width) translates a braid supported
/// on [1..width] up by k strands; this is the translating conjugator used by
/// the letter-by-letter norm certificates.
BraidWord block_translation_conjugator(int k, int width);

/// Element of the commutator subgroup whose conjugation action moves any
/// braid supported on strands [1..n] to strands [m+1..m+n].
struct DisplacementBraid {
  BraidWord word;
  int block_size = 1;  // n
  int offset = 1;      // m
};

/// Builds the displacement braid T * T'^{-1} where T is the block
/// transposition moving [1..n] to [m+1..m+n] and T' its disjoint translate
/// beyond strand m+n. Checks the defining properties at construction
/// (exponent sum zero, exact permutation, conjugation action on the
/// generators of B_n). Requires n >= 1, m >= n.
DisplacementBraid build_displacement_braid(int n, int m);

/// Witness nu_n(w) <= length: a single block-translation conjugator when the
/// support of w fits in n strands after translation, else one factor per
/// letter. Requires n >= 2.
NuWitness nu_upper(const BraidWord& w, int n);

/// Simple lower bound for nu_n: 0 for the identity; otherwise at least
/// ceil(moved_points / n), since each factor conjugate to an n-strand braid
/// moves at most n points of the underlying permutation, and at least 1.
long nu_lower(const BraidWord& w, int n);

/// Letter-by-letter certificate for the biinvariant word norm: each letter
/// of the reduced word is a conjugate of sigma_1^{+/-1} by a translating
/// braid, so the norm is at most the reduced length.
ConjugateProductCertificate biinvariant_upper(const BraidWord& w);

/// max(|exponent_sum(w)|, ceil(|sigma(w)| / 2)). The divisor 2 is the defect
/// bound of the braid signature at n = 2 (see the bounds notes in README).
long biinvariant_lower(const BraidWord& w);

/// The four conjugates [z^{xy}, (z^{-1})^x, z, (z^{-1})^y] whose product is
/// [x, y], valid whenever x commutes with y^z. The hypothesis and the product
/// identity are both checked exactly; a violated hypothesis throws
/// std::invalid_argument("hypothesis violated: x does not commute with y^z").
std::vector<BraidWord> four_conjugate_factorization(const BraidWord& x,
                                                    const BraidWord& y,
                                                    const BraidWord& z);

struct CommutatorDecomposition {
  CommutatorCertificate certificate;
  long residual_exponent = 0;
};

/// Telescopes a conjugate-product certificate of length k into exactly k
/// commutator factors, each a conjugate of [conjugator_i, sigma_1^{e_i}],
/// plus the residual sigma_1^{e_1+...+e_k}. The residual exponent always
/// equals exponent_sum(target); when it is zero the commutator certificate
/// alone reproduces the target. Trivial factors are kept so the count is
/// exactly k.
CommutatorDecomposition decompose_into_commutators(
    const ConjugateProductCertificate& cert);

/// Rewrites every factor [f_i, g_i] into factors whose entries are single
/// conjugated generators (so both entries carry nu_n <= 1 witnesses for all
/// n >= 2), given conjugate-product expansions of each entry. Peels the first
/// entry from the left before the second from the right; the factor count is
/// sum over i of len(f_i expansion) * len(g_i expansion).
CommutatorCertificate rewrite_to_generator_commutators(
    const CommutatorCertificate& cert,
    const std::vector<std::pair<ConjugateProductCertificate,
                                ConjugateProductCertificate>>& expansions);

/// Upper-bound certificate for the (nu_n, p, q)-commutator length via the
/// pipeline biinvariant_upper -> decompose_into_commutators ->
/// rewrite_to_generator_commutators. Every emitted factor entry carries a
/// nu_n <= 1 <= min(p, q) witness. Requires exponent_sum(w) = 0 (throws
/// std::domain_error("not in commutator subgroup") otherwise) and n >= 2.
CommutatorCertificate cl_upper(const BraidWord& w, int n, int p, int q);

/// The quasimorphism constant used by cl_lower: K(n, p, q) = 2n(p + q).
/// Derivation in the bounds notes; emitted alongside every lower bound.
long cl_lower_constant(int n, int p, int q);

/// ceil(|sigma(w)| / K(n, p, q)): every product of k commutators with
/// nu_n-bounded entries has |sigma| < k * K. Requires exponent_sum(w) = 0.
long cl_lower(const BraidWord& w, int n, int p, int q);

/// Extremal-property transformer: each constrained commutator factor becomes
/// exactly four conjugates of one displacement braid, via
/// four_conjugate_factorization applied to the witness conjugations. Requires
/// nu_n = 1 witnesses on every factor entry (throws std::invalid_argument on
/// missing witnesses).
DisplacementConjugateCertificate to_displacement_conjugates(
    const CommutatorCertificate& cert);

}  // namespace braidnorm

#endif
