#ifndef BRAIDNORM_CERTIFICATES_HPP
#define BRAIDNORM_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidnorm/braid_word.hpp"
#include "braidnorm/word_problem.hpp"

namespace braidnorm {

// Machine-checkable upper-bound witnesses for the conjugation-invariant
// norms. Every certificate validates by exact word-problem equality;
// validation is part of the public contract.

/// One factor (base^{sign})^{conjugator} of a conjugate product.
struct ConjugateFactor {
  int sign = 1;  // +1 or -1
  BraidWord conjugator;
};

/// Witness that target is a product of factors.size() conjugates of
/// base^{+/-1}. With base = sigma_1 this bounds the biinvariant word norm;
/// with base = a displacement braid it is the bound produced by the
/// extremal-property transformer.
struct ConjugateProductCertificate {
  BraidWord base;  // defaults to sigma_1
  BraidWord target;
  std::vector<ConjugateFactor> factors;

  ConjugateProductCertificate() : base({1}) {}

  BraidWord product() const;
  bool validate(ReductionBudget budget = {}) const;
  std::size_t length() const noexcept { return factors.size(); }
};

/// Witness that nu_n(element) <= factors.size(): element equals the product
/// of the k_i conjugated by g_i, each k_i of width <= n.
struct NuWitness {
  BraidWord element;
  int n = 2;
  struct Factor {
    BraidWord k;  // width(k) <= n
    BraidWord g;
  };
  std::vector<Factor> factors;

  BraidWord product() const;
  bool validate(ReductionBudget budget = {}) const;
  std::size_t length() const noexcept { return factors.size(); }
};

struct NormBounds {
  int n = 2;
  int p = 1;
  int q = 1;
};

/// Witness that target is a product of factors.size() commutators [f_i, g_i].
/// When bounds is set, every f_i carries a nu_n <= p witness and every g_i a
/// nu_n <= q witness.
struct CommutatorCertificate {
  BraidWord target;
  std::optional<NormBounds> bounds;  // nullopt = unconstrained
  struct Factor {
    BraidWord f;
    BraidWord g;
    std::optional<NuWitness> f_witness;
    std::optional<NuWitness> g_witness;
  };
  std::vector<Factor> factors;

  BraidWord product() const;
  bool validate(ReductionBudget budget = {}) const;
  std::size_t length() const noexcept { return factors.size(); }
};

/// Output of the displacement transformer: per input commutator factor one
/// section of exactly four conjugates of base^{+/-1} whose product equals the
/// section target; the section targets multiply to the overall target.
/// Sections keep standalone re-verification tractable.
struct DisplacementConjugateCertificate {
  BraidWord base;  // the displacement braid
  BraidWord target;
  struct Section {
    BraidWord target;
    std::vector<ConjugateFactor> factors;  // exactly 4
  };
  std::vector<Section> sections;

  bool validate(ReductionBudget budget = {}) const;
  std::size_t conjugate_count() const noexcept;
};

// --- serialization (structured text, JSON) ---

std::string to_json(const ConjugateProductCertificate&);
std::string to_json(const NuWitness&);
std::string to_json(const CommutatorCertificate&);
std::string to_json(const DisplacementConjugateCertificate&);

/// Parse any certificate JSON and re-validate it. Returns true if the file
/// parses AND the certificate checks out; parse errors throw
/// std::invalid_argument, so callers can distinguish bad input from a failed
/// mathematical check.
bool parse_and_validate_certificate(const std::string& json_text,
                                    ReductionBudget budget = {});

}  // namespace braidnorm

#endif
