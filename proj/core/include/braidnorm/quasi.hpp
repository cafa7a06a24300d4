#ifndef BRAIDNORM_QUASI_HPP
#define BRAIDNORM_QUASI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "braidnorm/braid_word.hpp"

namespace braidnorm {

/// The fixed experiment RNG: SplitMix64 (Steele-Lea-Vigna). Chosen because
/// its full algorithm fits in three lines, so reports are bit-reproducible
/// across implementations: state += 0x9e3779b97f4a7c15; z = state;
/// z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9; z = (z ^ (z >> 27)) *
/// 0x94d049bb133111eb; return z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform value in [0, bound) by modulo reduction (documented, bias
  /// irrelevant at these bounds and required for cross-implementation
  /// reproducibility).
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Freely reduced word of at most `length` uniform letters from
/// {+/-1 .. +/-(strands-1)}; deterministic for a fixed seed. Letter drawing:
/// v = next_below(2*(strands-1)); letter = v < strands-1 ? v+1 : -(v-strands+2).
BraidWord random_braid(int length, int strands, std::uint64_t seed);
/// Same, drawing from an existing stream.
BraidWord random_braid(int length, int strands, SplitMix64& rng);

/// |sigma(a b) - sigma(a) - sigma(b)|.
long defect(const BraidWord& a, const BraidWord& b);

struct DefectViolation {
  int sample = 0;
  BraidWord alpha;
  BraidWord beta;
  long value = 0;
};

struct DefectReport {
  int n = 0;
  int m = 0;
  int samples = 0;
  int len = 0;
  std::uint64_t seed = 0;
  long max_defect = 0;
  long bound = 0;  // = n
  std::vector<DefectViolation> violations;  // must stay empty
  std::vector<long> defects;                // per sample, in order

  bool passed() const noexcept { return violations.empty(); }
};

/// Samples defect(alpha, beta) where beta = b^gamma for b drawn in B_n and
/// gamma, alpha drawn in B_m (so nu_n(beta) <= 1 by construction), and checks
/// the bound max_defect <= n. Per sample the stream is consumed in the order
/// b, gamma, alpha. Requires 2 <= n < m.
DefectReport defect_experiment(int n, int m, int samples, int len,
                               std::uint64_t seed);

/// Exact rational p/q in lowest terms; den > 0.
struct Rational {
  long long num = 0;
  long long den = 1;
  std::string str() const;
  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct GrowthReport {
  BraidWord h;
  int k_max = 0;
  std::vector<long> sigma;  // sigma(h^k), k = 1..k_max
  Rational tail_quotient;   // sigma(h^k_max) / k_max
  Rational half_slope;      // least-squares slope over the last half
  bool estimators_agree = false;  // |tail - slope| <= 1
};

/// Exact sigma(h^k) for k = 1..k_max plus both rate estimators. The two
/// estimators must agree within one unit of slope for a witness to be
/// accepted (quasimorphism convergence is O(1/k), so both bracket the limit).
GrowthReport stable_growth(const BraidWord& h, int k_max);

struct WitnessResult {
  BraidWord h;
  Rational rate;  // tail quotient of the winner; 0/1 if none found
  GrowthReport growth;
};

/// Desk-scale exhaustive search: enumerates freely and cyclically reduced
/// zero-exponent-sum words of length <= max_len on the given strands,
/// canonicalized under cyclic rotation and mirror, and returns the word
/// maximizing |sigma(h^k_max)/k_max| among those whose rate estimators agree.
WitnessResult witness_search(int max_len, int strands, int k_max);

}  // namespace braidnorm

#endif
