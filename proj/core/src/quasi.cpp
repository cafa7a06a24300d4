#include "braidnorm/quasi.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "braidnorm/signature.hpp"

namespace braidnorm {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  return next() % bound;
}

BraidWord random_braid(int length, int strands, SplitMix64& rng) {
  if (length < 0 || strands < 2)
    throw std::invalid_argument("random_braid requires length >= 0, strands >= 2");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(length));
  const std::uint64_t alphabet = 2ULL * (strands - 1);
  for (int i = 0; i < length; ++i) {
    const std::uint64_t v = rng.next_below(alphabet);
    const int letter = v < static_cast<std::uint64_t>(strands - 1)
                           ? static_cast<int>(v) + 1
                           : -(static_cast<int>(v) - (strands - 1) + 1);
    letters.push_back(letter);
  }
  return free_reduce(BraidWord(std::move(letters)));
}

BraidWord random_braid(int length, int strands, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_braid(length, strands, rng);
}

long defect(const BraidWord& a, const BraidWord& b) {
  const long s_ab = link_signature(concat(a, b));
  const long s_a = link_signature(free_reduce(a));
  const long s_b = link_signature(free_reduce(b));
  return std::labs(s_ab - s_a - s_b);
}

DefectReport defect_experiment(int n, int m, int samples, int len,
                               std::uint64_t seed) {
  if (n < 2 || m <= n) throw std::invalid_argument("need 2 <= n < m");
  if (samples < 0 || len < 0)
    throw std::invalid_argument("samples and len must be nonnegative");
  DefectReport report;
  report.n = n;
  report.m = m;
  report.samples = samples;
  report.len = len;
  report.seed = seed;
  report.bound = n;

  SplitMix64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const BraidWord b = random_braid(len, n, rng);
    const BraidWord gamma = random_braid(len, m, rng);
    const BraidWord alpha = random_braid(len, m, rng);
    const BraidWord beta = conjugate(b, gamma);  // nu_n(beta) <= 1 by construction
    const long d = defect(alpha, beta);
    report.defects.push_back(d);
    report.max_defect = std::max(report.max_defect, d);
    if (d > report.bound) report.violations.push_back({i, alpha, beta, d});
  }
  return report;
}

namespace {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(std::llabs(num), den);
  return Rational{g ? num / g : num, g ? den / g : den};
}

// least-squares slope of (k, sigma_k) over k in [lo, hi], exact:
// slope = (c * sum(k*s) - sum(k) * sum(s)) / (c * sum(k^2) - sum(k)^2)
Rational exact_slope(const std::vector<long>& sigma, int lo, int hi) {
  long long c = 0, sk = 0, ss = 0, sks = 0, skk = 0;
  for (int k = lo; k <= hi; ++k) {
    const long long s = sigma[static_cast<std::size_t>(k - 1)];
    ++c;
    sk += k;
    ss += s;
    sks += static_cast<long long>(k) * s;
    skk += static_cast<long long>(k) * k;
  }
  if (c < 2) return Rational{0, 1};
  return make_rational(c * sks - sk * ss, c * skk - sk * sk);
}

bool within_one(const Rational& a, const Rational& b) {
  // |a - b| <= 1  <=>  |a.num*b.den - b.num*a.den| <= a.den*b.den
  const long long diff = a.num * b.den - b.num * a.den;
  return std::llabs(diff) <= a.den * b.den;
}

}  // namespace

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

GrowthReport stable_growth(const BraidWord& h, int k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  GrowthReport report;
  report.h = free_reduce(h);
  report.k_max = k_max;
  BraidWord hk;
  for (int k = 1; k <= k_max; ++k) {
    hk = concat(hk, report.h);
    report.sigma.push_back(link_signature(hk));
  }
  report.tail_quotient =
      make_rational(report.sigma.back(), static_cast<long long>(k_max));
  report.half_slope = exact_slope(report.sigma, std::max(1, k_max / 2), k_max);
  report.estimators_agree = within_one(report.tail_quotient, report.half_slope);
  return report;
}

namespace {

// canonical representative under cyclic rotation and mirror
std::vector<int> canonical_form(const std::vector<int>& w) {
  std::vector<int> best;
  for (int m = 0; m < 2; ++m) {
    std::vector<int> base = w;
    if (m) for (int& l : base) l = -l;
    for (std::size_t r = 0; r < base.size(); ++r) {
      std::vector<int> rot(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

void enumerate_words(int max_len, int strands,
                     const std::function<void(const std::vector<int>&)>& emit) {
  // freely and cyclically reduced words with zero exponent sum, depth-first
  std::vector<int> w;
  const int top = strands - 1;
  long esum = 0;
  std::function<void(int)> rec = [&](int remaining) {
    if (!w.empty() && esum == 0 && w.front() != -w.back()) emit(w);
    if (remaining == 0) return;
    for (int l = -top; l <= top; ++l) {
      if (l == 0) continue;
      if (!w.empty() && w.back() == -l) continue;  // keep freely reduced
      w.push_back(l);
      esum += l > 0 ? 1 : -1;
      rec(remaining - 1);
      esum -= l > 0 ? 1 : -1;
      w.pop_back();
    }
  };
  rec(max_len);
}

}  // namespace

WitnessResult witness_search(int max_len, int strands, int k_max) {
  if (max_len < 0 || strands < 2 || k_max < 1)
    throw std::invalid_argument("witness_search parameter out of range");

  struct Candidate {
    std::vector<int> word;
    long tail_sigma;
  };
  std::vector<Candidate> candidates;
  std::set<std::vector<int>> seen;

  enumerate_words(max_len, strands, [&](const std::vector<int>& w) {
    const std::vector<int> canon = canonical_form(w);
    if (!seen.insert(canon).second) return;
    const BraidWord h(canon);
    const long tail = link_signature(power(h, k_max));
    if (tail != 0) candidates.push_back({canon, tail});
  });

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return std::labs(a.tail_sigma) > std::labs(b.tail_sigma);
                   });

  for (const Candidate& c : candidates) {
    const GrowthReport growth = stable_growth(BraidWord(c.word), k_max);
    if (growth.estimators_agree && growth.tail_quotient.num != 0)
      return WitnessResult{BraidWord(c.word), growth.tail_quotient, growth};
  }
  GrowthReport empty_growth = stable_growth(BraidWord{}, k_max);
  return WitnessResult{BraidWord{}, Rational{0, 1}, empty_growth};
}

}  // namespace braidnorm
