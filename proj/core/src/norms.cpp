#include "braidnorm/norms.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "braidnorm/permutation.hpp"
#include "braidnorm/signature.hpp"

namespace braidnorm {

namespace {

BraidWord base_power(const BraidWord& base, long e) {
  BraidWord acc;
  const BraidWord b = e >= 0 ? base : inverse(base);
  for (long i = 0; i < std::labs(e); ++i) acc = concat(acc, b);
  return acc;
}

/// w with every letter translated down by k (inverse of shift).
BraidWord unshift(const BraidWord& w, int k) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w) {
    const int idx = std::abs(l) - k;
    if (idx < 1) throw std::invalid_argument("unshift below strand 1");
    out.push_back(l > 0 ? idx : -idx);
  }
  return BraidWord(std::move(out));
}

void require_valid(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("certificate failed to validate: ") + what);
}

}  // namespace

/// Translating braid with (sigma_1^e)^{delta_j} = sigma_j^e: the inverse of
/// the block transposition carrying strands {j, j+1} down to {1, 2}. Written
/// this way its first letter cancels against sigma_1-power prefixes, which
/// keeps the telescoped commutator certificates short.
static BraidWord letter_conjugator(int j) {
  return inverse(block_transposition(2, j - 1));
}

BraidWord block_transposition(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative block size");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
  for (int j = a; j >= 1; --j)
    for (int l = j; l < j + b; ++l) out.push_back(l);
  return BraidWord(std::move(out));
}

BraidWord block_translation_conjugator(int k, int width) {
  // conjugating by block_transposition(k, width) shifts [1..width] up by k
  return block_transposition(k, width);
}

DisplacementBraid build_displacement_braid(int n, int m) {
  if (n < 1 || m < n) throw std::invalid_argument("need 1 <= n <= m");
  const BraidWord t = block_transposition(m, n);
  const BraidWord t_far = shift(t, m + n);
  DisplacementBraid d{concat(t, inverse(t_far)), n, m};

  require_valid(exponent_sum(d.word) == 0, "displacement braid exponent sum");
  const Permutation p = underlying_permutation(d.word, 2 * (m + n));
  for (int i = 1; i <= n; ++i)
    require_valid(p.apply(i) == m + i, "displacement braid permutation");
  for (int i = 1; i < n; ++i) {
    const BraidWord gen{i};
    require_valid(equal_elements(conjugate(gen, d.word), shift(gen, m)),
                  "displacement braid conjugation action");
  }
  return d;
}

NuWitness nu_upper(const BraidWord& w, int n) {
  if (n < 2) throw std::invalid_argument("nu_upper requires n >= 2");
  NuWitness witness;
  witness.n = n;
  witness.element = free_reduce(w);
  const auto sup = support(witness.element);
  if (!sup) {
    require_valid(witness.validate(), "empty nu witness");
    return witness;
  }
  const auto [lo, hi] = *sup;
  const int span = hi - lo + 1;
  if (hi <= n) {
    witness.factors.push_back({witness.element, BraidWord{}});
  } else if (span <= n) {
    const BraidWord k = unshift(witness.element, lo - 1);
    witness.factors.push_back({k, block_translation_conjugator(lo - 1, span)});
  } else {
    for (int l : witness.element) {
      const int j = std::abs(l);
      witness.factors.push_back({BraidWord{l > 0 ? 1 : -1}, letter_conjugator(j)});
    }
  }
  require_valid(witness.validate(), "nu witness");
  return witness;
}

long nu_lower(const BraidWord& w, int n) {
  if (n < 2) throw std::invalid_argument("nu_lower requires n >= 2");
  const BraidWord r = free_reduce(w);
  if (is_trivial(r)) return 0;
  const int moved = underlying_permutation(r, width(r)).moved_points();
  return std::max(1L, static_cast<long>((moved + n - 1) / n));
}

ConjugateProductCertificate biinvariant_upper(const BraidWord& w) {
  ConjugateProductCertificate cert;
  cert.target = free_reduce(w);
  for (int l : cert.target) {
    const int j = std::abs(l);
    cert.factors.push_back({l > 0 ? 1 : -1, letter_conjugator(j)});
  }
  require_valid(cert.validate(), "biinvariant word norm certificate");
  return cert;
}

long biinvariant_lower(const BraidWord& w) {
  const BraidWord r = free_reduce(w);
  const long e = std::labs(exponent_sum(r));
  const long s = std::labs(static_cast<long>(link_signature(r)));
  return std::max(e, (s + 1) / 2);
}

std::vector<BraidWord> four_conjugate_factorization(const BraidWord& x,
                                                    const BraidWord& y,
                                                    const BraidWord& z) {
  if (!is_trivial(commutator(x, conjugate(y, z))))
    throw std::invalid_argument(
        "hypothesis violated: x does not commute with y^z");
  const BraidWord xy = concat(x, y);
  const BraidWord zi = inverse(z);
  std::vector<BraidWord> out{conjugate(z, xy), conjugate(zi, x), free_reduce(z),
                             conjugate(zi, y)};
  BraidWord product;
  for (const BraidWord& f : out) product = concat(product, f);
  require_valid(equal_elements(product, commutator(x, y)),
                "four conjugate product");
  return out;
}

CommutatorDecomposition decompose_into_commutators(
    const ConjugateProductCertificate& cert) {
  require_valid(cert.validate(), "input conjugate product certificate");
  CommutatorDecomposition out;
  long prefix = 0;
  for (const ConjugateFactor& f : cert.factors) {
    const BraidWord conj_by = base_power(cert.base, prefix);
    CommutatorCertificate::Factor factor;
    factor.f = conjugate(f.conjugator, conj_by);
    factor.g = f.sign > 0 ? cert.base : inverse(cert.base);
    out.certificate.factors.push_back(std::move(factor));
    prefix += f.sign;
  }
  out.residual_exponent = prefix;
  out.certificate.target =
      concat(cert.target, inverse(base_power(cert.base, prefix)));
  require_valid(out.certificate.validate(), "commutator decomposition");
  return out;
}

CommutatorCertificate rewrite_to_generator_commutators(
    const CommutatorCertificate& cert,
    const std::vector<std::pair<ConjugateProductCertificate,
                                ConjugateProductCertificate>>& expansions) {
  if (expansions.size() != cert.factors.size())
    throw std::invalid_argument("one expansion pair per factor required");

  CommutatorCertificate out;
  out.target = cert.target;
  out.bounds = cert.bounds ? cert.bounds : std::optional<NormBounds>(NormBounds{});
  const int n = out.bounds->n;

  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    const auto& [fexp, gexp] = expansions[i];
    if (!equal_elements(fexp.target, cert.factors[i].f) ||
        !equal_elements(gexp.target, cert.factors[i].g))
      throw std::invalid_argument("expansion does not match factor entry");

    // [a_1...a_s, g] = prod_{i=s..1} [a_i, g]^{a_1...a_{i-1}}, and
    // [a, b_1...b_t] = prod_{j=1..t} [a, b_j]^{b_1...b_{j-1}}.
    auto piece = [&](const ConjugateProductCertificate& e, std::size_t idx) {
      const BraidWord body =
          e.factors[idx].sign > 0 ? e.base : inverse(e.base);
      return std::make_pair(conjugate(body, e.factors[idx].conjugator),
                            e.factors[idx]);
    };

    std::vector<BraidWord> fprefix(fexp.factors.size() + 1);
    for (std::size_t a = 0; a < fexp.factors.size(); ++a)
      fprefix[a + 1] = concat(fprefix[a], piece(fexp, a).first);
    std::vector<BraidWord> gprefix(gexp.factors.size() + 1);
    for (std::size_t b = 0; b < gexp.factors.size(); ++b)
      gprefix[b + 1] = concat(gprefix[b], piece(gexp, b).first);

    for (std::size_t a = fexp.factors.size(); a-- > 0;) {
      const auto [aword, afac] = piece(fexp, a);
      for (std::size_t b = 0; b < gexp.factors.size(); ++b) {
        const auto [bword, bfac] = piece(gexp, b);
        // [a, b_j] conjugated by fprefix[a] * gprefix[b] ... order: the f-peel
        // conjugates by a_1..a_{a-1}; inside, the g-peel by b_1..b_{b-1}.
        const BraidWord outer = concat(fprefix[a], gprefix[b]);
        CommutatorCertificate::Factor factor;
        factor.f = conjugate(aword, outer);
        factor.g = conjugate(bword, outer);
        NuWitness fw;
        fw.n = n;
        fw.element = factor.f;
        fw.factors.push_back({BraidWord{afac.sign > 0 ? 1 : -1},
                              concat(outer, afac.conjugator)});
        NuWitness gw;
        gw.n = n;
        gw.element = factor.g;
        gw.factors.push_back({BraidWord{bfac.sign > 0 ? 1 : -1},
                              concat(outer, bfac.conjugator)});
        factor.f_witness = std::move(fw);
        factor.g_witness = std::move(gw);
        out.factors.push_back(std::move(factor));
      }
    }
  }
  require_valid(out.validate(), "generator commutator rewrite");
  return out;
}

CommutatorCertificate cl_upper(const BraidWord& w, int n, int p, int q) {
  if (exponent_sum(w) != 0) throw std::domain_error("not in commutator subgroup");
  if (n < 2 || p < 1 || q < 1)
    throw std::invalid_argument("cl_upper requires n >= 2 and p, q >= 1");

  const ConjugateProductCertificate letters = biinvariant_upper(w);
  CommutatorDecomposition decomposition = decompose_into_commutators(letters);
  require_valid(decomposition.residual_exponent == 0,
                "zero residual for commutator subgroup element");

  std::vector<std::pair<ConjugateProductCertificate, ConjugateProductCertificate>>
      expansions;
  expansions.reserve(decomposition.certificate.factors.size());
  for (const auto& factor : decomposition.certificate.factors)
    expansions.emplace_back(biinvariant_upper(factor.f),
                            biinvariant_upper(factor.g));

  // requested bounds ride on the input; the rewrite attaches the witnesses
  decomposition.certificate.bounds = NormBounds{n, p, q};
  return rewrite_to_generator_commutators(decomposition.certificate, expansions);
}

long cl_lower_constant(int n, int p, int q) {
  if (n < 2 || p < 1 || q < 1)
    throw std::invalid_argument("cl_lower requires n >= 2 and p, q >= 1");
  return 2L * n * (p + q);
}

long cl_lower(const BraidWord& w, int n, int p, int q) {
  if (exponent_sum(w) != 0) throw std::domain_error("not in commutator subgroup");
  const long k = cl_lower_constant(n, p, q);
  const long s = std::labs(static_cast<long>(link_signature(free_reduce(w))));
  return (s + k - 1) / k;
}

DisplacementConjugateCertificate to_displacement_conjugates(
    const CommutatorCertificate& cert) {
  if (!cert.bounds) throw std::invalid_argument("missing witnesses");
  const int n = cert.bounds->n;
  struct Prepared {
    BraidWord x, y, conj_by, target;
  };
  std::vector<Prepared> prep;
  prep.reserve(cert.factors.size());
  int max_hi = n;
  for (const auto& factor : cert.factors) {
    if (!factor.f_witness || !factor.g_witness ||
        factor.f_witness->length() > 1 || factor.g_witness->length() > 1)
      throw std::invalid_argument("missing witnesses");
    const BraidWord cg = factor.g_witness->factors.empty()
                             ? BraidWord{}
                             : factor.g_witness->factors.front().g;
    const BraidWord y = factor.g_witness->factors.empty()
                            ? BraidWord{}
                            : factor.g_witness->factors.front().k;
    const BraidWord x = conjugate(factor.f, inverse(cg));
    if (const auto sup = support(x)) max_hi = std::max(max_hi, sup->second);
    prep.push_back({x, y, cg, commutator(factor.f, factor.g)});
  }

  const DisplacementBraid delta = build_displacement_braid(n, max_hi);
  DisplacementConjugateCertificate out;
  out.base = delta.word;
  out.target = cert.target;
  for (const Prepared& p : prep) {
    const std::vector<BraidWord> four =
        four_conjugate_factorization(p.x, p.y, delta.word);
    DisplacementConjugateCertificate::Section section;
    section.target = p.target;
    const BraidWord xy = concat(p.x, p.y);
    section.factors = {
        ConjugateFactor{+1, concat(p.conj_by, xy)},
        ConjugateFactor{-1, concat(p.conj_by, p.x)},
        ConjugateFactor{+1, p.conj_by},
        ConjugateFactor{-1, concat(p.conj_by, p.y)},
    };
    out.sections.push_back(std::move(section));
  }
  require_valid(out.validate(), "displacement conjugate certificate");
  return out;
}

}  // namespace braidnorm
