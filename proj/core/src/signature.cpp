#include "braidnorm/signature.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "braidnorm/closure.hpp"

namespace braidnorm {

namespace {

int sgn(std::int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Fraction-free symmetric elimination (Bareiss). Every step divides by the
// previous pivot; divisibility is exact for diagonal pivots by Sylvester's
// identity and is verified at runtime for the rare hyperbolic steps. Returns
// nullopt on overflow risk or inexact division, and the caller retries with
// rationals.
std::optional<SignatureValue> signature_int64(const IntMatrix& s) {
  const int n = s.size();
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = s.at(i, j);
  auto at = [&](int i, int j) -> std::int64_t& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  constexpr std::int64_t kLimit = std::int64_t(1) << 61;

  std::vector<int> act(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) act[static_cast<std::size_t>(i)] = i;
  std::int64_t prev = 1;
  int flip = 1, pos = 0, neg = 0, zero = 0;

  while (!act.empty()) {
    int piv = -1;
    for (int r : act)
      if (at(r, r) != 0 &&
          (piv < 0 || std::abs(at(r, r)) < std::abs(at(piv, piv))))
        piv = r;
    if (piv >= 0) {
      const std::int64_t d = at(piv, piv);
      (flip * sgn(d) > 0 ? pos : neg) += 1;
      act.erase(std::find(act.begin(), act.end(), piv));
      for (int u : act) {
        for (int v : act) {
          if (v < u) continue;
          __int128 num = static_cast<__int128>(d) * at(u, v) -
                         static_cast<__int128>(at(u, piv)) * at(v, piv);
          if (num % prev != 0) return std::nullopt;  // should not happen
          __int128 q = num / prev;
          if (q > kLimit || q < -kLimit) return std::nullopt;
          at(u, v) = at(v, u) = static_cast<std::int64_t>(q);
        }
      }
      flip *= sgn(d) * sgn(prev);
      prev = d;
      continue;
    }
    // all active diagonals vanish: hyperbolic 2x2 pivot
    int hi = -1, hj = -1;
    for (std::size_t x = 0; x < act.size() && hi < 0; ++x)
      for (std::size_t y = x + 1; y < act.size(); ++y)
        if (at(act[x], act[y]) != 0) {
          hi = act[x];
          hj = act[y];
          break;
        }
    if (hi < 0) {
      zero += static_cast<int>(act.size());
      break;
    }
    const std::int64_t m = at(hi, hj);
    pos += 1;
    neg += 1;
    act.erase(std::find(act.begin(), act.end(), hj));
    act.erase(std::find(act.begin(), act.end(), hi));
    // Schur complement w.r.t. [[0,m],[m,0]], scaled by m to stay integral:
    // new = (m*old - a_ui*a_vj - a_uj*a_vi) / prev when divisible.
    for (int u : act) {
      for (int v : act) {
        if (v < u) continue;
        __int128 num = static_cast<__int128>(m) * at(u, v) -
                       static_cast<__int128>(at(u, hi)) * at(v, hj) -
                       static_cast<__int128>(at(u, hj)) * at(v, hi);
        if (num % prev != 0) return std::nullopt;
        __int128 q = num / prev;
        if (q > kLimit || q < -kLimit) return std::nullopt;
        at(u, v) = at(v, u) = static_cast<std::int64_t>(q);
      }
    }
    flip *= sgn(m) * sgn(prev);
    prev = m;
  }
  return SignatureValue{pos - neg, zero};
}

// Reference path: plain congruence diagonalization over exact rationals.
SignatureValue signature_mpq(const IntMatrix& s) {
  const int n = s.size();
  std::vector<mpq_class> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] = static_cast<long>(s.at(i, j));
  auto at = [&](int i, int j) -> mpq_class& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  std::vector<int> act(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) act[static_cast<std::size_t>(i)] = i;
  int pos = 0, neg = 0, zero = 0;

  while (!act.empty()) {
    int piv = -1;
    for (int r : act)
      if (at(r, r) != 0) {
        piv = r;
        break;
      }
    if (piv >= 0) {
      const mpq_class d = at(piv, piv);
      (mpq_sgn(d.get_mpq_t()) > 0 ? pos : neg) += 1;
      act.erase(std::find(act.begin(), act.end(), piv));
      for (int u : act) {
        const mpq_class f = at(u, piv) / d;
        if (f != 0)
          for (int v : act) at(u, v) -= f * at(piv, v);
      }
      // re-symmetrize the active block exactly
      for (int u : act)
        for (int v : act)
          if (u < v) at(v, u) = at(u, v);
      continue;
    }
    int hi = -1, hj = -1;
    for (std::size_t x = 0; x < act.size() && hi < 0; ++x)
      for (std::size_t y = x + 1; y < act.size(); ++y)
        if (at(act[x], act[y]) != 0) {
          hi = act[x];
          hj = act[y];
          break;
        }
    if (hi < 0) {
      zero += static_cast<int>(act.size());
      break;
    }
    const mpq_class m = at(hi, hj);
    pos += 1;
    neg += 1;
    act.erase(std::find(act.begin(), act.end(), hj));
    act.erase(std::find(act.begin(), act.end(), hi));
    for (int u : act) {
      const mpq_class fu = at(u, hi), gu = at(u, hj);
      if (fu != 0 || gu != 0)
        for (int v : act) at(u, v) -= (fu * at(hj, v) + gu * at(hi, v)) / m;
    }
    for (int u : act)
      for (int v : act)
        if (u < v) at(v, u) = at(u, v);
  }
  return SignatureValue{pos - neg, zero};
}

}  // namespace

SignatureValue matrix_signature(const IntMatrix& s) {
  if (!s.is_symmetric())
    throw std::invalid_argument("matrix_signature expects a symmetric matrix");
  if (auto fast = signature_int64(s)) return *fast;
  return signature_mpq(s);
}

std::string determinant_string(const IntMatrix& m) {
  const int n = m.size();
  if (n == 0) return "1";
  std::vector<mpz_class> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] = static_cast<long>(m.at(i, j));
  auto at = [&](int i, int j) -> mpz_class& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  // Bareiss with row pivoting; sign tracks the row swaps.
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          r = i;
          break;
        }
      if (r < 0) return "0";
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  mpz_class det = at(n - 1, n - 1) * sign;
  return det.get_str();
}

int link_signature(const BraidWord& w, int n) {
  const SeifertMatrix v = seifert_matrix(w, n);
  return matrix_signature(v.entries.symmetrized()).sigma;
}

int link_signature(const BraidWord& w) { return link_signature(w, width(w)); }

}  // namespace braidnorm
