#include "gl_oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <map>

#include "braidnorm/closure.hpp"

namespace braidnorm::testing {

namespace {

// Diagonalization written independently of the library: straight top-left
// pivoting, and a row+column addition (instead of a hyperbolic pivot) when
// the whole active diagonal vanishes.
int signature_of(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  int sig = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // all remaining diagonal entries vanish: make one nonzero or stop
      std::size_t r = n, c = n;
      for (std::size_t i = 0; i < n && r == n; ++i)
        if (!done[i])
          for (std::size_t j = i + 1; j < n; ++j)
            if (!done[j] && a[i][j] != 0) {
              r = i;
              c = j;
              break;
            }
      if (r == n) break;  // zero block: contributes nothing
      for (std::size_t j = 0; j < n; ++j) a[r][j] += a[c][j];
      for (std::size_t i = 0; i < n; ++i) a[i][r] += a[i][c];
      piv = r;
    }
    const mpq_class d = a[piv][piv];
    sig += (d > 0) ? 1 : -1;
    done[piv] = true;
    std::vector<mpq_class> factor(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i]) factor[i] = a[i][piv] / d;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || factor[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) a[i][j] -= factor[i] * a[piv][j];
    }
  }
  return sig;
}

// One connected (non-split) block, strands renumbered to 1..n.
int gl_block_signature(const std::vector<int>& letters, int n) {
  std::map<int, std::vector<int>> times;  // column -> crossing times
  for (std::size_t t = 0; t < letters.size(); ++t)
    times[std::abs(letters[static_cast<std::size_t>(t)])].push_back(static_cast<int>(t));

  // white regions: even levels. Corridor at even level L is cut by the
  // column-L crossings into cyclic segments; segment j ends at the j-th
  // crossing time.
  std::map<std::pair<int, int>, int> region_ids;
  auto reg = [&](int level, int seg) {
    auto [it, inserted] = region_ids.try_emplace({level, seg},
                                                 static_cast<int>(region_ids.size()));
    return it->second;
  };
  auto corridor_at = [&](int level, int t) {
    auto it = times.find(level);
    if (level == 0 || level == n || it == times.end()) return reg(level, 0);
    const auto& ts = it->second;
    const auto pos = std::lower_bound(ts.begin(), ts.end(), t) - ts.begin();
    return reg(level, static_cast<int>(pos % static_cast<std::ptrdiff_t>(ts.size())));
  };

  struct Pair {
    int p, q;
    long eta;
  };
  std::vector<Pair> pairs;
  long mu = 0;
  for (std::size_t t = 0; t < letters.size(); ++t) {
    const int l = letters[t];
    const int col = std::abs(l);
    const int e = l > 0 ? 1 : -1;
    const long eta = (col % 2 == 1) ? e : -e;
    if (col % 2 == 1) mu += eta;  // type II crossings sit in odd columns
    int p, q;
    if (col % 2 == 1) {
      p = corridor_at(col - 1, static_cast<int>(t));
      q = corridor_at(col + 1, static_cast<int>(t));
    } else {
      const auto& ts = times[col];
      const auto j = std::find(ts.begin(), ts.end(), static_cast<int>(t)) - ts.begin();
      const int k = static_cast<int>(ts.size());
      p = reg(col, static_cast<int>(j));
      q = reg(col, static_cast<int>((j + 1) % k));
    }
    pairs.push_back({p, q, eta});
  }

  const std::size_t m = region_ids.size();
  std::vector<std::vector<mpq_class>> g(m, std::vector<mpq_class>(m, 0));
  for (const Pair& pr : pairs) {
    if (pr.p == pr.q) continue;
    g[static_cast<std::size_t>(pr.p)][static_cast<std::size_t>(pr.q)] -= pr.eta;
    g[static_cast<std::size_t>(pr.q)][static_cast<std::size_t>(pr.p)] -= pr.eta;
    g[static_cast<std::size_t>(pr.p)][static_cast<std::size_t>(pr.p)] += pr.eta;
    g[static_cast<std::size_t>(pr.q)][static_cast<std::size_t>(pr.q)] += pr.eta;
  }
  if (m <= 1) return static_cast<int>(-mu);
  for (auto& row : g) row.pop_back();
  g.pop_back();
  return signature_of(std::move(g)) - static_cast<int>(mu);
}

}  // namespace

int oracle_symmetric_signature(std::vector<std::vector<long long>> a) {
  std::vector<std::vector<mpq_class>> q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (long long v : a[i]) q[i].emplace_back(static_cast<long>(v));
  return signature_of(std::move(q));
}

int gl_link_signature(const BraidWord& w, int n) {
  int total = 0;
  for (const auto& [lo, hi] : split_blocks(w, n)) {
    std::vector<int> letters;
    for (int l : w) {
      const int j = std::abs(l);
      if (j >= lo && j < hi) letters.push_back(l > 0 ? j - lo + 1 : -(j - lo + 1));
    }
    if (!letters.empty()) total += gl_block_signature(letters, hi - lo + 1);
  }
  return total;
}

}  // namespace braidnorm::testing
