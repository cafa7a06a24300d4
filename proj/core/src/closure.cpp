#include "braidnorm/closure.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "braidnorm/permutation.hpp"

namespace braidnorm {

std::size_t closure_components(const BraidWord& w, int n) {
  return underlying_permutation(w, n).cycle_count();
}

std::vector<std::pair<int, int>> split_blocks(const BraidWord& w, int n) {
  if (n < width(w)) throw std::invalid_argument("strand count too small");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int l : w) used[static_cast<std::size_t>(std::abs(l))] = true;
  std::vector<std::pair<int, int>> blocks;
  int lo = 1;
  for (int gap = 1; gap < n; ++gap) {
    if (!used[static_cast<std::size_t>(gap)]) {
      blocks.emplace_back(lo, gap);
      lo = gap + 1;
    }
  }
  blocks.emplace_back(lo, n);
  return blocks;
}

// Band-band linking of the generator loops. Entries were normalized once
// against the positive trefoil (-2) and positive Hopf link (-1) and are
// enforced by the oracle tests, not trusted a priori:
//   self:                -(sign_above + sign_below)/2
//   same column, shared band of sign m:       upper->lower (m+1)/2,
//                                             lower->upper (m-1)/2
//   adjacent columns, interleaved heights: the left-column loop carries the
//   whole entry, +1 when it starts above the right-column loop, -1 when it
//   starts below; nested or disjoint heights do not link.
SeifertMatrix seifert_matrix(const BraidWord& w, int n) {
  if (n < width(w)) throw std::invalid_argument("strand count too small");
  std::map<int, std::vector<std::pair<int, int>>> columns;  // col -> (pos, sign)
  for (std::size_t t = 0; t < w.size(); ++t) {
    const int l = w[static_cast<std::size_t>(t)];
    columns[std::abs(l)].emplace_back(static_cast<int>(t), l > 0 ? 1 : -1);
  }

  SeifertMatrix result;
  for (const auto& [col, bands] : columns)
    for (std::size_t j = 0; j + 1 < bands.size(); ++j)
      result.basis.push_back({col, bands[j].first, bands[j + 1].first});

  const int r = static_cast<int>(result.basis.size());
  result.entries = IntMatrix(r);
  auto sign_at = [&](int pos) { return w[static_cast<std::size_t>(pos)] > 0 ? 1 : -1; };

  for (int a = 0; a < r; ++a) {
    const SeifertGenerator& x = result.basis[static_cast<std::size_t>(a)];
    result.entries.at(a, a) = -(sign_at(x.band_above) + sign_at(x.band_below)) / 2;
    for (int b = a + 1; b < r; ++b) {
      const SeifertGenerator& y = result.basis[static_cast<std::size_t>(b)];
      if (x.column == y.column && x.band_below == y.band_above) {
        const int m = sign_at(x.band_below);
        result.entries.at(a, b) += (m + 1) / 2;
        result.entries.at(b, a) += (m - 1) / 2;
      } else if (std::abs(x.column - y.column) == 1) {
        const SeifertGenerator& left = (x.column < y.column) ? x : y;
        const SeifertGenerator& right = (x.column < y.column) ? y : x;
        const int il = (x.column < y.column) ? a : b;
        const int ir = (x.column < y.column) ? b : a;
        if (left.band_above < right.band_above &&
            right.band_above < left.band_below &&
            left.band_below < right.band_below) {
          result.entries.at(il, ir) += 1;
        } else if (right.band_above < left.band_above &&
                   left.band_above < right.band_below &&
                   right.band_below < left.band_below) {
          result.entries.at(il, ir) += -1;
        }
      }
    }
  }
  return result;
}

}  // namespace braidnorm
