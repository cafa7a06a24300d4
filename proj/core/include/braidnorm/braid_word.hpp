#ifndef BRAIDNORM_BRAID_WORD_HPP
#define BRAIDNORM_BRAID_WORD_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidnorm {

/// Default upper bound on strand indices; guards against runaway shifts.
inline constexpr int kMaxStrandIndex = 1 << 16;

/// A finitely supported word in the Artin generators. Letter +i encodes the
/// generator for strands (i, i+1), letter -i its inverse. The empty word is
/// the identity. Words are plain sequences: structural equality (operator==)
/// is equality of letter lists, not equality in the braid group.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<int> letters);
  BraidWord(std::initializer_list<int> letters);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  int operator[](std::size_t i) const noexcept { return letters_[i]; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Iterated cancellation of adjacent inverse pairs. Idempotent and
/// length-nonincreasing; represents the same element.
BraidWord free_reduce(const BraidWord& w);

/// w^{-1}: reversed word with all letters negated.
BraidWord inverse(const BraidWord& w);

/// Concatenation followed by free reduction.
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b, const BraidWord& c);
BraidWord concat(std::initializer_list<const BraidWord*> parts);

/// w^g := g w g^{-1}, freely reduced.
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

/// [f, g] := f g f^{-1} g^{-1}, freely reduced.
BraidWord commutator(const BraidWord& f, const BraidWord& g);

/// w^k for k >= 0, freely reduced.
BraidWord power(const BraidWord& w, int k);

/// Every letter negated; the closure of the mirror word is the mirror link.
BraidWord mirror(const BraidWord& w);

/// Translate every letter by k strands: letter (+/-)i becomes (+/-)(i+k).
/// Throws std::out_of_range if an index would exceed max_index.
BraidWord shift(const BraidWord& w, int k, int max_index = kMaxStrandIndex);

/// Minimal n such that w is representable in B_n; the empty word has width 1.
int width(const BraidWord& w) noexcept;

/// Sum of letter signs: the image under abelianization B_inf -> Z.
/// Vanishes exactly on the commutator subgroup.
long exponent_sum(const BraidWord& w) noexcept;

/// Smallest strand interval [lo, hi] containing every strand touched by a
/// letter of w, or nullopt for the empty word.
std::optional<std::pair<int, int>> support(const BraidWord& w) noexcept;

/// Parse the text format: whitespace-separated signed integers, e.g. "1 -2".
/// Empty and whitespace-only input is the identity. Throws
/// std::invalid_argument naming the offending token and its (1-based)
/// position for "0" or non-integer tokens.
BraidWord parse_braid_word(std::string_view text);

/// Inverse of parse_braid_word: letters separated by single spaces.
std::string to_string(const BraidWord& w);

}  // namespace braidnorm

#endif
