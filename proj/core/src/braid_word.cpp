#include "braidnorm/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace braidnorm {

namespace {

void check_letter(int l) {
  if (l == 0) throw std::invalid_argument("braid letter must be nonzero");
  if (l > kMaxStrandIndex || l < -kMaxStrandIndex)
    throw std::out_of_range("braid letter exceeds the strand index bound");
}

void reduce_into(std::vector<int>& out, const std::vector<int>& in) {
  for (int l : in) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
}

}  // namespace

BraidWord::BraidWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) check_letter(l);
}

BraidWord::BraidWord(std::initializer_list<int> letters)
    : BraidWord(std::vector<int>(letters)) {}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  reduce_into(out, w.letters());
  return BraidWord(std::move(out));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(-*it);
  return BraidWord(std::move(out));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  reduce_into(out, a.letters());
  reduce_into(out, b.letters());
  return BraidWord(std::move(out));
}

BraidWord concat(const BraidWord& a, const BraidWord& b, const BraidWord& c) {
  return concat(concat(a, b), c);
}

BraidWord concat(std::initializer_list<const BraidWord*> parts) {
  std::vector<int> out;
  for (const BraidWord* p : parts) reduce_into(out, p->letters());
  return BraidWord(std::move(out));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  const BraidWord gi = inverse(g);
  return concat({&g, &w, &gi});
}

BraidWord commutator(const BraidWord& f, const BraidWord& g) {
  const BraidWord fi = inverse(f);
  const BraidWord gi = inverse(g);
  return concat({&f, &g, &fi, &gi});
}

BraidWord power(const BraidWord& w, int k) {
  if (k < 0) throw std::invalid_argument("power expects k >= 0");
  std::vector<int> out;
  out.reserve(w.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) reduce_into(out, w.letters());
  return BraidWord(std::move(out));
}

BraidWord mirror(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w) out.push_back(-l);
  return BraidWord(std::move(out));
}

BraidWord shift(const BraidWord& w, int k, int max_index) {
  if (k < 0) throw std::invalid_argument("shift expects k >= 0");
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w) {
    int idx = std::abs(l) + k;
    if (idx > max_index)
      throw std::out_of_range("shift exceeds the strand index bound");
    out.push_back(l > 0 ? idx : -idx);
  }
  return BraidWord(std::move(out));
}

int width(const BraidWord& w) noexcept {
  int m = 0;
  for (int l : w) m = std::max(m, std::abs(l));
  return m + 1;
}

long exponent_sum(const BraidWord& w) noexcept {
  long e = 0;
  for (int l : w) e += (l > 0) ? 1 : -1;
  return e;
}

std::optional<std::pair<int, int>> support(const BraidWord& w) noexcept {
  if (w.empty()) return std::nullopt;
  int lo = kMaxStrandIndex + 1, hi = 0;
  for (int l : w) {
    int i = std::abs(l);
    lo = std::min(lo, i);
    hi = std::max(hi, i + 1);
  }
  return std::make_pair(lo, hi);
}

BraidWord parse_braid_word(std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0, token_index = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    ++token_index;
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw std::invalid_argument("braid word parse error at token " +
                                  std::to_string(token_index) + ": '" +
                                  std::string(tok) + "' is not an integer");
    if (value == 0)
      throw std::invalid_argument("braid word parse error at token " +
                                  std::to_string(token_index) +
                                  ": letter 0 is not a generator");
    letters.push_back(value);
    pos = end;
  }
  return free_reduce(BraidWord(std::move(letters)));
}

std::string to_string(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

}  // namespace braidnorm
