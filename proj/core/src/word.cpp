#include "uaw/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace uaw {

const char* letter_name(Letter l) {
  switch (l) {
    case Letter::A: return "A";
    case Letter::B: return "B";
    case Letter::C: return "C";
    case Letter::al: return "al";
    case Letter::be: return "be";
    case Letter::ga: return "ga";
  }
  return "?";
}

std::optional<Letter> letter_from_name(std::string_view s) {
  for (Letter l : kLetters)
    if (s == letter_name(l)) return l;
  return std::nullopt;
}

std::string word_str(const Word& w) {
  std::string out;
  for (Letter l : w) out += letter_name(l);
  return out;
}

Word word_parse(std::string_view s) {
  Word w;
  std::size_t i = 0;
  while (i < s.size()) {
    std::optional<Letter> two = i + 1 < s.size() ? letter_from_name(s.substr(i, 2)) : std::nullopt;
    if (two) {
      w.push_back(*two);
      i += 2;
      continue;
    }
    std::optional<Letter> one = letter_from_name(s.substr(i, 1));
    if (!one) throw std::invalid_argument("unknown letter at offset " + std::to_string(i));
    w.push_back(*one);
    ++i;
  }
  return w;
}

int inversions(const Word& w) {
  int n = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++n;
  return n;
}

bool is_irreducible(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

std::optional<std::size_t> first_inversion(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) return i;
  return std::nullopt;
}

std::optional<std::size_t> last_inversion(const Word& w) {
  for (std::size_t i = w.size(); i-- > 1;)
    if (w[i - 1] > w[i]) return i - 1;
  return std::nullopt;
}

bool order_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  Word sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return inversions(a) < inversions(b);
}

}  // namespace uaw
