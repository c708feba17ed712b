#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uaw {

// Generators in their fixed order A < B < C < al < be < ga. The enum values
// are the order, so letter comparisons are integer comparisons.
enum class Letter : std::uint8_t { A = 0, B = 1, C = 2, al = 3, be = 4, ga = 5 };

inline constexpr Letter kLetters[6] = {Letter::A, Letter::B, Letter::C,
                                       Letter::al, Letter::be, Letter::ga};

const char* letter_name(Letter l);                         // "A" ... "ga"
std::optional<Letter> letter_from_name(std::string_view);  // exact name only
inline bool is_latin(Letter l) { return l < Letter::al; }

// A word in the free monoid on the six generators.
using Word = std::vector<Letter>;

std::string word_str(const Word& w);  // "CBA", "ABga", "" for the empty word

// Inverse of word_str; throws std::invalid_argument (with offset in message)
// on anything that is not a concatenation of letter names.
Word word_parse(std::string_view s);

// number of pairs i < j with w[i] > w[j]
int inversions(const Word& w);

// non-decreasing, i.e. already a PBW word
bool is_irreducible(const Word& w);

// index of the leftmost / rightmost adjacent inverted pair (position of the
// pair's first letter), or nullopt when irreducible
std::optional<std::size_t> first_inversion(const Word& w);
std::optional<std::size_t> last_inversion(const Word& w);

// Strict partial order used to certify rewrite rules decrease their input:
// shorter words are smaller; words of equal length compare only when they are
// anagrams, by inversion count.
bool order_less(const Word& a, const Word& b);

}  // namespace uaw
