#include "mzv/word.hpp"

#include <algorithm>

namespace mzv {

std::vector<Word> enumerate_words(unsigned degree) {
  // Guard against accidental exponential blowup; callers stay far below.
  if (degree > 30)
    throw std::length_error("word enumeration degree too large");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << degree);
  // Counting i with bit j = letter j yields all words; sort for lex order.
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << degree); ++i)
    out.push_back(
        Word::from_key(i | (std::uint64_t{degree} << Word::kMaxDegree)));
  std::sort(out.begin(), out.end(),
            [](Word a, Word b) { return lex_less(a, b); });
  return out;
}

std::vector<Word> enumerate_words_up_to(unsigned max_degree) {
  std::vector<Word> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto layer = enumerate_words(d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace mzv
