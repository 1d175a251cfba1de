#include "mzv/index.hpp"

#include <charconv>

namespace mzv {

Index Index::parse(std::string_view text) {
  if (text.size() < 3 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("index literal must look like (1,2): " +
                                std::string(text));
  std::vector<unsigned> parts;
  const char* p = text.data() + 1;
  const char* end = text.data() + text.size() - 1;
  while (p < end) {
    unsigned v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{} || v == 0)
      throw std::invalid_argument("bad index part in: " + std::string(text));
    parts.push_back(v);
    p = next;
    if (p < end) {
      if (*p != ',')
        throw std::invalid_argument("bad separator in: " + std::string(text));
      ++p;
      if (p == end)
        throw std::invalid_argument("trailing comma in: " + std::string(text));
    }
  }
  return Index(std::move(parts));
}

std::string Index::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

Word index_to_word(const Index& k) {
  Word w;
  for (unsigned part : k.parts()) {
    w = w.append(Letter::Y);
    for (unsigned i = 1; i < part; ++i) w = w.append(Letter::X);
  }
  return w;
}

Index word_to_index(Word w) {
  if (w.empty() || w.first() != Letter::Y)
    throw std::domain_error("word does not encode an index (must begin with y): " +
                            w.str());
  std::vector<unsigned> parts;
  for (unsigned i = 0; i < w.degree(); ++i) {
    if (w.letter(i) == Letter::Y)
      parts.push_back(1);
    else
      ++parts.back();
  }
  return Index(std::move(parts));
}

}  // namespace mzv
