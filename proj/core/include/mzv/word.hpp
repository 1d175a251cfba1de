#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

enum class Letter : unsigned char { X = 0, Y = 1 };

// A monomial of Q<x,y>: a word over the two-letter alphabet, degree <= 56.
// Letter i (0 = leftmost) is stored in bit i of a 64-bit field, y = 1, x = 0;
// the degree lives in the top byte of key(), so key() is a total injection.
class Word {
 public:
  static constexpr unsigned kMaxDegree = 56;

  constexpr Word() = default;  // the empty word, the unit of Q<x,y>

  static constexpr Word x() { return Word(0, 1); }
  static constexpr Word y() { return Word(1, 1); }

  static Word from_letters(const std::vector<Letter>& letters) {
    check_degree(static_cast<unsigned>(letters.size()));
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (letters[i] == Letter::Y) bits |= std::uint64_t{1} << i;
    return Word(bits, static_cast<unsigned>(letters.size()));
  }

  // Inverse of key(); no validation beyond the degree bound.
  static Word from_key(std::uint64_t key) {
    const auto len = static_cast<unsigned>(key >> kMaxDegree);
    check_degree(len);
    return Word(key & low_mask(kMaxDegree), len);
  }

  // Parses a string over 'x','y'; the empty string is the unit.
  static Word parse(std::string_view text) {
    check_degree(static_cast<unsigned>(text.size()));
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == 'y')
        bits |= std::uint64_t{1} << i;
      else if (text[i] != 'x')
        throw std::invalid_argument("word may contain only 'x' and 'y': " +
                                    std::string(text));
    }
    return Word(bits, static_cast<unsigned>(text.size()));
  }

  constexpr unsigned degree() const { return len_; }
  constexpr bool empty() const { return len_ == 0; }

  constexpr Letter letter(unsigned i) const {
    return static_cast<Letter>((bits_ >> i) & 1u);
  }
  constexpr Letter first() const { return letter(0); }
  constexpr Letter last() const { return letter(len_ - 1); }

  constexpr unsigned count_y() const {
    return static_cast<unsigned>(std::popcount(bits_));
  }

  // Bit mask of the positions holding y (resp. x).
  constexpr std::uint64_t y_mask() const { return bits_; }
  constexpr std::uint64_t x_mask() const { return ~bits_ & low_mask(len_); }

  Word concat(Word rhs) const {
    check_degree(len_ + rhs.len_);
    return Word(bits_ | (rhs.bits_ << len_), len_ + rhs.len_);
  }

  Word append(Letter u) const {
    check_degree(len_ + 1);
    return Word(bits_ | (std::uint64_t{static_cast<unsigned>(u)} << len_),
                len_ + 1);
  }

  // First k letters.
  constexpr Word prefix(unsigned k) const { return Word(bits_ & low_mask(k), k); }
  // Word with the first k letters removed.
  constexpr Word drop_front(unsigned k) const {
    return Word(bits_ >> k, len_ - k);
  }
  // Word with the last k letters removed.
  constexpr Word drop_back(unsigned k) const { return prefix(len_ - k); }

  constexpr std::uint64_t key() const {
    return bits_ | (std::uint64_t{len_} << kMaxDegree);
  }

  std::string str() const {
    std::string s(len_, 'x');
    for (unsigned i = 0; i < len_; ++i)
      if (letter(i) == Letter::Y) s[i] = 'y';
    return s;
  }

  friend constexpr bool operator==(Word a, Word b) {
    return a.bits_ == b.bits_ && a.len_ == b.len_;
  }

  // Lexicographic with x < y, restricted to equal-degree words.
  friend constexpr bool lex_less(Word a, Word b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    return (a.bits_ >> std::countr_zero(diff) & 1u) == 0;
  }

  // Shortlex: by degree, then lexicographically with x < y.
  friend constexpr bool operator<(Word a, Word b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return lex_less(a, b);
  }

 private:
  constexpr Word(std::uint64_t bits, unsigned len) : bits_(bits), len_(len) {}

  static constexpr std::uint64_t low_mask(unsigned n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  static constexpr void check_degree(unsigned n) {
    if (n > kMaxDegree) throw std::length_error("word degree exceeds 56");
  }

  std::uint64_t bits_ = 0;
  unsigned len_ = 0;
};

// All 2^degree words of the given degree, in lexicographic order (x < y).
std::vector<Word> enumerate_words(unsigned degree);

// All words of degree 0..max_degree, shortlex order.
std::vector<Word> enumerate_words_up_to(unsigned max_degree);

}  // namespace mzv

template <>
struct std::hash<mzv::Word> {
  std::size_t operator()(mzv::Word w) const noexcept {
    return std::hash<std::uint64_t>{}(w.key());
  }
};
