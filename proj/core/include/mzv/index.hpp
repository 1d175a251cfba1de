#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/word.hpp"

namespace mzv {

// A composition (k_1,...,k_r) of positive integers. Weight is the sum of the
// parts, depth the number of parts; admissible iff the last part is >= 2
// (exactly the indices of convergent nested zeta sums).
class Index {
 public:
  explicit Index(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("index must be nonempty");
    for (unsigned k : parts_)
      if (k == 0) throw std::invalid_argument("index parts must be positive");
  }

  // Parses "(1,2)" (whitespace-free, at least one part).
  static Index parse(std::string_view text);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned depth() const { return static_cast<unsigned>(parts_.size()); }

  unsigned weight() const {
    unsigned w = 0;
    for (unsigned k : parts_) w += k;
    return w;
  }

  bool admissible() const { return parts_.back() >= 2; }

  unsigned max_part() const {
    unsigned m = 0;
    for (unsigned k : parts_) m = k > m ? k : m;
    return m;
  }

  std::string str() const;  // "(1,2)"

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index& a, const Index& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<unsigned> parts_;
};

// The word y x^{k_1-1} y x^{k_2-1} ... y x^{k_r-1}; degree = weight.
Word index_to_word(const Index& k);

// Inverse of index_to_word. Requires a nonempty word beginning with y;
// throws std::domain_error otherwise.
Index word_to_index(Word w);

}  // namespace mzv
