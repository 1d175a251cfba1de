#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzv/param_poly.hpp"
#include "mzv/word.hpp"

namespace mzv {

// Element of the free noncommutative polynomial ring Q[c]<x,y>: a finite
// Q[c]-linear combination of words. Zero coefficients are never stored.
class NcPoly {
 public:
  NcPoly() = default;  // zero

  static NcPoly monomial(Word w, ParamPoly coeff = ParamPoly::one());
  static NcPoly unit() { return monomial(Word()); }
  // z = x + y, the expansion used everywhere z appears in formulas.
  static NcPoly z();

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of the word w (zero polynomial if absent).
  const ParamPoly& coefficient(Word w) const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) {
    a += b;
    return a;
  }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) {
    a -= b;
    return a;
  }
  NcPoly operator-() const;

  NcPoly scaled(const ParamPoly& s) const;
  NcPoly scaled(const mpq_class& s) const;

  // Concatenation product (bilinear extension of word concatenation).
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  NcPoly left_mul(Word w) const;   // w * this
  NcPoly right_mul(Word w) const;  // this * w

  // Adds coeff * w in place.
  void add_term(Word w, const ParamPoly& coeff);

  // Substitutes a rational value for c, giving a plain Q-linear combination.
  NcPoly substitute_c(const mpq_class& c_value) const;

  // Splits by powers of c: one (exponent, constant-coefficient layer) pair
  // per power of c present, ascending, no zero layers. Recombining with c^e
  // weights reproduces the polynomial.
  std::vector<std::pair<unsigned, NcPoly>> expand_in_c() const;

  // Strips one x from the right of every word; throws std::domain_error
  // naming the offending word if some word does not end in x.
  NcPoly right_divide_by_x() const;

  bool in_y_h() const;    // every word begins with y (unit has no such words)
  bool in_y_h_x() const;  // every word begins with y and ends with x

  // Terms in shortlex word order (degree, then x < y within a degree).
  std::vector<std::pair<Word, ParamPoly>> sorted_terms() const;

  // "yx + (1+c)yy"; constant coefficients print bare, others in parentheses;
  // the empty word prints as "1". Zero prints as "0".
  std::string str() const;

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  // Keyed by Word::key(); the map keeps iteration deterministic.
  std::map<std::uint64_t, ParamPoly> terms_;
};

// Shared "a + (1+c)b - 2d" renderer over pre-rendered term names (words or
// zeta indices); constant coefficients print bare with the sign pulled into
// the join, other coefficients parenthesized.
std::string render_combination(
    const std::vector<std::pair<std::string, ParamPoly>>& named_terms);

}  // namespace mzv
