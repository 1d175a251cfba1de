#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/nc_poly.hpp"
#include "mzv/param_poly.hpp"
#include "mzv/word.hpp"

namespace mzv {

// A Q[c]-linear combination of admissible zeta indices asserted to be
// annihilated by the MZV map Z. Invariants: every index admissible, all of
// one weight, no zero coefficients.
struct Relation {
  std::string family;            // "qd" or "kawashima"
  unsigned n = 0;                // operator index (0 for kawashima)
  std::vector<Word> generators;  // one generator word for qd, two for kawashima
  unsigned weight = 0;           // common weight of all indices
  // -1 for a formal-c relation; otherwise the c-power this layer came from
  // (its coefficients are then constant).
  int c_power = -1;
  std::vector<std::pair<Index, ParamPoly>> combination;

  bool operator==(const Relation&) const = default;

  // Emission order: by weight, then operator index, then generator words.
  friend bool operator<(const Relation& a, const Relation& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.n != b.n) return a.n < b.n;
    return a.generators < b.generators;
  }
};

// All words of the given degree that begin with y and end with x, in
// lexicographic order (x < y). Count is 2^{weight-2}. weight >= 2 required.
std::vector<Word> enumerate_admissible(unsigned weight);

// The relation Z(del_n^(c)(w)) = 0 for admissible w. Computes quasi_del(n, w)
// via the adjoint recursion, checks it lies in y h x, and cross-checks the
// independent path (prefix <> q_n) x; any disagreement is a fatal
// std::logic_error (broken internal consistency, not bad input).
Relation quasi_derivation_relation(unsigned n, Word w);

// The linear-part Kawashima relation Z(phi(w1 * w2) x) = 0 for w1, w2 in y h
// (* the harmonic product). Words not beginning with y are rejected.
Relation kawashima_linear_relation(Word w1, Word w2);

// Word -> index conversion preserving coefficients; requires every word to
// begin with y and end with x, else throws std::domain_error naming the
// offending word.
std::vector<std::pair<Index, ParamPoly>> to_zeta_combination(const NcPoly& p);

// Splits r into one constant-coefficient relation per power of c present;
// each layer is itself a relation (validity for all c). Recombination with
// c^e weights reproduces r.
std::vector<Relation> expand_relation_in_c(const Relation& r);

// Renders "(1,2) - (3)" style text ("0" when empty); constant 1/-1
// coefficients print bare, other coefficients in parentheses.
std::string combination_str(
    const std::vector<std::pair<Index, ParamPoly>>& comb);

}  // namespace mzv
