#include "mzv/relations.hpp"

#include <map>
#include <stdexcept>

#include "mzv/operators.hpp"
#include "mzv/products.hpp"

namespace mzv {

std::vector<Word> enumerate_admissible(unsigned weight) {
  if (weight < 2)
    throw std::invalid_argument("no admissible words below weight 2");
  // Fix the forced first y and last x; enumerate the middle letters.
  std::vector<Word> out;
  for (Word mid : enumerate_words(weight - 2))
    out.push_back(Word::y().concat(mid).append(Letter::X));
  return out;
}

std::vector<std::pair<Index, ParamPoly>> to_zeta_combination(const NcPoly& p) {
  std::vector<std::pair<Index, ParamPoly>> out;
  for (const auto& [w, c] : p.sorted_terms()) {
    if (w.empty() || w.first() != Letter::Y || w.last() != Letter::X)
      throw std::domain_error("word is not an admissible zeta monomial: " +
                              (w.empty() ? std::string("1") : w.str()));
    out.emplace_back(word_to_index(w), c);
  }
  return out;
}

Relation quasi_derivation_relation(unsigned n, Word w) {
  if (n == 0) throw std::invalid_argument("operator index n must be >= 1");
  if (w.empty() || w.first() != Letter::Y || w.last() != Letter::X)
    throw std::invalid_argument("generator must begin with y and end with x: " +
                                (w.empty() ? std::string("1") : w.str()));
  NcPoly image = quasi_del(n, w);
  if (!image.in_y_h_x())
    throw std::logic_error("quasi-derivation image escaped y h x on " +
                           w.str());
  // Independent path: del_n^(c)(v x) = (v <> q_n) x with v the x-stripped
  // generator. Disagreement means the library is internally inconsistent.
  NcPoly via_diamond =
      diamond(NcPoly::monomial(w.drop_back(1)), q_n_recursive(n))
          .right_mul(Word::x());
  if (!(image == via_diamond))
    throw std::logic_error(
        "internal consistency failure: adjoint recursion and diamond path "
        "disagree on n=" +
        std::to_string(n) + ", w=" + w.str());
  Relation r;
  r.family = "qd";
  r.n = n;
  r.generators = {w};
  r.weight = w.degree() + n;
  r.combination = to_zeta_combination(image);
  return r;
}

Relation kawashima_linear_relation(Word w1, Word w2) {
  if (w1.empty() || w1.first() != Letter::Y)
    throw std::invalid_argument("generator must begin with y: " +
                                (w1.empty() ? std::string("1") : w1.str()));
  if (w2.empty() || w2.first() != Letter::Y)
    throw std::invalid_argument("generator must begin with y: " +
                                (w2.empty() ? std::string("1") : w2.str()));
  NcPoly image = phi(harmonic(w1, w2)).right_mul(Word::x());
  if (!image.in_y_h_x())
    throw std::logic_error("linear-part image escaped y h x on " + w1.str() +
                           ", " + w2.str());
  Relation r;
  r.family = "kawashima";
  r.n = 0;
  r.generators = {w1, w2};
  r.weight = w1.degree() + w2.degree() + 1;
  r.combination = to_zeta_combination(image);
  return r;
}

std::vector<Relation> expand_relation_in_c(const Relation& r) {
  // Group the coefficient polynomials by power of c.
  std::map<unsigned, std::vector<std::pair<Index, ParamPoly>>> layers;
  for (const auto& [idx, coeff] : r.combination)
    for (const auto& [e, q] : coeff.terms())
      layers[e].emplace_back(idx, ParamPoly::constant(q));
  std::vector<Relation> out;
  for (auto& [e, comb] : layers) {
    Relation layer = r;
    layer.c_power = static_cast<int>(e);
    layer.combination = std::move(comb);
    out.push_back(std::move(layer));
  }
  return out;
}

std::string combination_str(
    const std::vector<std::pair<Index, ParamPoly>>& comb) {
  std::vector<std::pair<std::string, ParamPoly>> named;
  named.reserve(comb.size());
  for (const auto& [idx, coeff] : comb) named.emplace_back(idx.str(), coeff);
  return render_combination(named);
}

}  // namespace mzv
