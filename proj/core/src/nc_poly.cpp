#include "mzv/nc_poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mzv {

NcPoly NcPoly::monomial(Word w, ParamPoly coeff) {
  NcPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(w.key(), std::move(coeff));
  return p;
}

NcPoly NcPoly::z() {
  NcPoly p = monomial(Word::x());
  p += monomial(Word::y());
  return p;
}

const ParamPoly& NcPoly::coefficient(Word w) const {
  static const ParamPoly kZero;
  auto it = terms_.find(w.key());
  return it == terms_.end() ? kZero : it->second;
}

void NcPoly::add_term(Word w, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w.key(), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(Word::from_key(k), c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(Word::from_key(k), -c);
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

NcPoly NcPoly::scaled(const ParamPoly& s) const {
  if (s.is_zero()) return NcPoly();
  NcPoly r;
  for (const auto& [k, c] : terms_) {
    ParamPoly sc = c * s;
    if (!sc.is_zero()) r.terms_.emplace(k, std::move(sc));
  }
  return r;
}

NcPoly NcPoly::scaled(const mpq_class& s) const {
  return scaled(ParamPoly::constant(s));
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(Word::from_key(ka).concat(Word::from_key(kb)), ca * cb);
  return r;
}

NcPoly NcPoly::left_mul(Word w) const {
  NcPoly r;
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(w.concat(Word::from_key(k)).key(), c);
  return r;
}

NcPoly NcPoly::right_mul(Word w) const {
  NcPoly r;
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(Word::from_key(k).concat(w).key(), c);
  return r;
}

NcPoly NcPoly::substitute_c(const mpq_class& c_value) const {
  NcPoly r;
  for (const auto& [k, c] : terms_) {
    mpq_class v = c.eval(c_value);
    if (v != 0) r.terms_.emplace(k, ParamPoly::constant(std::move(v)));
  }
  return r;
}

std::vector<std::pair<unsigned, NcPoly>> NcPoly::expand_in_c() const {
  std::map<unsigned, NcPoly> layers;
  for (const auto& [k, c] : terms_)
    for (const auto& [e, q] : c.terms())
      layers[e].terms_.emplace(k, ParamPoly::constant(q));
  std::vector<std::pair<unsigned, NcPoly>> out;
  out.reserve(layers.size());
  for (auto& [e, layer] : layers) out.emplace_back(e, std::move(layer));
  return out;
}

NcPoly NcPoly::right_divide_by_x() const {
  NcPoly r;
  for (const auto& [k, c] : terms_) {
    Word w = Word::from_key(k);
    if (w.empty() || w.last() != Letter::X)
      throw std::domain_error("not divisible by x on the right: " +
                              (w.empty() ? std::string("1") : w.str()));
    r.terms_.emplace(w.drop_back(1).key(), c);
  }
  return r;
}

bool NcPoly::in_y_h() const {
  for (const auto& [k, c] : terms_) {
    Word w = Word::from_key(k);
    if (w.empty() || w.first() != Letter::Y) return false;
  }
  return true;
}

bool NcPoly::in_y_h_x() const {
  for (const auto& [k, c] : terms_) {
    Word w = Word::from_key(k);
    if (w.empty() || w.first() != Letter::Y || w.last() != Letter::X)
      return false;
  }
  return true;
}

std::vector<std::pair<Word, ParamPoly>> NcPoly::sorted_terms() const {
  std::vector<std::pair<Word, ParamPoly>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(Word::from_key(k), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

// Renders coeff * name where name is a word or index ("1" when empty). The
// bool is the sign to splice into the surrounding " + " / " - " join.
std::pair<std::string, bool> render_term(const ParamPoly& coeff,
                                         const std::string& name) {
  if (coeff.is_constant()) {
    mpq_class q = coeff.constant_term();
    bool neg = q < 0;
    mpq_class a = neg ? mpq_class(-q) : q;
    std::string body;
    if (a == 1)
      body = name.empty() ? "1" : name;
    else
      body = a.get_str() + name;
    return {body, neg};
  }
  return {"(" + coeff.str() + ")" + (name.empty() ? "1" : name), false};
}

}  // namespace

std::string render_combination(
    const std::vector<std::pair<std::string, ParamPoly>>& named_terms) {
  if (named_terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [name, coeff] : named_terms) {
    auto [body, neg] = render_term(coeff, name);
    if (first) {
      s = neg ? "-" + body : body;
      first = false;
    } else {
      s += neg ? " - " : " + ";
      s += body;
    }
  }
  return s;
}

std::string NcPoly::str() const {
  std::vector<std::pair<std::string, ParamPoly>> named;
  for (const auto& [w, c] : sorted_terms()) named.emplace_back(w.str(), c);
  return render_combination(named);
}

}  // namespace mzv
