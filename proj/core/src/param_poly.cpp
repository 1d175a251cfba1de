#include "mzv/param_poly.hpp"

#include <stdexcept>

#include "mzv/rational.hpp"

namespace mzv {

ParamPoly ParamPoly::constant(mpq_class v) {
  ParamPoly p;
  if (v != 0) p.terms_.emplace_back(0u, std::move(v));
  return p;
}

ParamPoly ParamPoly::c_power(unsigned exponent, mpq_class coeff) {
  ParamPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
  return p;
}

mpq_class ParamPoly::coefficient(unsigned exponent) const {
  for (const auto& [e, q] : terms_)
    if (e == exponent) return q;
  return 0;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  std::vector<std::pair<unsigned, mpq_class>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      mpq_class s = terms_[i].second + o.terms_[j].second;
      if (s != 0) merged.emplace_back(terms_[i].first, std::move(s));
      ++i, ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [e, q] : r.terms_) q = -q;
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  // Dense accumulation over exponents; degrees stay tiny (<= ~8).
  if (a.terms_.empty() || b.terms_.empty()) return ParamPoly();
  std::vector<mpq_class> acc(a.degree() + b.degree() + 1, mpq_class(0));
  for (const auto& [ea, qa] : a.terms_)
    for (const auto& [eb, qb] : b.terms_) acc[ea + eb] += qa * qb;
  ParamPoly out;
  for (unsigned e = 0; e < acc.size(); ++e)
    if (acc[e] != 0) out.terms_.emplace_back(e, std::move(acc[e]));
  return out;
}

ParamPoly ParamPoly::scaled(const mpq_class& s) const {
  if (s == 0) return ParamPoly();
  ParamPoly r = *this;
  for (auto& [e, q] : r.terms_) q *= s;
  return r;
}

mpq_class ParamPoly::eval(const mpq_class& c_value) const {
  mpq_class acc = 0, cpow = 1;
  unsigned cur = 0;
  for (const auto& [e, q] : terms_) {
    for (; cur < e; ++cur) cpow *= c_value;
    acc += q * cpow;
  }
  return acc;
}

std::uint64_t ParamPoly::eval_mod_p(std::uint64_t c_residue,
                                    std::uint64_t p) const {
  std::uint64_t acc = 0;
  for (const auto& [e, q] : terms_) {
    std::uint64_t t = rational_mod_p(q, p) * pow_mod(c_residue % p, e, p) % p;
    acc = (acc + t) % p;
  }
  return acc;
}

namespace {

// "1", "-1", "3/2" prefixes for a c-term; the bare constant keeps its value.
std::string coeff_prefix(const mpq_class& q) {
  if (q == 1) return "";
  if (q == -1) return "-";
  return q.get_str();
}

}  // namespace

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, q] : terms_) {
    std::string term;
    if (e == 0) {
      term = q.get_str();
    } else {
      term = coeff_prefix(q);
      term += 'c';
      if (e > 1) term += "^" + std::to_string(e);
    }
    if (first) {
      s = term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      s += term;  // "1-c" stays compact via the sign of the term itself
    } else {
      s += "+" + term;
    }
  }
  return s;
}

}  // namespace mzv
