#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace mzv {

// Polynomial in the single parameter c with rational coefficients. Terms are
// kept sorted by ascending exponent with no zero coefficients, so equality is
// structural.
class ParamPoly {
 public:
  ParamPoly() = default;  // zero

  static ParamPoly constant(mpq_class v);
  static ParamPoly one() { return constant(1); }
  // coeff * c^exponent
  static ParamPoly c_power(unsigned exponent, mpq_class coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  // Constant term (valid for any polynomial).
  mpq_class constant_term() const {
    return (!terms_.empty() && terms_[0].first == 0) ? terms_[0].second
                                                     : mpq_class(0);
  }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.back().first; }

  // Coefficient of c^exponent (zero if absent).
  mpq_class coefficient(unsigned exponent) const;

  const std::vector<std::pair<unsigned, mpq_class>>& terms() const {
    return terms_;
  }

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) {
    a += b;
    return a;
  }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) {
    a -= b;
    return a;
  }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly operator-() const;
  ParamPoly scaled(const mpq_class& s) const;

  mpq_class eval(const mpq_class& c_value) const;
  // Evaluation in F_p; throws std::domain_error if a denominator vanishes.
  std::uint64_t eval_mod_p(std::uint64_t c_residue, std::uint64_t p) const;

  // "0", "1", "c", "-c", "1+c", "3/2c^2", "1+2c+c^2", "-1/2c+1/2c^2".
  std::string str() const;

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  std::vector<std::pair<unsigned, mpq_class>> terms_;
};

}  // namespace mzv
