#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <string>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/nc_poly.hpp"
#include "mzv/relations.hpp"
#include "mzv/word.hpp"

namespace mzv {

// Truncated-sum settings for the real-number backend.
struct NumericConfig {
  std::uint64_t truncation = 100000;  // upper summation bound N; must be >= 10
  // 0 selects hardware double; values > 53 select long double (capped there).
  unsigned precision_bits = 0;
};

// One coordinate of the adele-like quotient: a residue mod a single prime.
struct FiniteValue {
  std::uint64_t p = 0;
  std::uint64_t residue = 0;  // reduced to [0, p)

  bool operator==(const FiniteValue&) const = default;
};

// Outcome of checking one relation instance against one backend.
struct VerificationReport {
  std::string source;      // e.g. "qd n=2 w=yx" or "main-identity n=2 w=yx"
  unsigned n = 0;          // operator index (0 when not applicable)
  std::string c_value;     // rational as "p/q" text ("" when c plays no role)
  std::uint64_t N_or_p = 0;
  bool is_finite = false;
  // Numeric: |combination value| and the tolerance it was tested against.
  double magnitude = 0.0;
  double threshold = 0.0;
  // Finite: residue of (lhs - rhs); for single-sided checks rhs is 0.
  std::uint64_t residue = 0;
  std::uint64_t lhs_residue = 0;
  std::uint64_t rhs_residue = 0;
  bool pass = false;  // |magnitude| <= threshold, or residue == 0
};

// Truncated nested sum over 0 < n_1 < ... < n_r <= N by the depth-wise
// prefix-sum recurrence, O(N * depth). Monotone nondecreasing in N. Requires
// an admissible index (std::domain_error otherwise) and N >= 10.
double mzv_numeric(const Index& k, const NumericConfig& cfg);

// Finite MZV: sum over 0 < n_1 < ... < n_r < p of the product of modular
// inverse powers, O(p * depth). Requires p prime and p > max part of k.
FiniteValue zeta_a_mod_p(const Index& k, std::uint64_t p);

// Linear extension of zeta_a_mod_p over a polynomial whose words all begin
// with y, specializing c at c_val first (denominator must be coprime to p).
FiniteValue zf_mod_p(const NcPoly& poly, std::uint64_t p,
                     const mpq_class& c_val);

// Evaluates r's combination with mzv_numeric at c = c_val; passes iff the
// absolute value is at most tol (> 0 required).
VerificationReport verify_relation_numeric(const Relation& r,
                                           const mpq_class& c_val,
                                           const NumericConfig& cfg,
                                           double tol);

// Finite main identity: Z_F(del_n^(c)(w) x^{-1}) = Z_F(w x^{-1}) Z_F(q_n)
// mod p. Requires admissible w and p > weight(w) + n + 2.
VerificationReport verify_finite_main_identity(unsigned n, Word w, std::uint64_t p,
                                    const mpq_class& c_val);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Drops the (index, p) residue memo; sweeps repopulate it on demand.
void clear_finite_caches();

}  // namespace mzv
