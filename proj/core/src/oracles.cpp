#include "mzv/oracles.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cache_util.hpp"
#include "mzv/operators.hpp"
#include "mzv/rational.hpp"

namespace mzv {

namespace {

// Residues of finite MZVs are pure in (index, p); memoize across sweep
// points so repeated words cost one DP each.
std::mutex g_zeta_a_mu;
std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t,
                   detail::PairHash>
    g_zeta_a_cache;

// Depth-wise prefix-sum recurrence over 0 < n_1 < ... < n_r <= N:
// g_1(m) = sum_{n<=m} n^{-k_1}; g_j(m) = sum_{n<=m} n^{-k_j} g_{j-1}(n-1).
template <typename F>
F mzv_truncated(const std::vector<unsigned>& parts, std::uint64_t N) {
  std::vector<F> prev(N + 1, F(0));  // prev[m] = g_{j-1}(m)
  std::vector<F> cur(N + 1, F(0));
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const F* below = prev.data();
    for (std::uint64_t m = 1; m <= N; ++m) {
      F term = std::pow(F(m), -F(parts[j]));
      if (j > 0) term *= below[m - 1];
      cur[m] = cur[m - 1] + term;
    }
    std::swap(prev, cur);
    std::fill(cur.begin(), cur.end(), F(0));
  }
  return prev[N];
}

}  // namespace

double mzv_numeric(const Index& k, const NumericConfig& cfg) {
  if (!k.admissible())
    throw std::domain_error("divergent series: index " + k.str() +
                            " is not admissible");
  if (cfg.truncation < 10)
    throw std::invalid_argument("truncation bound must be at least 10");
  if (cfg.precision_bits > 53)
    return static_cast<double>(
        mzv_truncated<long double>(k.parts(), cfg.truncation));
  return mzv_truncated<double>(k.parts(), cfg.truncation);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo,
                                           std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo < 2 ? 2 : lo; p <= hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

void clear_finite_caches() {
  std::lock_guard<std::mutex> lock(g_zeta_a_mu);
  g_zeta_a_cache.clear();
}

FiniteValue zeta_a_mod_p(const Index& k, std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p <= k.max_part())
    throw std::invalid_argument("prime " + std::to_string(p) +
                                " must exceed the largest index part of " +
                                k.str());
  const auto key = std::make_pair(index_to_word(k).key(), p);
  const std::uint64_t residue =
      detail::cached(g_zeta_a_cache, g_zeta_a_mu, key, [&] {
        // inv[n] = n^{-1} mod p for 1 <= n < p, by the standard recurrence.
        std::vector<std::uint64_t> inv(p, 0);
        if (p > 1) inv[1] = 1;
        for (std::uint64_t n = 2; n < p; ++n)
          inv[n] = (p - (p / n) % p) * inv[p % n] % p;
        // Same prefix-sum recurrence as the numeric oracle, over n_i < p.
        const auto& parts = k.parts();
        std::vector<std::uint64_t> prev(p, 0), cur(p, 0);
        for (std::size_t j = 0; j < parts.size(); ++j) {
          for (std::uint64_t m = 1; m < p; ++m) {
            std::uint64_t term = pow_mod(inv[m], parts[j], p);
            if (j > 0) term = term * prev[m - 1] % p;
            cur[m] = (cur[m - 1] + term) % p;
          }
          std::swap(prev, cur);
          std::fill(cur.begin(), cur.end(), 0);
        }
        return prev[p - 1];
      });
  return FiniteValue{p, residue};
}

FiniteValue zf_mod_p(const NcPoly& poly, std::uint64_t p,
                     const mpq_class& c_val) {
  if (!is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!poly.in_y_h())
    throw std::domain_error(
        "finite evaluation needs every word to begin with y");
  const std::uint64_t c_res = rational_mod_p(c_val, p);
  std::uint64_t acc = 0;
  for (const auto& [w, coeff] : poly.sorted_terms()) {
    const std::uint64_t cv = coeff.eval_mod_p(c_res, p);
    if (cv == 0) continue;
    const std::uint64_t zv = zeta_a_mod_p(word_to_index(w), p).residue;
    acc = (acc + cv * zv) % p;
  }
  return FiniteValue{p, acc};
}

VerificationReport verify_relation_numeric(const Relation& r,
                                           const mpq_class& c_val,
                                           const NumericConfig& cfg,
                                           double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  double value = 0.0;
  for (const auto& [idx, coeff] : r.combination)
    value += coeff.eval(c_val).get_d() * mzv_numeric(idx, cfg);
  bool c_free = true;
  for (const auto& [idx, coeff] : r.combination)
    if (!coeff.is_constant()) c_free = false;
  VerificationReport rep;
  rep.source = r.family;
  for (const Word& g : r.generators) rep.source += " " + g.str();
  rep.n = r.n;
  rep.c_value = c_free ? std::string() : rational_to_string(c_val);
  rep.N_or_p = cfg.truncation;
  rep.is_finite = false;
  rep.magnitude = std::abs(value);
  rep.threshold = tol;
  rep.pass = rep.magnitude <= tol;
  return rep;
}

VerificationReport verify_finite_main_identity(unsigned n, Word w, std::uint64_t p,
                                    const mpq_class& c_val) {
  if (n == 0) throw std::invalid_argument("operator index n must be >= 1");
  if (w.empty() || w.first() != Letter::Y || w.last() != Letter::X)
    throw std::invalid_argument("generator must begin with y and end with x: " +
                                (w.empty() ? std::string("1") : w.str()));
  if (p <= w.degree() + n + 2)
    throw std::invalid_argument(
        "prime " + std::to_string(p) + " not above the exclusion bound " +
        std::to_string(w.degree() + n + 2) + " for this sweep point");
  const NcPoly lhs_poly = quasi_del(n, w).right_divide_by_x();
  const std::uint64_t lhs = zf_mod_p(lhs_poly, p, c_val).residue;
  const std::uint64_t wf =
      zf_mod_p(NcPoly::monomial(w.drop_back(1)), p, c_val).residue;
  const std::uint64_t qf = zf_mod_p(q_n_recursive(n), p, c_val).residue;
  const std::uint64_t rhs = wf * qf % p;
  VerificationReport rep;
  rep.source = "main-identity " + w.str();
  rep.n = n;
  rep.c_value = rational_to_string(c_val);
  rep.N_or_p = p;
  rep.is_finite = true;
  rep.lhs_residue = lhs;
  rep.rhs_residue = rhs;
  rep.residue = (lhs + p - rhs) % p;
  rep.pass = rep.residue == 0;
  return rep;
}

}  // namespace mzv
