#include "mzv/operators.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "cache_util.hpp"

namespace mzv {

namespace {

using detail::PairCache;
using detail::WordCache;
using detail::cached;

std::atomic<bool> g_theta_fault{false};

std::mutex g_theta_mu, g_qd_mu, g_q_mu, g_zpow_mu, g_acoeff_mu;
WordCache g_theta_cache;
PairCache g_qd_cache;                  // keyed by (n, word key)
std::vector<NcPoly> g_q_rec_cache;     // [n-1] holds q_n
std::vector<NcPoly> g_zpow_cache;      // [n] holds z^n expanded
std::map<std::vector<unsigned>, ParamPoly> g_acoeff_cache;

void require_positive_n(unsigned n) {
  if (n == 0) throw std::invalid_argument("operator index n must be >= 1");
}

NcPoly theta_word(Word w);

NcPoly theta_word_uncached(Word w) {
  // theta(u w') = u (z w' + theta(w') + c del_1(w')), theta(1) = 0.
  const Word u = w.prefix(1), wp = w.drop_front(1);
  NcPoly inner = NcPoly::z() * NcPoly::monomial(wp);
  inner += theta_word(wp);
  const mpq_class fault_sign = g_theta_fault.load() ? -1 : 1;
  inner += del_n(1, NcPoly::monomial(wp)).scaled(ParamPoly::c_power(1, fault_sign));
  return inner.left_mul(u);
}

NcPoly theta_word(Word w) {
  if (w.empty()) return NcPoly();
  return cached(g_theta_cache, g_theta_mu, w.key(),
                [&] { return theta_word_uncached(w); });
}

NcPoly quasi_del_word(unsigned n, Word w);

// Linear extension over a polynomial's words (coefficients pass through:
// every operator here is Q[c]-linear).
NcPoly quasi_del_poly(unsigned n, const NcPoly& p) {
  NcPoly r;
  for (const auto& [w, c] : p.sorted_terms())
    r += quasi_del_word(n, w).scaled(c);
  return r;
}

NcPoly quasi_del_word(unsigned n, Word w) {
  if (n == 1) return del_n(1, NcPoly::monomial(w));
  return cached(g_qd_cache, g_qd_mu,
                std::make_pair(std::uint64_t{n}, w.key()), [&] {
                  // D_n = (theta . D_{n-1} - D_{n-1} . theta) / (n-1)
                  NcPoly lhs = theta(quasi_del_word(n - 1, w));
                  NcPoly rhs = quasi_del_poly(n - 1, theta_word(w));
                  return (lhs - rhs).scaled(mpq_class(1, n - 1));
                });
}

ParamPoly a_coeff_memo(const std::vector<unsigned>& l) {
  if (l.size() == 1 && l[0] == 1) return ParamPoly::one();  // a(1) := 1
  {
    std::lock_guard lock(g_acoeff_mu);
    auto it = g_acoeff_cache.find(l);
    if (it != g_acoeff_cache.end()) return it->second;
  }
  ParamPoly sum;
  unsigned prefix = 0;  // l_1 + ... + l_{i-1}
  for (std::size_t i = 0; i < l.size(); ++i) {
    // factor (l_i - 1) - prefix * c
    ParamPoly factor = ParamPoly::constant(mpq_class(l[i]) - 1);
    factor += ParamPoly::c_power(1, -mpq_class(prefix));
    if (!factor.is_zero()) {
      std::vector<unsigned> sub = l;
      if (sub[i] == 1)
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      else
        --sub[i];
      sum += factor * a_coeff_memo(sub);
    }
    prefix += l[i];
  }
  std::lock_guard lock(g_acoeff_mu);
  return g_acoeff_cache.emplace(l, std::move(sum)).first->second;
}

// All compositions of n, lexicographic by construction order.
void compositions_of(unsigned n, std::vector<unsigned>& cur,
                     std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned first = 1; first <= n; ++first) {
    cur.push_back(first);
    compositions_of(n - first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

NcPoly cap_h(const NcPoly& p) {
  NcPoly r;
  for (const auto& [w, c] : p.sorted_terms())
    r.add_term(w, c.scaled(w.degree()));
  return r;
}

NcPoly z_power(unsigned n) {
  std::lock_guard lock(g_zpow_mu);
  if (g_zpow_cache.empty()) g_zpow_cache.push_back(NcPoly::unit());
  while (g_zpow_cache.size() <= n)
    g_zpow_cache.push_back(g_zpow_cache.back() * NcPoly::z());
  return g_zpow_cache[n];
}

NcPoly del_n(unsigned n, Word w) {
  require_positive_n(n);
  // del_n(letter) = +/- y z^{n-1} x; Leibniz over the positions of w.
  const NcPoly base =
      z_power(n - 1).left_mul(Word::y()).right_mul(Word::x());
  NcPoly r;
  for (unsigned i = 0; i < w.degree(); ++i) {
    NcPoly t = base.left_mul(w.prefix(i)).right_mul(w.drop_front(i + 1));
    if (w.letter(i) == Letter::Y) t = -t;
    r += t;
  }
  return r;
}

NcPoly del_n(unsigned n, const NcPoly& p) {
  require_positive_n(n);
  NcPoly r;
  for (const auto& [w, c] : p.sorted_terms()) r += del_n(n, w).scaled(c);
  return r;
}

NcPoly theta(Word w) { return theta_word(w); }

NcPoly theta(const NcPoly& p) {
  NcPoly r;
  for (const auto& [w, c] : p.sorted_terms()) r += theta_word(w).scaled(c);
  return r;
}

NcPoly theta_alt(const NcPoly& p, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("theta_alt sign must be +1 or -1");
  NcPoly shift = NcPoly::z() * p - p * NcPoly::z();
  return theta(p) + shift.scaled(mpq_class(sign, 2));
}

NcPoly theta_tilde(const NcPoly& p) {
  return theta(p) +
         cap_h(p).right_mul(Word::y()).scaled(ParamPoly::c_power(1));
}

NcPoly quasi_del(unsigned n, Word w) {
  require_positive_n(n);
  return quasi_del_word(n, w);
}

NcPoly quasi_del(unsigned n, const NcPoly& p) {
  require_positive_n(n);
  return quasi_del_poly(n, p);
}

NcPoly quasi_del_alt(unsigned n, const NcPoly& p, int sign) {
  require_positive_n(n);
  if (n == 1) return del_n(1, p);
  NcPoly lhs = theta_alt(quasi_del_alt(n - 1, p, sign), sign);
  NcPoly rhs = quasi_del_alt(n - 1, theta_alt(p, sign), sign);
  return (lhs - rhs).scaled(mpq_class(1, n - 1));
}

NcPoly q_n_recursive(unsigned n) {
  require_positive_n(n);
  std::lock_guard lock(g_q_mu);
  if (g_q_rec_cache.empty()) g_q_rec_cache.push_back(NcPoly::monomial(Word::y()));
  while (g_q_rec_cache.size() < n) {
    const auto m = static_cast<unsigned>(g_q_rec_cache.size());  // building q_{m+1}
    g_q_rec_cache.push_back(
        theta_tilde(g_q_rec_cache.back()).scaled(mpq_class(1, m)));
  }
  return g_q_rec_cache[n - 1];
}

NcPoly q_n_explicit(unsigned n) {
  require_positive_n(n);
  std::vector<std::vector<unsigned>> comps;
  std::vector<unsigned> cur;
  compositions_of(n, cur, comps);
  NcPoly sum;
  for (const auto& l : comps) {
    // w(l) = (-1)^s y z^{l_1 - 1} ... y z^{l_s - 1}, z expanded
    NcPoly w = NcPoly::unit();
    for (unsigned part : l)
      w = w.right_mul(Word::y()) * z_power(part - 1);
    if (l.size() % 2) w = -w;
    sum += w.scaled(a_coeff(Index(l)));
  }
  mpq_class fac = 1;
  for (unsigned i = 2; i < n; ++i) fac *= i;
  return sum.scaled(mpq_class(-1) / fac);
}

ParamPoly a_coeff(const Index& l) { return a_coeff_memo(l.parts()); }

void set_theta_fault(bool enabled) {
  g_theta_fault.store(enabled);
  clear_operator_caches();
}

void clear_operator_caches() {
  std::scoped_lock lock(g_theta_mu, g_qd_mu, g_q_mu);
  g_theta_cache.clear();
  g_qd_cache.clear();
  g_q_rec_cache.clear();
}

}  // namespace mzv
