#include "mzv/rational.hpp"

#include <stdexcept>
#include <string>

namespace mzv {

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  // mpq_class accepts "a/b" and plain integers; validate shape first so
  // garbage like "1/2/3" or "x" is rejected with a clear message.
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_str();  // canonical "num" or "num/den"
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
  // m < 2^32 keeps the products inside 64 bits.
  std::uint64_t r = 1 % m;
  x %= m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t rational_mod_p(const mpq_class& q, std::uint64_t p) {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class d = den % pz;
  if (d == 0)
    throw std::domain_error("denominator of " + q.get_str() +
                            " vanishes mod " + std::to_string(p));
  mpz_class n = num % pz;
  if (n < 0) n += pz;
  std::uint64_t nr = n.get_ui();
  std::uint64_t dr = d.get_ui();
  return nr * pow_mod(dr, p - 2, p) % p;
}

}  // namespace mzv
