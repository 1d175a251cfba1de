#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mzv {

// Parses an exact rational from "p", "-p", or "p/q" (optional sign on the
// numerator only, q > 0). Throws std::invalid_argument on malformed input or
// a zero denominator.
mpq_class parse_rational(std::string_view text);

// Canonical "num/den" rendering; integral values render without "/den".
std::string rational_to_string(const mpq_class& q);

// Least nonnegative residue of q modulo the prime p. Throws std::domain_error
// when the denominator of q vanishes mod p.
std::uint64_t rational_mod_p(const mpq_class& q, std::uint64_t p);

// x^e mod m; requires m < 2^32 so intermediate products fit in 64 bits.
std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m);

}  // namespace mzv
