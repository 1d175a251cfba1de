#pragma once

#include "mzv/index.hpp"
#include "mzv/nc_poly.hpp"
#include "mzv/word.hpp"

namespace mzv {

// Grading operator: H(w) = deg(w) * w, extended linearly.
NcPoly cap_h(const NcPoly& p);

// The word z^n with z = x + y expanded (2^n terms).
NcPoly z_power(unsigned n);

// Degree-n derivation determined by del_n(x) = y z^{n-1} x = -del_n(Y):
// del_n(u_1...u_d) = sum_i u_1...u_{i-1} del_n(u_i) u_{i+1}...u_d.
NcPoly del_n(unsigned n, Word w);
NcPoly del_n(unsigned n, const NcPoly& p);

// theta(u w') = u (z w' + theta(w') + c del_1(w')) for a letter u,
// theta(1) = 0. Satisfies the product rule
// theta(w w') = theta(w) w' + w theta(w') + c H(w) del_1(w').
NcPoly theta(Word w);
NcPoly theta(const NcPoly& p);

// theta shifted by the inner derivation w -> [z, w]/2 (sign +1) or its
// negative (sign -1): theta_alt(p) = theta(p) + sign*(z p - p z)/2. The
// commutator construction is insensitive to this shift.
NcPoly theta_alt(const NcPoly& p, int sign);

// theta~(w) = theta(w) + c H(w) y.
NcPoly theta_tilde(const NcPoly& p);

// Quasi-derivation del_n^(c) = (1/(n-1)!) ad(theta)^{n-1}(del_1), computed by
// D_1 = del_1, D_n(p) = (theta(D_{n-1}(p)) - D_{n-1}(theta(p))) / (n-1).
NcPoly quasi_del(unsigned n, Word w);
NcPoly quasi_del(unsigned n, const NcPoly& p);
// Same commutator recursion seeded with theta_alt instead of theta.
NcPoly quasi_del_alt(unsigned n, const NcPoly& p, int sign);

// q_1 = y, q_n = theta~(q_{n-1}) / (n-1).
NcPoly q_n_recursive(unsigned n);

// Closed form: q_n = -(1/(n-1)!) sum over compositions l of n of
// a(l) w(l), with w(l_1,...,l_s) = (-1)^s y z^{l_1-1} ... y z^{l_s-1}.
NcPoly q_n_explicit(unsigned n);

// Composition coefficients: a(1) = 1, and otherwise
// a(l) = sum_i (l_i - 1 - (l_1+...+l_{i-1}) c) a(l^(i)), where l^(i) drops
// part i if it equals 1 and decrements it otherwise.
ParamPoly a_coeff(const Index& l);

// Test hook: when set, the theta recursion flips the sign of its c del_1
// term (and all operator caches are dropped so the fault takes effect).
void set_theta_fault(bool enabled);

// Drops the operator memo tables (theta, quasi_del, q_n).
void clear_operator_caches();

}  // namespace mzv
