#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mzv {

// Outcome of one symbolic identity suite.
struct SuiteResult {
  std::string name;
  unsigned long cases = 0;
  unsigned long failures = 0;
  std::string note;  // first counterexample, or extra info
};

// Degree/n bounds for the symbolic suites. Defaults complete in well under
// five minutes and match the documented CLI defaults.
struct SelfcheckBounds {
  unsigned phi_degree = 8;            // involution/automorphism spot checks
  unsigned harmonic_degree = 9;       // commutativity/associativity, combined
  unsigned mixed_letter_degree = 5;   // each factor in the mixed-letter rule
  unsigned theta_rule_degree = 8;     // product rule over all splits
  unsigned del1_diamond_degree = 7;   // del_1 via diamond identity
  unsigned theta_tilde_degree = 6;    // letter-prepend rule
  unsigned diamond_derivation_degree = 7;  // combined degree
  unsigned main_identity_degree = 7;  // words w in the main identity
  unsigned main_identity_n = 5;
  unsigned z_commute_degree = 6;
  unsigned z_commute_n = 3;
  unsigned commutativity_degree = 6;  // words for operator commutators
  unsigned q_equality_n = 8;
  unsigned shift_degree = 6;  // words for the theta-shift comparison
  unsigned shift_n = 4;
  unsigned kawashima_degree = 6;  // combined generator degree
  unsigned roundtrip_degree = 9;  // word/index conversions

  // Caps every degree bound (0 = keep defaults).
  void cap_degrees(unsigned d);
  // Caps every n bound (0 = keep defaults).
  void cap_n(unsigned n);
};

// Runs every symbolic suite at the given bounds; deterministic order.
// on_suite, if set, is invoked after each suite finishes.
std::vector<SuiteResult> run_selfcheck(
    const SelfcheckBounds& bounds,
    const std::function<void(const SuiteResult&)>& on_suite = nullptr);

}  // namespace mzv
