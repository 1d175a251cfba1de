#include "mzv/selfcheck.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/nc_poly.hpp"
#include "mzv/operators.hpp"
#include "mzv/products.hpp"
#include "mzv/relations.hpp"

namespace mzv {

namespace {

constexpr std::uint32_t kSeed = 20260816;  // fixed: runs are reproducible

void cap_field(unsigned& field, unsigned cap) {
  if (cap > 0 && field > cap) field = cap;
}

Word random_word(std::mt19937& rng, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> dlen(0, max_degree);
  const unsigned len = dlen(rng);
  std::vector<Letter> letters(len);
  for (auto& u : letters)
    u = (rng() & 1) ? Letter::Y : Letter::X;
  return Word::from_letters(letters);
}

ParamPoly random_coeff(std::mt19937& rng) {
  static const mpq_class pool[] = {1, -1, 2, {1, 2}, {-3, 2}, 3};
  std::uniform_int_distribution<int> dq(0, 5), de(0, 2);
  return ParamPoly::c_power(static_cast<unsigned>(de(rng)), pool[dq(rng)]);
}

NcPoly random_poly(std::mt19937& rng, unsigned max_degree, unsigned terms) {
  NcPoly p;
  for (unsigned i = 0; i < terms; ++i)
    p.add_term(random_word(rng, max_degree), random_coeff(rng));
  return p;
}

// Tally helper: count a case, record the first counterexample.
struct Tally {
  SuiteResult r;
  explicit Tally(std::string name) { r.name = std::move(name); }
  void check(bool ok, const std::string& label) {
    ++r.cases;
    if (!ok) {
      ++r.failures;
      if (r.note.empty()) r.note = "first mismatch: " + label;
    }
  }
};

void compositions_upto(unsigned max_weight,
                       std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> cur;
  // Depth-first over first parts; collects every nonempty composition.
  struct Rec {
    std::vector<std::vector<unsigned>>& out;
    std::vector<unsigned>& cur;
    void go(unsigned rest) {
      if (!cur.empty()) out.push_back(cur);
      for (unsigned f = 1; f <= rest; ++f) {
        cur.push_back(f);
        go(rest - f);
        cur.pop_back();
      }
    }
  } rec{out, cur};
  rec.go(max_weight);
}

SuiteResult suite_word_index_roundtrip(const SelfcheckBounds& b) {
  Tally t("word-index round trip");
  std::vector<std::vector<unsigned>> comps;
  compositions_upto(b.roundtrip_degree, comps);
  for (const auto& parts : comps) {
    Index k(parts);
    t.check(word_to_index(index_to_word(k)) == k, k.str());
  }
  for (unsigned d = 1; d <= b.roundtrip_degree; ++d)
    for (Word w : enumerate_words(d)) {
      if (w.first() != Letter::Y) continue;
      t.check(index_to_word(word_to_index(w)) == w, w.str());
    }
  return t.r;
}

SuiteResult suite_concat_associativity(const SelfcheckBounds& b) {
  Tally t("concatenation associativity");
  std::mt19937 rng(kSeed);
  const unsigned deg = std::min(b.phi_degree, 4u);
  for (int i = 0; i < 300; ++i) {
    NcPoly p = random_poly(rng, deg, 3), q = random_poly(rng, deg, 3),
           r = random_poly(rng, deg, 3);
    t.check((p * q) * r == p * (q * r), "random triple #" + std::to_string(i));
    t.check(p * NcPoly::unit() == p && NcPoly::unit() * p == p,
            "unit #" + std::to_string(i));
  }
  return t.r;
}

SuiteResult suite_right_divide(const SelfcheckBounds& b) {
  Tally t("right x-division inverse");
  for (unsigned d = 0; d <= b.phi_degree; ++d)
    for (Word w : enumerate_words(d)) {
      NcPoly p = NcPoly::monomial(w);
      t.check(p.right_mul(Word::x()).right_divide_by_x() == p, w.str());
    }
  std::mt19937 rng(kSeed);
  for (int i = 0; i < 50; ++i) {
    NcPoly p = random_poly(rng, b.phi_degree, 4);
    t.check((p * NcPoly::monomial(Word::x())).right_divide_by_x() == p,
            "random poly #" + std::to_string(i));
  }
  return t.r;
}

SuiteResult suite_phi_involution(const SelfcheckBounds& b) {
  Tally t("phi involution");
  std::mt19937 rng(kSeed);
  for (int i = 0; i < 60; ++i) {
    NcPoly p = random_poly(rng, b.phi_degree, 4);
    t.check(phi(phi(p)) == p, "random poly #" + std::to_string(i));
  }
  for (unsigned d = 0; d <= std::min(b.phi_degree, 6u); ++d)
    for (Word w : enumerate_words(d))
      t.check(phi(phi(w)) == NcPoly::monomial(w), w.str());
  return t.r;
}

SuiteResult suite_phi_automorphism(const SelfcheckBounds& b) {
  Tally t("phi automorphism");
  std::mt19937 rng(kSeed);
  const unsigned half = std::max(1u, b.phi_degree / 2);
  for (int i = 0; i < 60; ++i) {
    NcPoly p = random_poly(rng, half, 3), q = random_poly(rng, half, 3);
    t.check(phi(p * q) == phi(p) * phi(q), "random pair #" + std::to_string(i));
  }
  return t.r;
}

SuiteResult suite_harmonic_commutative(const SelfcheckBounds& b) {
  Tally t("harmonic commutativity");
  for (unsigned da = 0; da <= b.harmonic_degree; ++da)
    for (unsigned db = 0; da + db <= b.harmonic_degree; ++db)
      for (Word a : enumerate_words(da))
        for (Word bw : enumerate_words(db))
          t.check(harmonic(a, bw) == harmonic(bw, a),
                  a.str() + " * " + bw.str());
  return t.r;
}

SuiteResult suite_harmonic_associative(const SelfcheckBounds& b) {
  Tally t("harmonic associativity");
  const unsigned cap = b.harmonic_degree;
  const unsigned exhaustive = std::min(cap, 6u);
  for (unsigned da = 0; da <= exhaustive; ++da)
    for (unsigned db = 0; da + db <= exhaustive; ++db)
      for (unsigned dc = 0; da + db + dc <= exhaustive; ++dc)
        for (Word a : enumerate_words(da))
          for (Word bw : enumerate_words(db))
            for (Word c : enumerate_words(dc)) {
              NcPoly lhs = harmonic(harmonic(a, bw), NcPoly::monomial(c));
              NcPoly rhs = harmonic(NcPoly::monomial(a), harmonic(bw, c));
              t.check(lhs == rhs,
                      a.str() + " * " + bw.str() + " * " + c.str());
            }
  // Random sampling fills in the 7..cap band.
  if (cap > exhaustive) {
    std::mt19937 rng(kSeed);
    std::uniform_int_distribution<unsigned> dtotal(exhaustive + 1, cap);
    for (int i = 0; i < 1500; ++i) {
      const unsigned total = dtotal(rng);
      std::uniform_int_distribution<unsigned> dsplit(0, total);
      unsigned da = dsplit(rng);
      std::uniform_int_distribution<unsigned> dsplit2(0, total - da);
      unsigned db = dsplit2(rng);
      unsigned dc = total - da - db;
      auto pick = [&](unsigned d) {
        std::vector<Letter> ls(d);
        for (auto& u : ls) u = (rng() & 1) ? Letter::Y : Letter::X;
        return Word::from_letters(ls);
      };
      Word a = pick(da), bw = pick(db), c = pick(dc);
      NcPoly lhs = harmonic(harmonic(a, bw), NcPoly::monomial(c));
      NcPoly rhs = harmonic(NcPoly::monomial(a), harmonic(bw, c));
      t.check(lhs == rhs, a.str() + " * " + bw.str() + " * " + c.str());
    }
  }
  return t.r;
}

SuiteResult suite_diamond_mixed_letter(const SelfcheckBounds& b) {
  Tally t("diamond mixed-letter rule");
  std::vector<Word> ws = enumerate_words_up_to(b.mixed_letter_degree);
  for (Word w1 : ws)
    for (Word w2 : ws) {
      const Word xw1 = Word::x().concat(w1), yw2 = Word::y().concat(w2);
      NcPoly lhs = diamond(xw1, yw2);
      NcPoly rhs = diamond(w1, yw2).left_mul(Word::x()) +
                   diamond(xw1, w2).left_mul(Word::y());
      t.check(lhs == rhs, xw1.str() + " <> " + yw2.str());
    }
  return t.r;
}

SuiteResult suite_diamond_z_pullout(const SelfcheckBounds& b) {
  Tally t("diamond z-pullout");
  const NcPoly z = NcPoly::z();
  for (unsigned da = 0; da <= b.diamond_derivation_degree; ++da)
    for (unsigned db = 0; da + db <= b.diamond_derivation_degree; ++db)
      for (Word a : enumerate_words(da))
        for (Word bw : enumerate_words(db)) {
          NcPoly pa = NcPoly::monomial(a), pb = NcPoly::monomial(bw);
          NcPoly left = diamond(z * pa, pb);
          NcPoly mid = diamond(pa, z * pb);
          NcPoly out = z * diamond(a, bw);
          t.check(left == out && mid == out, a.str() + " / " + bw.str());
        }
  return t.r;
}

SuiteResult suite_diamond_y_closure(const SelfcheckBounds& b) {
  Tally t("diamond y-closure");
  for (unsigned da = 1; da <= b.diamond_derivation_degree; ++da)
    for (unsigned db = 1; da + db <= b.diamond_derivation_degree; ++db)
      for (Word a : enumerate_words(da)) {
        if (a.first() != Letter::Y) continue;
        for (Word bw : enumerate_words(db)) {
          if (bw.first() != Letter::Y) continue;
          t.check(diamond(a, bw).in_y_h(), a.str() + " <> " + bw.str());
        }
      }
  return t.r;
}

SuiteResult suite_theta_product_rule(const SelfcheckBounds& b) {
  Tally t("theta product rule");
  for (unsigned d = 2; d <= b.theta_rule_degree; ++d)
    for (Word w : enumerate_words(d))
      for (unsigned cut = 1; cut < d; ++cut) {
        const Word w1 = w.prefix(cut), w2 = w.drop_front(cut);
        NcPoly rhs = theta(w1).right_mul(w2);
        rhs += theta(w2).left_mul(w1);
        rhs += del_n(1, w2)
                   .left_mul(w1)
                   .scaled(ParamPoly::c_power(1, mpq_class(cut)));
        t.check(theta(w) == rhs, w1.str() + " | " + w2.str());
      }
  return t.r;
}

SuiteResult suite_del1_diamond(const SelfcheckBounds& b) {
  Tally t("del1 diamond identity");
  for (unsigned d = 0; d <= b.del1_diamond_degree; ++d)
    for (Word w : enumerate_words(d)) {
      NcPoly rhs = diamond(w, Word::y()) -
                   NcPoly::monomial(w).right_mul(Word::y());
      t.check(del_n(1, w) == rhs, w.str());
    }
  return t.r;
}

SuiteResult suite_theta_tilde_letter(const SelfcheckBounds& b) {
  Tally t("theta-tilde letter rule");
  for (unsigned d = 0; d <= b.theta_tilde_degree; ++d)
    for (Word w : enumerate_words(d))
      for (Letter u : {Letter::X, Letter::Y}) {
        NcPoly lhs = theta_tilde(NcPoly::monomial(
            Word::from_letters({u}).concat(w)));
        NcPoly inner = theta_tilde(NcPoly::monomial(w));
        inner += NcPoly::z() * NcPoly::monomial(w);
        inner += diamond(w, Word::y()).scaled(ParamPoly::c_power(1));
        t.check(lhs == inner.left_mul(Word::from_letters({u})),
                std::string(u == Letter::X ? "x" : "y") + " | " + w.str());
      }
  return t.r;
}

SuiteResult suite_diamond_derivation(const SelfcheckBounds& b) {
  Tally t("theta-tilde diamond derivation");
  for (unsigned da = 0; da <= b.diamond_derivation_degree; ++da)
    for (unsigned db = 0; da + db <= b.diamond_derivation_degree; ++db)
      for (Word a : enumerate_words(da))
        for (Word bw : enumerate_words(db)) {
          NcPoly lhs = theta_tilde(diamond(a, bw));
          NcPoly rhs = diamond(theta_tilde(NcPoly::monomial(a)),
                               NcPoly::monomial(bw)) +
                       diamond(NcPoly::monomial(a),
                               theta_tilde(NcPoly::monomial(bw)));
          t.check(lhs == rhs, a.str() + " <> " + bw.str());
        }
  return t.r;
}

SuiteResult suite_main_identity(const SelfcheckBounds& b) {
  Tally t("main quasi-derivation identity");
  for (unsigned n = 1; n <= b.main_identity_n; ++n) {
    const NcPoly qn = q_n_recursive(n);
    for (unsigned d = 0; d <= b.main_identity_degree; ++d)
      for (Word w : enumerate_words(d)) {
        const Word wx = w.append(Letter::X);
        NcPoly lhs = quasi_del(n, wx);
        NcPoly rhs = diamond(NcPoly::monomial(w), qn).right_mul(Word::x());
        bool ok = lhs == rhs;
        // Admissible arguments must stay inside the zeta domain.
        if (ok && !w.empty() && w.first() == Letter::Y) ok = lhs.in_y_h_x();
        t.check(ok, "n=" + std::to_string(n) + " w=" + w.str());
      }
  }
  return t.r;
}

SuiteResult suite_z_commutation(const SelfcheckBounds& b) {
  Tally t("z commutation");
  const NcPoly z = NcPoly::z();
  for (unsigned n = 1; n <= b.z_commute_n; ++n)
    for (unsigned d = 0; d <= b.z_commute_degree; ++d)
      for (Word w : enumerate_words(d)) {
        NcPoly p = NcPoly::monomial(w);
        NcPoly dw = quasi_del(n, p);
        t.check(quasi_del(n, p * z) == dw * z,
                "right n=" + std::to_string(n) + " w=" + w.str());
        t.check(quasi_del(n, z * p) == z * dw,
                "left n=" + std::to_string(n) + " w=" + w.str());
      }
  return t.r;
}

SuiteResult suite_commutativity(const SelfcheckBounds& b) {
  Tally t("quasi-derivation commutativity");
  static const std::pair<unsigned, unsigned> kPairs[] = {
      {1, 2}, {2, 2}, {2, 3}};
  // Distinct rationals 0, 1, -1, 2, -2, ... certify polynomial identities of
  // the commutator's per-variable degree.
  auto grid_value = [](unsigned i) {
    const long v = (i + 1) / 2;
    return mpq_class(i % 2 ? v : -v);
  };
  for (auto [n1, n2] : kPairs) {
    const unsigned grid = n1 + n2 + 1;
    for (unsigned d = 0; d <= b.commutativity_degree; ++d)
      for (Word w : enumerate_words(d)) {
        const NcPoly p = NcPoly::monomial(w);
        const NcPoly a_form = quasi_del(n2, p);   // then n1 at c1
        const NcPoly b_form = quasi_del(n1, p);   // then n2 at c2
        for (unsigned j = 0; j < grid; ++j) {
          const mpq_class c2 = grid_value(j);
          // quasi_del introduces fresh c; the inner layer is specialized
          // first, so each axis carries its own parameter value.
          const NcPoly lhs_j = quasi_del(n1, a_form.substitute_c(c2));
          for (unsigned i = 0; i < grid; ++i) {
            const mpq_class c1 = grid_value(i);
            const NcPoly lhs = lhs_j.substitute_c(c1);
            const NcPoly rhs =
                quasi_del(n2, b_form.substitute_c(c1)).substitute_c(c2);
            t.check(lhs == rhs, "(" + std::to_string(n1) + "," +
                                    std::to_string(n2) + ") w=" + w.str() +
                                    " c1=" + c1.get_str() +
                                    " c2=" + c2.get_str());
          }
        }
      }
  }
  return t.r;
}

SuiteResult suite_q_equality(const SelfcheckBounds& b) {
  Tally t("q-formula equality");
  for (unsigned n = 1; n <= b.q_equality_n; ++n) {
    t.check(q_n_explicit(n) == q_n_recursive(n), "n=" + std::to_string(n));
    // Specialization at c=0 collapses to the single leading block.
    NcPoly expected =
        z_power(n - 1).left_mul(Word::y());
    t.check(q_n_recursive(n).substitute_c(0) == expected,
            "c=0, n=" + std::to_string(n));
  }
  NcPoly q2 = NcPoly::monomial(Word::parse("yx"));
  ParamPoly one_plus_c = ParamPoly::one() + ParamPoly::c_power(1);
  q2.add_term(Word::parse("yy"), one_plus_c);
  t.check(q_n_recursive(2) == q2, "q2 value");
  t.check(a_coeff(Index({2})) == ParamPoly::one(), "a(2)");
  t.check(a_coeff(Index({1, 1})) == ParamPoly::c_power(1, -1), "a(1,1)");
  t.check(a_coeff(Index({2, 1})) == ParamPoly::c_power(1, -3), "a(2,1)");
  return t.r;
}

SuiteResult suite_theta_shift(const SelfcheckBounds& b) {
  Tally t("theta shift invariance");
  bool plus_ok = true, minus_ok = true;
  for (int sign : {+1, -1}) {
    for (unsigned n = 2; n <= b.shift_n; ++n)
      for (unsigned d = 0; d <= b.shift_degree; ++d)
        for (Word w : enumerate_words(d)) {
          const NcPoly p = NcPoly::monomial(w);
          const bool ok = quasi_del_alt(n, p, sign) == quasi_del(n, p);
          (sign > 0 ? plus_ok : minus_ok) &= ok;
          t.check(ok, "sign=" + std::to_string(sign) +
                          " n=" + std::to_string(n) + " w=" + w.str());
        }
  }
  std::string report = std::string("shift with sign +1 ") +
                       (plus_ok ? "agrees" : "disagrees") +
                       "; sign -1 " + (minus_ok ? "agrees" : "disagrees");
  t.r.note = t.r.note.empty() ? report : t.r.note + "; " + report;
  return t.r;
}

SuiteResult suite_kawashima_closure(const SelfcheckBounds& b) {
  Tally t("kawashima admissibility");
  for (unsigned da = 1; da + 1 <= b.kawashima_degree; ++da)
    for (unsigned db = 1; da + db <= b.kawashima_degree; ++db)
      for (Word a : enumerate_words(da)) {
        if (a.first() != Letter::Y) continue;
        for (Word bw : enumerate_words(db)) {
          if (bw.first() != Letter::Y) continue;
          NcPoly img = phi(harmonic(a, bw)).right_mul(Word::x());
          bool ok = img.in_y_h_x();
          if (ok) to_zeta_combination(img);  // throws on escape
          t.check(ok, a.str() + " , " + bw.str());
        }
      }
  return t.r;
}

}  // namespace

void SelfcheckBounds::cap_degrees(unsigned d) {
  cap_field(phi_degree, d);
  cap_field(harmonic_degree, d);
  cap_field(mixed_letter_degree, d);
  cap_field(theta_rule_degree, d);
  cap_field(del1_diamond_degree, d);
  cap_field(theta_tilde_degree, d);
  cap_field(diamond_derivation_degree, d);
  cap_field(main_identity_degree, d);
  cap_field(z_commute_degree, d);
  cap_field(commutativity_degree, d);
  cap_field(shift_degree, d);
  cap_field(kawashima_degree, d);
  cap_field(roundtrip_degree, d);
}

void SelfcheckBounds::cap_n(unsigned n) {
  cap_field(main_identity_n, n);
  cap_field(z_commute_n, n);
  cap_field(q_equality_n, n);
  cap_field(shift_n, n);
}

std::vector<SuiteResult> run_selfcheck(
    const SelfcheckBounds& bounds,
    const std::function<void(const SuiteResult&)>& on_suite) {
  using Suite = SuiteResult (*)(const SelfcheckBounds&);
  static constexpr Suite kSuites[] = {
      suite_word_index_roundtrip, suite_concat_associativity,
      suite_right_divide,         suite_phi_involution,
      suite_phi_automorphism,     suite_harmonic_commutative,
      suite_harmonic_associative, suite_diamond_mixed_letter,
      suite_diamond_z_pullout,    suite_diamond_y_closure,
      suite_theta_product_rule,   suite_del1_diamond,
      suite_theta_tilde_letter,   suite_diamond_derivation,
      suite_main_identity,        suite_z_commutation,
      suite_commutativity,        suite_q_equality,
      suite_theta_shift,          suite_kawashima_closure,
  };
  std::vector<SuiteResult> out;
  for (Suite s : kSuites) {
    out.push_back(s(bounds));
    if (on_suite) on_suite(out.back());
  }
  return out;
}

}  // namespace mzv
