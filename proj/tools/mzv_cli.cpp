// Command-line front end: symbolic self-checks, q_n inspection, relation
// emission, and numeric/finite oracle sweeps. Output bytes are deterministic
// for a fixed configuration; exit status is 0 iff zero failures.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/nc_poly.hpp"
#include "mzv/operators.hpp"
#include "mzv/oracles.hpp"
#include "mzv/rational.hpp"
#include "mzv/relations.hpp"
#include "mzv/selfcheck.hpp"
#include "mzv/serialize.hpp"
#include "mzv/word.hpp"

namespace {

using json = nlohmann::ordered_json;

struct OutputSink {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::fwrite(text.data(), 1, text.size(), stdout);
      if (!text.empty() && text.back() != '\n') std::fputc('\n', stdout);
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
};

// "lo..hi" -> [lo, hi]; both bounds required.
std::pair<std::uint64_t, std::uint64_t> parse_prime_range(
    const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("prime range must look like lo..hi: " + text);
  std::size_t lo = 0, hi = 0;
  std::uint64_t a = std::stoull(text.substr(0, dots), &lo);
  std::uint64_t b = std::stoull(text.substr(dots + 2), &hi);
  if (lo != dots || hi != text.size() - dots - 2 || a > b)
    throw std::invalid_argument("bad prime range: " + text);
  return {a, b};
}

std::vector<mpq_class> parse_c_list(const std::vector<std::string>& raw,
                                    std::vector<mpq_class> fallback) {
  if (raw.empty()) return fallback;
  std::vector<mpq_class> out;
  out.reserve(raw.size());
  for (const auto& s : raw) out.push_back(mzv::parse_rational(s));
  return out;
}

// All nonempty words of the given degree that begin with y (i.e. that encode
// an index), in lexicographic order.
std::vector<mzv::Word> y_words_of_degree(unsigned degree) {
  std::vector<mzv::Word> out;
  for (mzv::Word w : mzv::enumerate_words(degree))
    if (w.degree() > 0 && w.first() == mzv::Letter::Y) out.push_back(w);
  return out;
}

std::string index_style(const std::vector<std::pair<mzv::Word, mzv::ParamPoly>>&
                            terms) {
  std::vector<std::pair<std::string, mzv::ParamPoly>> parts;
  parts.reserve(terms.size());
  for (const auto& [w, coeff] : terms)
    parts.emplace_back(mzv::word_to_index(w).str(), coeff);
  return mzv::render_combination(parts);
}

int run_selfcheck_cmd(unsigned degree_cap, unsigned n_cap, bool inject_fault,
                      const std::string& format, const OutputSink& sink) {
  if (inject_fault) {
    mzv::set_theta_fault(true);
    mzv::clear_operator_caches();
  }
  mzv::SelfcheckBounds bounds;
  bounds.cap_degrees(degree_cap);
  bounds.cap_n(n_cap);
  auto suites = mzv::run_selfcheck(bounds, [&](const mzv::SuiteResult& r) {
    std::fprintf(stderr, "[selfcheck] %-36s cases=%-7lu failures=%lu\n",
                 r.name.c_str(), r.cases, r.failures);
  });
  unsigned long cases = 0, failures = 0;
  for (const auto& s : suites) {
    cases += s.cases;
    failures += s.failures;
  }
  if (format == "json") {
    json doc;
    doc["command"] = "selfcheck";
    doc["suites"] = json::parse(mzv::selfcheck_to_json(suites));
    doc["total_cases"] = cases;
    doc["total_failures"] = failures;
    doc["pass"] = failures == 0;
    sink.write(doc.dump(2));
  } else {
    std::ostringstream out;
    for (const auto& s : suites) {
      out << s.name << ": cases=" << s.cases << " failures=" << s.failures;
      if (!s.note.empty()) out << " (" << s.note << ")";
      out << '\n';
    }
    out << "selfcheck: " << suites.size() << " suites, " << cases
        << " cases, " << failures << " failures -> "
        << (failures == 0 ? "PASS" : "FAIL") << '\n';
    sink.write(out.str());
  }
  return failures == 0 ? 0 : 1;
}

int run_qn_cmd(unsigned n, const std::vector<std::string>& c_raw,
               const std::string& format, const OutputSink& sink) {
  if (n == 0) throw std::invalid_argument("qn requires n >= 1");
  if (c_raw.size() > 1)
    throw std::invalid_argument("qn accepts at most one --c value");
  mzv::NcPoly q = mzv::q_n_recursive(n);
  if (q != mzv::q_n_explicit(n))
    throw std::logic_error(
        "internal consistency failure: the two q_n constructions disagree");
  std::string c_label = "formal";
  if (!c_raw.empty()) {
    mpq_class c = mzv::parse_rational(c_raw[0]);
    q = q.substitute_c(c);
    c_label = mzv::rational_to_string(c);
  }
  auto terms = q.sorted_terms();
  std::string expansion = q.str();
  std::string indices = index_style(terms);
  if (format == "json") {
    json doc;
    doc["command"] = "qn";
    doc["n"] = n;
    doc["c"] = c_label;
    doc["expansion"] = expansion;
    doc["indices"] = indices;
    json arr = json::array();
    for (const auto& [w, coeff] : terms) {
      json t;
      t["word"] = w.str();
      t["index"] = mzv::word_to_index(w).str();
      json cf = json::array();
      for (const auto& [e, val] : coeff.terms()) {
        cf.push_back(json::array({e, val.get_num().get_str(),
                                  val.get_den().get_str()}));
      }
      t["coefficient"] = cf;
      arr.push_back(std::move(t));
    }
    doc["terms"] = std::move(arr);
    sink.write(doc.dump(2));
  } else {
    std::ostringstream out;
    out << "q_" << n << " (c = " << c_label << ")\n";
    out << "expansion: " << expansion << '\n';
    out << "indices:   " << indices << '\n';
    sink.write(out.str());
  }
  return 0;
}

// qd: --weight is the exact weight of the admissible generator w (so the
// relation itself has weight weight+n). kawashima: --weight is the exact
// combined degree of the two y-word generators.
int run_relations_cmd(const std::string& family, unsigned weight, unsigned n,
                      bool expand_c, const std::string& format,
                      const OutputSink& sink) {
  std::vector<mzv::Relation> rels;
  if (family == "qd") {
    if (weight < 2)
      throw std::invalid_argument(
          "qd relations need weight >= 2 (no admissible words below)");
    if (n == 0) throw std::invalid_argument("qd relations need --n >= 1");
    for (mzv::Word w : mzv::enumerate_admissible(weight))
      rels.push_back(mzv::quasi_derivation_relation(n, w));
  } else {  // kawashima
    if (n != 0)
      throw std::invalid_argument("--n does not apply to kawashima relations");
    if (weight < 2)
      throw std::invalid_argument(
          "kawashima relations need combined generator weight >= 2");
    for (unsigned d1 = 1; d1 < weight; ++d1) {
      unsigned d2 = weight - d1;
      if (d2 < d1) break;
      for (mzv::Word w1 : y_words_of_degree(d1))
        for (mzv::Word w2 : y_words_of_degree(d2)) {
          if (d1 == d2 && w2 < w1) continue;
          rels.push_back(mzv::kawashima_linear_relation(w1, w2));
        }
    }
  }
  std::sort(rels.begin(), rels.end());
  if (expand_c) {
    std::vector<mzv::Relation> layers;
    for (const auto& r : rels)
      for (auto& l : mzv::expand_relation_in_c(r)) layers.push_back(std::move(l));
    rels = std::move(layers);
  }
  if (format == "json") {
    sink.write(mzv::relations_to_json(rels));
  } else {
    std::ostringstream out;
    for (const auto& r : rels) out << mzv::relation_to_text(r) << '\n';
    out << "relations: " << rels.size() << '\n';
    sink.write(out.str());
  }
  return 0;
}

struct SweepTotals {
  std::vector<mzv::VerificationReport> reports;
  json excluded = json::array();
  unsigned long passes = 0, failures = 0;

  void add(mzv::VerificationReport rep) {
    (rep.pass ? passes : failures) += 1;
    reports.push_back(std::move(rep));
  }
};

int emit_verify(const SweepTotals& t, const std::string& mode,
                const std::string& family, const std::string& format,
                const OutputSink& sink) {
  if (format == "json") {
    json doc;
    doc["command"] = "verify";
    doc["mode"] = mode;
    doc["family"] = family;
    doc["reports"] = json::parse(mzv::reports_to_json(t.reports));
    doc["excluded"] = t.excluded;
    doc["summary"] = {{"checks", t.passes + t.failures},
                      {"passes", t.passes},
                      {"failures", t.failures},
                      {"excluded", t.excluded.size()}};
    sink.write(doc.dump(2));
  } else {
    std::ostringstream out;
    for (const auto& r : t.reports) out << mzv::report_to_text(r) << '\n';
    for (const auto& e : t.excluded)
      out << "excluded: " << e["source"].get<std::string>() << " n="
          << e["n"].get<unsigned>() << " p=" << e["p"].get<std::uint64_t>()
          << " (" << e["reason"].get<std::string>() << ")\n";
    out << "verify " << mode << ": checks=" << (t.passes + t.failures)
        << " passes=" << t.passes << " failures=" << t.failures
        << " excluded=" << t.excluded.size() << " -> "
        << (t.failures == 0 ? "PASS" : "FAIL") << '\n';
    sink.write(out.str());
  }
  return t.failures == 0 ? 0 : 1;
}

int run_verify_cmd(const std::string& mode, const std::string& family,
                   unsigned weight, unsigned n_max,
                   const std::vector<std::string>& c_raw,
                   std::uint64_t trunc, double tol,
                   const std::string& primes_raw, const std::string& format,
                   const OutputSink& sink) {
  SweepTotals totals;
  if (mode == "numeric") {
    mzv::NumericConfig cfg;
    cfg.truncation = trunc;
    if (family == "qd") {
      auto cs = parse_c_list(c_raw, {mpq_class(0), mpq_class(1)});
      for (unsigned wt = 2; wt <= weight; ++wt)
        for (mzv::Word w : mzv::enumerate_admissible(wt))
          for (unsigned n = 1; n <= n_max; ++n) {
            mzv::Relation rel = mzv::quasi_derivation_relation(n, w);
            bool c_free = true;
            for (const auto& [idx, coeff] : rel.combination)
              if (!coeff.is_constant()) c_free = false;
            // A c-free relation is one check, not one per sample.
            std::size_t samples = c_free ? 1 : cs.size();
            for (std::size_t i = 0; i < samples; ++i)
              totals.add(mzv::verify_relation_numeric(rel, cs[i], cfg, tol));
          }
    } else {  // kawashima: weight bounds each generator separately
      for (unsigned d1 = 1; d1 <= weight; ++d1)
        for (unsigned d2 = d1; d2 <= weight; ++d2)
          for (mzv::Word w1 : y_words_of_degree(d1))
            for (mzv::Word w2 : y_words_of_degree(d2)) {
              if (d1 == d2 && w2 < w1) continue;
              mzv::Relation rel = mzv::kawashima_linear_relation(w1, w2);
              totals.add(
                  mzv::verify_relation_numeric(rel, mpq_class(0), cfg, tol));
            }
    }
  } else {  // finite
    if (family != "qd")
      throw std::invalid_argument(
          "finite verification is defined for the qd family only");
    auto [plo, phi_] = parse_prime_range(primes_raw);
    auto cs = parse_c_list(c_raw, {mpq_class(0), mpq_class(1)});
    auto primes = mzv::primes_in_range(plo, phi_);
    for (unsigned wt = 2; wt <= weight; ++wt)
      for (mzv::Word w : mzv::enumerate_admissible(wt))
        for (unsigned n = 1; n <= n_max; ++n)
          for (std::uint64_t p : primes) {
            if (p <= wt + n + 2) {
              json e;
              e["source"] = "main-identity " + w.str();
              e["n"] = n;
              e["p"] = p;
              e["reason"] = "requires p > weight + n + 2";
              totals.excluded.push_back(std::move(e));
              continue;
            }
            for (const auto& c : cs)
              totals.add(mzv::verify_finite_main_identity(n, w, p, c));
          }
  }
  return emit_verify(totals, mode, family, format, sink);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quasi-derivation and Kawashima-type relations among multiple zeta "
      "values: symbolic self-checks, q_n inspection, relation emission, and "
      "numeric/finite verification sweeps."};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "Write the report to this file");
  };

  // selfcheck
  auto* sc = app.add_subcommand(
      "selfcheck", "Run every symbolic identity suite (exit 0 iff all pass)");
  unsigned sc_degree = 0, sc_n = 0;
  bool sc_fault = false;
  sc->add_option("--degree", sc_degree,
                 "Cap every degree bound (0 keeps the defaults)");
  sc->add_option("--n", sc_n, "Cap every operator-index bound (0 keeps defaults)");
  sc->add_flag("--inject-theta-fault", sc_fault,
               "Flip a sign inside theta (negative control)")
      ->group("");
  add_io(sc);

  // qn
  auto* qn = app.add_subcommand(
      "qn", "Print q_n (x,y-expansion and index form; the recursive and "
            "explicit constructions are cross-checked first)");
  unsigned qn_n = 0;
  std::vector<std::string> qn_c;
  qn->add_option("--n", qn_n, "Operator index n (>= 1)")->required();
  qn->add_option("--c", qn_c, "Specialize the parameter c to this rational");
  add_io(qn);

  // relations
  auto* rl = app.add_subcommand(
      "relations", "Emit one relation family at an exact generator weight");
  std::string rl_family = "qd";
  unsigned rl_weight = 0, rl_n = 0;
  bool rl_expand = false;
  rl->add_option("--family", rl_family, "Relation family")
      ->check(CLI::IsMember({"qd", "kawashima"}))
      ->capture_default_str();
  rl->add_option("--weight", rl_weight,
                 "Exact generator weight (qd: the admissible word; kawashima: "
                 "combined degree of the generator pair)")
      ->required();
  rl->add_option("--n", rl_n, "Operator index n (qd only)");
  rl->add_flag("--expand-c", rl_expand,
               "Split each relation into homogeneous c-power layers");
  add_io(rl);

  // verify
  auto* vf = app.add_subcommand(
      "verify", "Run an oracle sweep (exit 0 iff zero failures)");
  std::string vf_mode;
  std::string vf_family = "qd";
  unsigned vf_weight = 0, vf_n = 2;
  std::vector<std::string> vf_c;
  std::uint64_t vf_trunc = 100000;
  double vf_tol = 1e-3;
  std::string vf_primes = "11..97";
  vf->add_option("mode", vf_mode, "numeric: truncated real sums; finite: mod-p")
      ->required()
      ->check(CLI::IsMember({"numeric", "finite"}));
  vf->add_option("--family", vf_family, "Relation family")
      ->check(CLI::IsMember({"qd", "kawashima"}))
      ->capture_default_str();
  auto* vf_weight_opt = vf->add_option(
      "--weight", vf_weight,
      "Generator weight bound (default 4; kawashima: bounds each generator, "
      "default 3)");
  vf->add_option("--n", vf_n, "Operator index bound")->capture_default_str();
  vf->add_option("--c", vf_c,
                 "Rational c sample, repeatable (default: 0 and 1)");
  vf->add_option("--trunc", vf_trunc, "Truncation N for numeric sums")
      ->capture_default_str();
  vf->add_option("--tol", vf_tol, "Numeric pass tolerance")
      ->capture_default_str();
  vf->add_option("--primes", vf_primes, "Prime range lo..hi for finite mode")
      ->capture_default_str();
  add_io(vf);

  CLI11_PARSE(app, argc, argv);

  try {
    OutputSink sink{out_path};
    if (sc->parsed())
      return run_selfcheck_cmd(sc_degree, sc_n, sc_fault, format, sink);
    if (qn->parsed()) return run_qn_cmd(qn_n, qn_c, format, sink);
    if (rl->parsed())
      return run_relations_cmd(rl_family, rl_weight, rl_n, rl_expand, format,
                               sink);
    if (vf->parsed()) {
      if (!*vf_weight_opt) vf_weight = (vf_family == "kawashima") ? 3 : 4;
      if (vf_tol <= 0) throw std::invalid_argument("--tol must be positive");
      return run_verify_cmd(vf_mode, vf_family, vf_weight, vf_n, vf_c,
                            vf_trunc, vf_tol, vf_primes, format, sink);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
