#include "mzv/serialize.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "mzv/rational.hpp"

namespace mzv {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

ordered_json coeff_to_json(const ParamPoly& c) {
  // [[exponent, "numerator", "denominator"], ...] ascending by exponent
  ordered_json arr = ordered_json::array();
  for (const auto& [e, q] : c.terms())
    arr.push_back(ordered_json::array(
        {e, q.get_num().get_str(), q.get_den().get_str()}));
  return arr;
}

ParamPoly coeff_from_json(const ordered_json& arr) {
  ParamPoly c;
  for (const auto& t : arr) {
    const unsigned e = t.at(0).get<unsigned>();
    const mpq_class num(t.at(1).get<std::string>());
    const mpq_class den(t.at(2).get<std::string>());
    c += ParamPoly::c_power(e, num / den);
  }
  return c;
}

ordered_json relation_to_json_obj(const Relation& r) {
  ordered_json j;
  j["family"] = r.family;
  j["n"] = r.n;
  ordered_json gens = ordered_json::array();
  for (const Word& g : r.generators) gens.push_back(g.str());
  j["generators"] = gens;
  j["weight"] = r.weight;
  j["c_power"] = r.c_power;
  ordered_json comb = ordered_json::array();
  for (const auto& [idx, coeff] : r.combination) {
    ordered_json entry;
    entry["index"] = idx.parts();
    entry["coefficient"] = coeff_to_json(coeff);
    comb.push_back(entry);
  }
  j["combination"] = comb;
  return j;
}

ordered_json report_to_json_obj(const VerificationReport& r) {
  ordered_json j;
  j["source"] = r.source;
  j["n"] = r.n;
  j["c"] = r.c_value;
  j[r.is_finite ? "p" : "N"] = r.N_or_p;
  j["finite"] = r.is_finite;
  if (r.is_finite) {
    j["residue"] = r.residue;
    j["lhs_residue"] = r.lhs_residue;
    j["rhs_residue"] = r.rhs_residue;
  } else {
    j["value"] = sci(r.magnitude);
    j["threshold"] = sci(r.threshold);
  }
  j["pass"] = r.pass;
  return j;
}

}  // namespace

std::string relation_to_json(const Relation& r) {
  return relation_to_json_obj(r).dump(2);
}

std::string relations_to_json(const std::vector<Relation>& rels) {
  ordered_json arr = ordered_json::array();
  for (const Relation& r : rels) arr.push_back(relation_to_json_obj(r));
  return arr.dump(2);
}

Relation relation_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  Relation r;
  r.family = j.at("family").get<std::string>();
  r.n = j.at("n").get<unsigned>();
  for (const auto& g : j.at("generators"))
    r.generators.push_back(Word::parse(g.get<std::string>()));
  r.weight = j.at("weight").get<unsigned>();
  r.c_power = j.at("c_power").get<int>();
  for (const auto& entry : j.at("combination")) {
    std::vector<unsigned> parts =
        entry.at("index").get<std::vector<unsigned>>();
    r.combination.emplace_back(Index(std::move(parts)),
                               coeff_from_json(entry.at("coefficient")));
  }
  return r;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_to_json_obj(r));
  return arr.dump(2);
}

std::string selfcheck_to_json(const std::vector<SuiteResult>& suites) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : suites) {
    ordered_json j;
    j["suite"] = s.name;
    j["cases"] = s.cases;
    j["failures"] = s.failures;
    j["note"] = s.note;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string relation_to_text(const Relation& r) {
  std::string s = r.family;
  if (r.family == "qd") s += " n=" + std::to_string(r.n);
  s += " gen=";
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    if (i) s += ',';
    s += r.generators[i].str();
  }
  s += " weight=" + std::to_string(r.weight);
  if (r.c_power >= 0) s += " c^" + std::to_string(r.c_power);
  s += ": " + combination_str(r.combination);
  return s;
}

std::string report_to_text(const VerificationReport& r) {
  std::string s = r.is_finite ? "finite " : "numeric ";
  s += r.source;
  if (r.n > 0) s += " n=" + std::to_string(r.n);
  if (!r.c_value.empty()) s += " c=" + r.c_value;
  s += (r.is_finite ? " p=" : " N=") + std::to_string(r.N_or_p);
  if (r.is_finite) {
    s += " lhs=" + std::to_string(r.lhs_residue) +
         " rhs=" + std::to_string(r.rhs_residue);
  } else {
    s += " |value|=" + sci(r.magnitude) + " tol=" + sci(r.threshold);
  }
  s += r.pass ? " PASS" : " FAIL";
  return s;
}

}  // namespace mzv
