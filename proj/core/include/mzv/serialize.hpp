#pragma once

#include <string>
#include <vector>

#include "mzv/oracles.hpp"
#include "mzv/relations.hpp"
#include "mzv/selfcheck.hpp"

namespace mzv {

// JSON records, stable field order, rationals as "num/den" strings and
// coefficient polynomials as [exponent, numerator, denominator] triples
// with numerator/denominator as decimal strings (lossless at any size).

std::string relations_to_json(const std::vector<Relation>& rels);
std::string relation_to_json(const Relation& r);
Relation relation_from_json(const std::string& text);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string selfcheck_to_json(const std::vector<SuiteResult>& suites);

// Text renderings used by the CLI's --format text.
std::string relation_to_text(const Relation& r);
std::string report_to_text(const VerificationReport& r);

}  // namespace mzv
