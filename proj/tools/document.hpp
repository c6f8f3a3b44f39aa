#pragma once

// JSON documents for the command-line tool. Rationals travel as "num/den"
// strings; exponents as integers. See docs/documents.md for the schemas.

#include "helmlayer/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace helmlayer::io {

using nlohmann::json;

/// Throws ParseError on any schema violation.
ProblemSpec parse_problem(const json& doc);
json problem_to_json(const ProblemSpec& spec);

Polynomial parse_polynomial(const json& terms, std::size_t n, const char* field);
json polynomial_to_json(const Polynomial& poly);

struct SolutionDocument {
  QuasiPoly u;
  std::optional<Uniqueness> uniqueness;
  std::vector<std::string> warnings;
};

json solution_to_json(const SolutionDocument& doc);
SolutionDocument parse_solution(const json& doc);

/// {"terms": [{"coeff", "x", "y", "a"}]}: an oscillator-free polynomial in
/// (x, y, a), used for small-kappa limits.
QuasiPoly parse_limit_polynomial(const json& doc, std::size_t n, Mode mode, Basis basis);

Mode parse_mode(const std::string& s);
Problem parse_problem_kind(const std::string& s);

/// True when the document carries a "terms" array (a solution document).
bool is_solution_document(const json& doc);

}  // namespace helmlayer::io
