#include "document.hpp"

#include "helmlayer/render.hpp"

namespace helmlayer::io {

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string require_string(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

int require_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return v.get<int>();
}

int optional_int(const json& doc, const char* key) {
  if (!doc.contains(key)) return 0;
  return require_int(doc.at(key), key);
}

Rational rational_field(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a rational string");
  return parse_rational(v.get<std::string>());
}

MultiIndex exponents(const json& v, std::size_t n, const char* field) {
  if (!v.is_array()) throw ParseError(std::string(field) + ": 'x' must be an array of exponents");
  if (v.size() != n)
    throw ParseError(std::string(field) + ": exponent array has length " + std::to_string(v.size()) +
                     ", expected " + std::to_string(n));
  std::vector<int> e;
  for (const json& k : v) {
    const int ki = require_int(k, "exponent");
    if (ki < 0) throw ParseError(std::string(field) + ": negative x exponent");
    e.push_back(ki);
  }
  return MultiIndex(std::move(e));
}

json exponents_to_json(const MultiIndex& k) { return json(k.exponents()); }

std::string osc_y_name(YOsc oy, Mode mode) {
  const bool hyp = mode == Mode::Hyperbolic;
  switch (oy) {
    case YOsc::Sy: return hyp ? "sinh_ky" : "sin_ky";
    case YOsc::Cy: return hyp ? "cosh_ky" : "cos_ky";
    case YOsc::One: break;
  }
  return "1";
}

YOsc parse_osc_y(const std::string& s, Mode mode) {
  if (s == "1") return YOsc::One;
  if (s == osc_y_name(YOsc::Sy, mode)) return YOsc::Sy;
  if (s == osc_y_name(YOsc::Cy, mode)) return YOsc::Cy;
  throw ParseError("unknown y-oscillator '" + s + "' for " + to_string(mode) + " mode");
}

const char* sa_key(Mode m) { return m == Mode::Hyperbolic ? "sinh_ka" : "sin_ka"; }
const char* ca_key(Mode m) { return m == Mode::Hyperbolic ? "cosh_ka" : "cos_ka"; }

Basis parse_basis(const std::string& s) {
  if (s == "sinh_denominator") return Basis::SinhDenominator;
  if (s == "cosh_denominator") return Basis::CoshDenominator;
  throw ParseError("unknown basis '" + s + "'");
}

std::size_t parse_dimension(const json& doc) {
  const int n = require_int(require(doc, "dimension"), "dimension");
  if (n < 1) throw ParseError("dimension must be at least 1");
  return static_cast<std::size_t>(n);
}

}  // namespace

Mode parse_mode(const std::string& s) {
  if (s == "hyperbolic") return Mode::Hyperbolic;
  if (s == "circular") return Mode::Circular;
  throw ParseError("unknown mode '" + s + "' (expected hyperbolic|circular)");
}

Problem parse_problem_kind(const std::string& s) {
  if (s == "dirichlet") return Problem::Dirichlet;
  if (s == "dirichlet_neumann") return Problem::DirichletNeumann;
  throw ParseError("unknown boundary condition '" + s + "' (expected dirichlet|dirichlet_neumann)");
}

bool is_solution_document(const json& doc) { return doc.is_object() && doc.contains("terms"); }

Polynomial parse_polynomial(const json& terms, std::size_t n, const char* field) {
  if (terms.is_null()) return {};
  if (!terms.is_array()) throw ParseError(std::string(field) + " must be an array of terms");
  Polynomial poly;
  for (const json& t : terms) {
    PolyTerm pt;
    pt.coeff = rational_field(t, "coeff");
    pt.x = exponents(require(t, "x"), n, field);
    pt.y = optional_int(t, "y");
    if (pt.y < 0) throw ParseError(std::string(field) + ": negative y exponent");
    poly.push_back(std::move(pt));
  }
  return poly;
}

json polynomial_to_json(const Polynomial& poly) {
  json arr = json::array();
  for (const PolyTerm& t : poly) {
    arr.push_back({{"coeff", format_rational(t.coeff)}, {"x", exponents_to_json(t.x)}, {"y", t.y}});
  }
  return arr;
}

ProblemSpec parse_problem(const json& doc) {
  if (!doc.is_object()) throw ParseError("problem document must be a JSON object");
  ProblemSpec spec;
  spec.n = parse_dimension(doc);
  spec.a = rational_field(doc, "a");
  spec.kappa = rational_field(doc, "kappa");
  spec.mode = parse_mode(require_string(doc, "mode"));
  spec.bc = parse_problem_kind(require_string(doc, "bc"));
  spec.P = parse_polynomial(doc.value("P", json()), spec.n, "P");
  spec.phi = parse_polynomial(doc.value("phi", json()), spec.n, "phi");
  spec.psi = parse_polynomial(doc.value("psi", json()), spec.n, "psi");
  try {
    validate(spec);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  return spec;
}

json problem_to_json(const ProblemSpec& spec) {
  return {{"dimension", spec.n},
          {"a", format_rational(spec.a)},
          {"mode", to_string(spec.mode)},
          {"kappa", format_rational(spec.kappa)},
          {"bc", to_string(spec.bc)},
          {"P", polynomial_to_json(spec.P)},
          {"phi", polynomial_to_json(spec.phi)},
          {"psi", polynomial_to_json(spec.psi)}};
}

json solution_to_json(const SolutionDocument& doc) {
  const QuasiPoly& u = doc.u;
  json terms = json::array();
  for (const Term& t : u.terms()) {
    json jt;
    jt["coeff"] = format_rational(t.coeff);
    jt["x"] = exponents_to_json(t.mono.alpha);
    jt["y"] = t.mono.j;
    jt["kappa"] = t.mono.e;
    jt["a"] = t.mono.p;
    jt["osc_y"] = osc_y_name(t.mono.oy, u.mode());
    jt[sa_key(u.mode())] = t.mono.sa;
    jt[ca_key(u.mode())] = t.mono.ca;
    terms.push_back(std::move(jt));
  }
  json out;
  out["mode"] = to_string(u.mode());
  out["dimension"] = u.dimension();
  out["basis"] = to_string(u.basis());
  out["terms"] = std::move(terms);
  if (doc.uniqueness) out["uniqueness"] = to_string(*doc.uniqueness);
  out["warnings"] = doc.warnings;
  out["render"] = {{"text", render_text(u)}, {"latex", render_latex(u)}};
  return out;
}

SolutionDocument parse_solution(const json& doc) {
  if (!doc.is_object()) throw ParseError("solution document must be a JSON object");
  const Mode mode = parse_mode(require_string(doc, "mode"));
  const std::size_t n = parse_dimension(doc);
  const Basis basis = parse_basis(require_string(doc, "basis"));
  const json& terms = require(doc, "terms");
  if (!terms.is_array()) throw ParseError("'terms' must be an array");

  std::vector<Term> parsed;
  for (const json& t : terms) {
    Term term;
    term.coeff = rational_field(t, "coeff");
    term.mono.alpha = exponents(require(t, "x"), n, "terms");
    term.mono.j = optional_int(t, "y");
    term.mono.e = optional_int(t, "kappa");
    term.mono.p = optional_int(t, "a");
    term.mono.oy = t.contains("osc_y") ? parse_osc_y(require_string(t, "osc_y"), mode) : YOsc::One;
    term.mono.sa = optional_int(t, sa_key(mode));
    term.mono.ca = optional_int(t, ca_key(mode));
    if (term.mono.j < 0) throw ParseError("terms: negative y exponent");
    parsed.push_back(std::move(term));
  }

  SolutionDocument out;
  try {
    out.u = normalize(mode, n, basis, std::move(parsed));
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  if (doc.contains("uniqueness")) {
    const std::string v = require_string(doc, "uniqueness");
    if (v == "unique") {
      out.uniqueness = Uniqueness::UniqueSlowGrowth;
    } else if (v == "not_unique") {
      out.uniqueness = Uniqueness::NotUnique;
    } else {
      throw ParseError("unknown uniqueness verdict '" + v + "'");
    }
  }
  if (doc.contains("warnings")) {
    for (const json& w : doc.at("warnings")) {
      if (!w.is_string()) throw ParseError("warnings must be strings");
      out.warnings.push_back(w.get<std::string>());
    }
  }
  return out;
}

QuasiPoly parse_limit_polynomial(const json& doc, std::size_t n, Mode mode, Basis basis) {
  const json& terms = doc.is_array() ? doc : require(doc, "terms");
  if (!terms.is_array()) throw ParseError("limit polynomial: 'terms' must be an array");
  std::vector<Term> parsed;
  for (const json& t : terms) {
    const int y = optional_int(t, "y");
    if (y < 0) throw ParseError("limit polynomial: negative y exponent");
    parsed.push_back(
        plain_term(rational_field(t, "coeff"), exponents(require(t, "x"), n, "limit"), y, 0, optional_int(t, "a")));
  }
  return normalize(mode, n, basis, std::move(parsed));
}

}  // namespace helmlayer::io
