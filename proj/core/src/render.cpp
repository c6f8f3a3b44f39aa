#include "helmlayer/render.hpp"

#include <vector>

namespace helmlayer {

namespace {

struct Style {
  bool latex;
  Mode mode;
  std::size_t n;

  std::string param() const {
    if (latex) return mode == Mode::Hyperbolic ? "\\lambda" : "\\mu";
    return mode == Mode::Hyperbolic ? "lambda" : "mu";
  }
  std::string fn(bool sine) const {
    const char* base = mode == Mode::Hyperbolic ? (sine ? "sinh" : "cosh") : (sine ? "sin" : "cos");
    return latex ? std::string("\\") + base : std::string(base);
  }
  std::string power(const std::string& base, int k) const {
    if (k == 1) return base;
    return latex ? base + "^{" + std::to_string(k) + "}" : base + "^" + std::to_string(k);
  }
  std::string x_name(std::size_t i) const {
    if (n == 1) return "x";
    return latex ? "x_{" + std::to_string(i + 1) + "}" : "x" + std::to_string(i + 1);
  }
  std::string argument(const char* var) const {
    return latex ? param() + " " + var : param() + "*" + var;
  }
  // sinh(lambda*a)^k in text, \sinh^{k}(\lambda a) in LaTeX.
  std::string osc_power(bool sine, const char* var, int k) const {
    const std::string arg = "(" + argument(var) + ")";
    if (latex) return (k == 1 ? fn(sine) : fn(sine) + "^{" + std::to_string(k) + "}") + arg;
    return power(fn(sine) + arg, k);
  }
};

void split_factors(const Term& t, const Style& st, std::vector<std::string>& num, std::vector<std::string>& den) {
  const Monomial& m = t.mono;
  for (std::size_t i = 0; i < m.alpha.size(); ++i) {
    if (m.alpha[i] > 0) num.push_back(st.power(st.x_name(i), m.alpha[i]));
  }
  if (m.j > 0) num.push_back(st.power("y", m.j));
  if (m.p > 0) num.push_back(st.power("a", m.p));
  if (m.oy == YOsc::Sy) num.push_back(st.fn(true) + "(" + st.argument("y") + ")");
  if (m.oy == YOsc::Cy) num.push_back(st.fn(false) + "(" + st.argument("y") + ")");
  if (m.sa > 0) num.push_back(st.osc_power(true, "a", m.sa));
  if (m.ca > 0) num.push_back(st.osc_power(false, "a", m.ca));
  if (m.e > 0) num.push_back(st.power(st.param(), m.e));

  if (m.e < 0) den.push_back(st.power(st.param(), -m.e));
  if (m.p < 0) den.push_back(st.power("a", -m.p));
  if (m.sa < 0) den.push_back(st.osc_power(true, "a", -m.sa));
  if (m.ca < 0) den.push_back(st.osc_power(false, "a", -m.ca));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string render_term_body(const Term& t, const Style& st) {
  std::vector<std::string> num, den;
  const Integer p = abs(numerator(t.coeff));
  const Integer q = denominator(t.coeff);
  if (p != 1) num.push_back(p.str());
  if (q != 1) den.push_back(q.str());
  split_factors(t, st, num, den);
  if (st.latex) {
    const std::string top = num.empty() ? "1" : join(num, " ");
    return den.empty() ? top : "\\frac{" + top + "}{" + join(den, " ") + "}";
  }
  const std::string top = num.empty() ? "1" : join(num, "*");
  if (den.empty()) return top;
  return top + "/" + (den.size() == 1 ? den.front() : "(" + join(den, "*") + ")");
}

std::string render(const QuasiPoly& q, bool latex) {
  if (q.is_zero()) return "0";
  const Style st{latex, q.mode(), q.dimension()};
  std::string out;
  bool first = true;
  for (const Term& t : q.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += render_term_body(t, st);
    first = false;
  }
  return out;
}

}  // namespace

std::string render_text(const QuasiPoly& q) { return render(q, false); }

std::string render_latex(const QuasiPoly& q) { return render(q, true); }

}  // namespace helmlayer
