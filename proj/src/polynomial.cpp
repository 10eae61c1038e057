#include "critmg/polynomial.hpp"

namespace critmg {

namespace {

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Print order: highest degree first, then lexicographically descending
// (x0-heavy terms first within a degree).
bool print_before(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

std::string poly_to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) out += " + ";
    first = false;
    out += rat_to_string(c);
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      out += "*x" + std::to_string(i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

Polynomial poly_from_string(int nvars, const std::string& s) {
  Polynomial p(nvars);
  if (s == "0") return p;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(" + ", pos);
    const std::string term =
        s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end + 3;
    if (term.empty()) throw std::invalid_argument("empty term in polynomial: " + s);

    Rational coeff(1);
    Exponents e(nvars, 0);
    bool have_coeff = false;
    std::size_t tp = 0;
    while (tp < term.size()) {
      std::size_t te = term.find('*', tp);
      const std::string factor =
          term.substr(tp, te == std::string::npos ? std::string::npos : te - tp);
      tp = te == std::string::npos ? term.size() : te + 1;
      if (factor.empty()) throw std::invalid_argument("empty factor in term: " + term);
      if (factor[0] == 'x') {
        std::size_t caret = factor.find('^');
        const std::string idx = factor.substr(1, caret == std::string::npos
                                                     ? std::string::npos
                                                     : caret - 1);
        int i = std::stoi(idx);
        if (i < 0 || i >= nvars)
          throw std::invalid_argument("variable index out of range: " + factor);
        int exp = 1;
        if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
        if (exp < 1) throw std::invalid_argument("bad exponent: " + factor);
        e[i] += exp;
      } else {
        if (have_coeff)
          throw std::invalid_argument("two coefficients in term: " + term);
        coeff = rat_from_string(factor);
        have_coeff = true;
      }
    }
    p.add_term(e, coeff);
  }
  return p;
}

}  // namespace critmg
