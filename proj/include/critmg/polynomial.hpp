/*
  Exact multivariate polynomials over Q.

  This is the computational substrate for the symmetric algebra S = S(h):
  the variables x0..x{n-1} are the simple coroots of the finite root system,
  so linear forms in them are finite coweights and the edge labels of moment
  graphs live in degree one.

  The canonical term order is graded lexicographic on the fixed variable
  list; monomial_basis enumerates each graded piece in that order, which is
  what makes all the degreewise bases downstream reproducible.

  Quotients are only ever taken by principal ideals (ell) generated by a
  nonzero linear form. reduce_mod_linear eliminates the variable of largest
  index occurring in ell, so the reduced form is a polynomial in the
  remaining variables and two polynomials are congruent mod (ell) iff their
  reductions coincide. No Groebner machinery is needed for that.
*/

#pragma once

#include <map>
#include <sstream>

#include "critmg/linalg.hpp"

namespace critmg {

using Exponents = std::vector<int>;

// Graded-lex: first by total degree, then lexicographically with x0 heaviest.
inline bool grlex_less(const Exponents& a, const Exponents& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  return a > b;  // (2,0) precedes (1,1): larger lex vector = earlier
}

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }

  static Polynomial constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Polynomial variable(int nvars, int i) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rational(1));
    return p;
  }

  static Polynomial monomial(int nvars, const Exponents& e, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("exponent vector length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Total degree of the polynomial, -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (int x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (int x : e) t += x;
      if (t != d) return false;
    }
    return true;
  }

  Polynomial operator+(const Polynomial& q) const {
    check_ring(q);
    Polynomial r = *this;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator-(const Polynomial& q) const {
    check_ring(q);
    Polynomial r = *this;
    for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& q) const {
    check_ring(q);
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : q.terms_) {
        Exponents e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  Polynomial scale(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
  }

  bool operator==(const Polynomial& q) const {
    return nvars_ == q.nvars_ && terms_ == q.terms_;
  }
  bool operator!=(const Polynomial& q) const { return !(*this == q); }

  Rational eval(const QVec& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("evaluation point has wrong dimension");
    Rational s(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      s += t;
    }
    return s;
  }

 private:
  void check_ring(const Polynomial& q) const {
    if (nvars_ != q.nvars_)
      throw std::invalid_argument("polynomial variable lists differ");
  }

  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

// A degree-one element of S, e.g. a finite coroot; kept as a plain
// coefficient vector over the variable basis.
struct LinearForm {
  QVec coeffs;

  int nvars() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const Rational& c) { return c == 0; });
  }
  Polynomial to_poly() const {
    Polynomial p(nvars());
    for (int i = 0; i < nvars(); ++i) {
      if (coeffs[i] == 0) continue;
      Exponents e(nvars(), 0);
      e[i] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }
  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }

  // Over Q two forms label-collide iff they are proportional.
  bool proportional_to(const LinearForm& o) const {
    const int n = nvars();
    int i = 0;
    while (i < n && coeffs[i] == 0 && o.coeffs[i] == 0) ++i;
    if (i == n) return true;  // both zero
    if (coeffs[i] == 0 || o.coeffs[i] == 0) return false;
    const Rational f = o.coeffs[i] / coeffs[i];
    for (int j = i; j < n; ++j)
      if (coeffs[j] * f != o.coeffs[j]) return false;
    return true;
  }
};

// All exponent vectors of total degree d in n variables, in graded-lex
// order; there are C(d+n-1, n-1) of them.
inline std::vector<Exponents> monomial_basis(int d, int n) {
  if (d < 0 || n < 1) throw std::invalid_argument("monomial_basis: bad arguments");
  std::vector<Exponents> out;
  Exponents cur(n, 0);
  // Recursive descent assigning x0 first keeps the list in graded-lex order.
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, rem - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

// Index of the variable reduce_mod_linear eliminates: the leading variable
// of ell in the term order (the smallest supported index, x0 heaviest).
inline int elimination_variable(const LinearForm& ell) {
  for (int i = 0; i < ell.nvars(); ++i)
    if (ell.coeffs[i] != 0) return i;
  throw std::invalid_argument("zero linear form");
}

// Canonical representative of p modulo the principal ideal (ell):
// substitute the eliminated variable by the solved linear expression.
// p == q mod (ell) iff the reductions agree.
inline Polynomial reduce_mod_linear(const Polynomial& p, const LinearForm& ell) {
  if (ell.nvars() != p.nvars())
    throw std::invalid_argument("linear form over a different variable list");
  const int k = elimination_variable(ell);
  // x_k = sum_{i != k} (-c_i / c_k) x_i
  Polynomial subst(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) {
    if (i == k || ell.coeffs[i] == 0) continue;
    Exponents e(p.nvars(), 0);
    e[i] = 1;
    subst.add_term(e, -ell.coeffs[i] / ell.coeffs[k]);
  }
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(p.nvars(), c);
    Exponents rest = e;
    rest[k] = 0;
    term = term * Polynomial::monomial(p.nvars(), rest, Rational(1));
    for (int t = 0; t < e[k]; ++t) term = term * subst;
    out = out + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graded solves.

struct GradedVectorSpaceBasis {
  int degree = 0;
  std::vector<QVec> basis;  // RREF rows over the coordinate space
};

// Canonical basis of the common solution space of homogeneous rational
// linear equations on a coordinate space of the given dimension.
inline GradedVectorSpaceBasis solve_graded(std::size_t space_dim,
                                           const std::vector<QVec>& equations,
                                           int degree = 0) {
  QMatrix m(space_dim);
  for (const auto& eq : equations) {
    if (eq.size() != space_dim)
      throw std::invalid_argument("equation over a different coordinate space");
    m.add_row(eq);
  }
  GradedVectorSpaceBasis out;
  out.degree = degree;
  if (m.rows.empty()) {
    for (std::size_t i = 0; i < space_dim; ++i) {
      QVec v(space_dim, Rational(0));
      v[i] = 1;
      out.basis.push_back(std::move(v));
    }
    return out;
  }
  out.basis = kernel_basis(std::move(m));
  return out;
}

// ---------------------------------------------------------------------------
// Coefficient-vector views of graded pieces.

inline QVec coeff_vector(const Polynomial& p, const std::vector<Exponents>& basis) {
  QVec v(basis.size(), Rational(0));
  std::map<Exponents, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  for (const auto& [e, c] : p.terms()) {
    auto it = pos.find(e);
    if (it == pos.end())
      throw std::invalid_argument("polynomial not supported on the monomial basis");
    v[it->second] = c;
  }
  return v;
}

inline Polynomial poly_from_coeffs(int nvars, const std::vector<Exponents>& basis,
                                   const QVec& v) {
  Polynomial p(nvars);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (v[i] != 0) p.add_term(basis[i], v[i]);
  return p;
}

// ---------------------------------------------------------------------------
// Serialization. Grammar (documented in the README):
//   poly   := "0" | term (" + " term)*
//   term   := rat | rat "*" factors | factors
//   factors:= factor ("*" factor)*
//   factor := "x" index | "x" index "^" exponent
//   rat    := ["-"] digits ["/" digits]
// Terms are emitted in graded-lex order, highest degree first; the
// coefficient is always printed and exponent 1 is implicit.

std::string poly_to_string(const Polynomial& p);
Polynomial poly_from_string(int nvars, const std::string& s);

}  // namespace critmg
