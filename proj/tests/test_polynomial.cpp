#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace critmg;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int nvars, int maxdeg) {
  Polynomial p(nvars);
  const int nterms = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < nterms; ++t) {
    Exponents e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>(rng() % (maxdeg + 1));
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = 1 + static_cast<long>(rng() % 4);
    p.add_term(e, Rational(num, den));
  }
  return p;
}

LinearForm random_form(std::mt19937_64& rng, int nvars) {
  LinearForm f;
  do {
    f.coeffs.clear();
    for (int i = 0; i < nvars; ++i)
      f.coeffs.push_back(Rational(static_cast<long>(rng() % 7) - 3));
  } while (f.is_zero());
  return f;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);

  CHECK((x + x.scale(Rational(-1))).is_zero());
  CHECK((x + y) * (x - y) == x * x - y * y);

  Polynomial x2y = x * x * y;
  Polynomial scaled = x2y.scale(Rational(3, 2));
  CHECK(scaled.terms().begin()->second == Rational(3, 2));

  const Polynomial other(3);
  CHECK_THROWS_AS((void)(x + other), std::invalid_argument);
}

TEST_CASE("polynomial invariants: no zero terms, exact rationals") {
  Polynomial p(2);
  p.add_term({1, 0}, Rational(1, 3));
  p.add_term({1, 0}, Rational(-1, 3));
  CHECK(p.is_zero());
  CHECK(p.terms().empty());

  Polynomial q(2);
  q.add_term({0, 1}, Rational(2, 6));
  CHECK(q.terms().begin()->second == Rational(1, 3));
}

TEST_CASE("monomial_basis order and counts") {
  CHECK(monomial_basis(0, 3) == std::vector<Exponents>{{0, 0, 0}});
  CHECK(monomial_basis(2, 1) == std::vector<Exponents>{{2}});
  CHECK(monomial_basis(2, 2) == std::vector<Exponents>{{2, 0}, {1, 1}, {0, 2}});
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d)
      CHECK(static_cast<long>(monomial_basis(d, n).size()) ==
            oracles::binomial(d + n - 1, n - 1));
}

TEST_CASE("reduce_mod_linear examples") {
  const int n = 2;
  const Polynomial x = Polynomial::variable(n, 0);
  const Polynomial y = Polynomial::variable(n, 1);

  LinearForm lx;
  lx.coeffs = {Rational(1), Rational(0)};
  CHECK(reduce_mod_linear(x, lx).is_zero());

  LinearForm xmy;
  xmy.coeffs = {Rational(1), Rational(-1)};
  CHECK(reduce_mod_linear(x * x, xmy) == y * y);

  LinearForm xpy;
  xpy.coeffs = {Rational(1), Rational(1)};
  // remainder of (x+y) by (x+y) is zero; the oracle substitutes the
  // hyperplane parametrization instead of eliminating a variable
  CHECK(oracles::divisible_by_linear(x + y, xpy));
  CHECK(reduce_mod_linear(x + y, xpy).is_zero());

  LinearForm zero;
  zero.coeffs = {Rational(0), Rational(0)};
  CHECK_THROWS_AS(reduce_mod_linear(x, zero), std::invalid_argument);
}

TEST_CASE("reduce_mod_linear is a ring map and kills multiples of ell") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int nvars = 2 + static_cast<int>(rng() % 2);
    const Polynomial p = random_poly(rng, nvars, 2);
    const Polynomial q = random_poly(rng, nvars, 2);
    const LinearForm ell = random_form(rng, nvars);

    const Polynomial lhs = reduce_mod_linear(p * q, ell);
    const Polynomial rhs =
        reduce_mod_linear(reduce_mod_linear(p, ell) * reduce_mod_linear(q, ell), ell);
    CHECK(lhs == rhs);

    CHECK(reduce_mod_linear(p + ell.to_poly() * q, ell) == reduce_mod_linear(p, ell));

    // congruence test agrees with the hyperplane-substitution oracle
    CHECK(oracles::divisible_by_linear(p - q, ell) ==
          (reduce_mod_linear(p, ell) == reduce_mod_linear(q, ell)));
  }
}

TEST_CASE("solve_graded basics") {
  // no constraints in a 3-dim space
  CHECK(solve_graded(3, {}).basis.size() == 3);
  // v = 0 coordinatewise
  {
    std::vector<QVec> eqs = {{Rational(1), Rational(0), Rational(0)},
                             {Rational(0), Rational(1), Rational(0)},
                             {Rational(0), Rational(0), Rational(1)}};
    CHECK(solve_graded(3, eqs).basis.empty());
  }
  // v1 - v2 = 0 in a 2-dim space
  {
    std::vector<QVec> eqs = {{Rational(1), Rational(-1)}};
    const auto sol = solve_graded(2, eqs);
    REQUIRE(sol.basis.size() == 1);
    CHECK(sol.basis[0] == QVec{Rational(1), Rational(1)});
  }
}

TEST_CASE("solve_graded output is independent and satisfies the constraints") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 3 + rng() % 4;
    std::vector<QVec> eqs;
    const int neq = static_cast<int>(rng() % 4);
    for (int e = 0; e < neq; ++e) {
      QVec row(dim);
      for (auto& c : row) c = Rational(static_cast<long>(rng() % 7) - 3);
      eqs.push_back(std::move(row));
    }
    const auto sol = solve_graded(dim, eqs);
    for (const QVec& v : sol.basis)
      for (const QVec& eq : eqs) {
        Rational dot(0);
        for (std::size_t i = 0; i < dim; ++i) dot += v[i] * eq[i];
        CHECK(dot == 0);
      }
    std::vector<QVec> copy = sol.basis;
    CHECK(oracles::plain_rank(copy) == static_cast<int>(sol.basis.size()));
  }
}

TEST_CASE("polynomial string grammar round trip") {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  const Polynomial p = x * x + y.scale(Rational(-3, 2)) + Polynomial::constant(2, Rational(5));
  CHECK(poly_to_string(p) == "1*x0^2 + -3/2*x1 + 5");
  CHECK(poly_from_string(2, poly_to_string(p)) == p);
  CHECK(poly_to_string(Polynomial::zero(2)) == "0");
  CHECK(poly_from_string(2, "0").is_zero());

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial q = random_poly(rng, 3, 3);
    CHECK(poly_from_string(3, poly_to_string(q)) == q);
  }
  CHECK_THROWS_AS(poly_from_string(1, "1*x7"), std::invalid_argument);
}
