#include <doctest.h>

#include <random>

#include "nilrep/poly.hpp"

using namespace nilrep;

namespace {

Polynomial X(int i) { return Polynomial::variable(i); }
Polynomial C(long v) { return Polynomial::constant(Rat(v)); }

Polynomial random_poly(std::mt19937_64& rng, int vars, int max_terms) {
  Polynomial p;
  int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int deg = static_cast<int>(rng() % 4);
    for (int d = 0; d < deg; ++d)
      m = m * Monomial::var(1 + static_cast<int>(rng() % static_cast<unsigned>(vars)));
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 4);
    Rat c(num, den);
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

Monomial random_monomial(std::mt19937_64& rng, int vars, int max_deg) {
  Monomial m;
  int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
  for (int d = 0; d < deg; ++d)
    m = m * Monomial::var(1 + static_cast<int>(rng() % static_cast<unsigned>(vars)));
  return m;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  CHECK((X(1) + (-X(1))).is_zero());
  CHECK((X(1) + C(1)) * (X(1) - C(1)) == X(1) * X(1) - C(1));
  CHECK(X(2).scaled(Rat(2)).scaled(Rat(1, 2)) == X(2));
  CHECK((X(1) - X(1)).is_zero());
}

TEST_CASE("substitution") {
  // x3 -> x3 + x2
  std::map<int, Polynomial> shift = {{3, X(3) + X(2)}};
  CHECK(X(3).substitute(shift) == X(3) + X(2));
  // the identity map
  Polynomial p = X(1) * X(2) + C(5);
  CHECK(p.substitute({}) == p);
  // distributivity over a product monomial
  std::map<int, Polynomial> dec = {{1, X(1) - C(1)}};
  CHECK((X(1) * X(2)).substitute(dec) == X(1) * X(2) - X(2));
}

TEST_CASE("weight-graded order") {
  MonomialOrder ord({1, 1, 2});
  Monomial x1x2 = Monomial::var(1) * Monomial::var(2);
  Monomial x3 = Monomial::var(3);
  // equal weight; the shorter monomial ranks higher
  CHECK(ord.less(x1x2, x3));
  CHECK_FALSE(ord.less(x3, x1x2));
  CHECK(ord.weight(Monomial::var(2) * Monomial::var(3)) == 3);
  CHECK((X(1) + C(1)).leading_monomial(ord) == Monomial::var(1));
  // constant monomial is minimal
  CHECK(ord.less(Monomial(), Monomial::var(1)));
  // x_1 < x_2 < x_3 < y_1
  CHECK(ord.less(Monomial::var(1), Monomial::var(2)));
  CHECK(ord.less(Monomial::var(1), Monomial::var(y_var(1))));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    Polynomial a = random_poly(rng, 3, 4);
    Polynomial b = random_poly(rng, 3, 4);
    Polynomial c = random_poly(rng, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("the order is total and admissible") {
  std::mt19937_64 rng(17);
  MonomialOrder ord({1, 2, 3, 1});
  for (int t = 0; t < 300; ++t) {
    Monomial a = random_monomial(rng, 4, 4);
    Monomial b = random_monomial(rng, 4, 4);
    Monomial w = random_monomial(rng, 4, 3);
    int cmp = ord.less(a, b) ? -1 : (ord.less(b, a) ? 1 : 0);
    if (cmp == 0) CHECK(a == b);  // total
    if (cmp < 0) CHECK(ord.less(a * w, b * w));  // translation invariant
    if (!w.is_one()) CHECK(ord.less(a, a * w));  // divisibility increases
  }
}

TEST_CASE("substitution composes") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    Polynomial p = random_poly(rng, 2, 3);
    std::map<int, Polynomial> sigma = {{1, random_poly(rng, 2, 2)},
                                       {2, random_poly(rng, 2, 2)}};
    std::map<int, Polynomial> tau = {{1, random_poly(rng, 2, 2)},
                                     {2, random_poly(rng, 2, 2)}};
    std::map<int, Polynomial> comp;
    for (auto& [v, q] : sigma) comp[v] = q.substitute(tau);
    CHECK(p.substitute(sigma).substitute(tau) == p.substitute(comp));
  }
}

TEST_CASE("rendering and parsing") {
  MonomialOrder ord = MonomialOrder::unit(3);
  Polynomial p = X(3) + X(2);
  CHECK(p.str(&ord) == "x3 + x2");
  CHECK((X(1) * X(2) - X(2)).str(&ord) == "x1*x2 - x2");
  CHECK((X(1) * X(1) * X(3)).str(&ord) == "x1^2*x3");
  CHECK(C(0).str() == "0");
  CHECK((X(1).scaled(Rat(1, 2)) - C(1)).str(&ord) == "1/2*x1 - 1");
  Polynomial q = Polynomial::variable(y_var(2)) * X(1);
  CHECK(q.str(&ord) == "x1*y2");

  CHECK(Polynomial::parse("x3 + x2") == p);
  CHECK(Polynomial::parse("x1*x2 - x2") == X(1) * X(2) - X(2));
  CHECK(Polynomial::parse("1/2*x1 - 1") == X(1).scaled(Rat(1, 2)) - C(1));
  CHECK(Polynomial::parse("-x1 + 2") == C(2) - X(1));
  CHECK(Polynomial::parse("x1*y2") == q);
  CHECK_THROWS_AS(Polynomial::parse("x1 + + x2"), SyntaxError);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    Polynomial r = random_poly(rng, 3, 5);
    CHECK(Polynomial::parse(r.str(&ord)) == r);
  }
}

TEST_CASE("binomial polynomials take integer values") {
  Polynomial b3 = Polynomial::binomial_in_var(1, 3);
  for (long v = -4; v <= 6; ++v) {
    Rat value = b3.evaluate([&](int) { return Rat(v); });
    CHECK(is_integer(value));
    long expected = v * (v - 1) * (v - 2) / 6;
    CHECK(value == Rat(expected));
  }
}
