#include <doctest.h>

#include <random>

#include "nilrep/nickel.hpp"
#include "nilrep/verify.hpp"

using namespace nilrep;

namespace {

Polynomial X(int i) { return Polynomial::variable(i); }
Polynomial C(long v) { return Polynomial::constant(Rat(v)); }

}  // namespace

TEST_CASE("insert reduces and echelonizes") {
  ModuleBasis basis{MonomialOrder::unit(3)};
  CHECK_FALSE(basis.insert(X(1)).is_zero());
  // eliminating x1 leaves the constant
  Polynomial r = basis.insert(X(1) + C(1));
  CHECK(r == C(1));
  CHECK(basis.size() == 2);
  CHECK(basis.poly(0) == X(1));
  CHECK(basis.poly(1) == C(1));
  // now in the span
  CHECK(basis.insert(X(1).scaled(Rat(3)) - C(2)).is_zero());
  CHECK(basis.size() == 2);

  ModuleBasis empty{MonomialOrder::unit(3)};
  CHECK(empty.insert(X(3) + X(2)) == X(3) + X(2));
  CHECK(empty.size() == 1);
}

TEST_CASE("insert normalizes to primitive integer form") {
  ModuleBasis basis{MonomialOrder::unit(2)};
  // -2/3 x1 + 2/3 normalizes to x1 - 1
  basis.insert(X(1).scaled(Rat(-4, 6)) + Polynomial::constant(Rat(2, 3)));
  CHECK(basis.poly(0) == X(1) - C(1));
}

TEST_CASE("heisenberg closure reproduces the four-dimensional module") {
  PolycyclicPresentation p = builtin_heisenberg(1);
  Collector coll(p);
  RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
  ModuleBasis basis = closure(p, rmp);
  REQUIRE(basis.size() == 4);
  CHECK(basis.poly(0) == X(3));
  CHECK(basis.poly(1) == X(2));
  CHECK(basis.poly(2) == X(1));
  CHECK(basis.poly(3) == C(1));
}

TEST_CASE("free abelian closure is coordinates plus the constant") {
  for (int k : {1, 2, 4}) {
    PolycyclicPresentation p = builtin_free_abelian(k);
    Collector coll(p);
    RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
    CHECK(closure(p, rmp).size() == static_cast<size_t>(k + 1));
  }
}

TEST_CASE("heisenberg(2) closure has dimension six") {
  CHECK(nickel_dimension(builtin_heisenberg(2)) == 6);
}

TEST_CASE("heisenberg matrices equal the displayed embedding") {
  PolycyclicPresentation p = builtin_heisenberg(1);
  MatrixRepresentation rep = nickel_matrices(p);
  REQUIRE(rep.dimension == 4);
  REQUIRE(rep.basis == std::vector<std::string>{"x3", "x2", "x1", "1"});

  // reorder to (t1, t3, t2, 1), the display order
  int pi[4] = {2, 0, 1, 3};
  const long expected[3][4][4] = {
      {{1, 0, 0, -1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  for (int g = 0; g < 3; ++g)
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s)
        CHECK(rep.generators[static_cast<size_t>(g)].at(pi[r], pi[s]) ==
              expected[g][r][s]);

  // identity element maps to the identity matrix
  CHECK(rep.of(NormalWord::identity(3)) == IntMatrix::identity(4));
  // the commutator relation holds in the image
  IntMatrix lhs = rep.generators[0].inverse_unitriangular() *
                  rep.generators[1].inverse_unitriangular() * rep.generators[0] *
                  rep.generators[1];
  CHECK(lhs == rep.generators[2]);
}

TEST_CASE("module dimensions for the column ordering") {
  for (int m : {3, 4, 5})
    CHECK(nickel_dimension(builtin_ut(m, UtOrder::column)) ==
          static_cast<size_t>(m * (m - 1) / 2 + 1));
}

TEST_CASE("standard ut(5) dimension sits within its bounds") {
  size_t dim = nickel_dimension(builtin_ut(5, UtOrder::standard));
  CHECK(dim >= 2);     // 2^(floor(5/2)-1)
  CHECK(dim <= 243);   // 3^5
  CHECK(dim == 16);    // recorded value
}

TEST_CASE("action is triangular in the graded order") {
  for (const PolycyclicPresentation& p :
       {builtin_heisenberg(2), builtin_ut(4, UtOrder::standard)}) {
    Collector coll(p);
    RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
    ModuleBasis basis = closure(p, rmp);
    MonomialOrder ord(p.weights());
    for (int j = 1; j <= p.generators(); ++j) {
      std::map<int, Polynomial> sigma;
      for (int i = 1; i <= p.generators(); ++i) sigma[i] = rmp.poly(i, j);
      for (const Polynomial& f : basis.polys()) {
        Polynomial moved = f.substitute(sigma) - f;
        if (!moved.is_zero())
          CHECK(moved.weight(ord) < ord.weight(f.leading_monomial(ord)));
      }
    }
  }
}

TEST_CASE("homomorphism and faithfulness spot checks") {
  PolycyclicPresentation p = builtin_heisenberg(2);
  Collector coll(p);
  MatrixRepresentation rep = nickel_matrices(p);
  std::mt19937_64 rng(51);
  for (int t = 0; t < 50; ++t) {
    NormalWord u = coll.normal_form(random_word(p, rng));
    NormalWord v = coll.normal_form(random_word(p, rng));
    CHECK(rep.of(u) * rep.of(v) == rep.of(coll.multiply(u, v)));
  }
}

TEST_CASE("extraction demands a closed basis") {
  PolycyclicPresentation p = builtin_heisenberg(1);
  Collector coll(p);
  RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
  ModuleBasis partial{MonomialOrder(p.weights())};
  partial.insert(X(3));
  CHECK_THROWS_AS(extract_matrices(p, partial, rmp), VerificationError);
}

TEST_CASE("closure budget reports runaway bases") {
  PolycyclicPresentation p = builtin_ut(4, UtOrder::standard);
  Collector coll(p);
  RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
  ClosureOptions opts;
  opts.max_dim = 3;
  CHECK_THROWS_AS(closure(p, rmp, {}, opts), NonTerminatingError);
}

TEST_CASE("custom seed lists are accepted") {
  PolycyclicPresentation p = builtin_heisenberg(1);
  Collector coll(p);
  RestrictedMultPolys rmp = restricted_mult_polys(p, coll);
  // the module generated by t3: its orbit pulls in t2 and the constant
  ModuleBasis basis = closure(p, rmp, {X(3)});
  CHECK(basis.size() == 3);
  // t1 alone closes with the constant only
  ModuleBasis small = closure(p, rmp, {X(1)});
  CHECK(small.size() == 2);
}
