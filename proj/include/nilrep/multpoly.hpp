#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nilrep/collect.hpp"
#include "nilrep/poly.hpp"

namespace nilrep {

// Restricted multiplication polynomials: q_i^{(j)} describes the i-th
// normal-form exponent of (a_1^{x_1} ... a_n^{x_n}) a_j^{-1}.
struct RestrictedMultPolys {
  int n = 0;
  std::vector<std::vector<Polynomial>> q;  // q[j-1][i-1]
  const Polynomial& poly(int i, int j) const {
    return q[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)];
  }
};

struct MultPolyOptions {
  int verify_points = 25;       // off-grid residual checks per generator
  int verify_range = 3;         // entries drawn from [-range, range]
  std::uint64_t verify_seed = 0x5bd1e995u;
};

// Interpolates q_i^{(j)} for one right-hand generator j against the
// collection oracle and verifies the result at off-grid points.
std::vector<Polynomial> restricted_mult_polys_for(const PolycyclicPresentation& p,
                                                  const Collector& coll, int j,
                                                  const MultPolyOptions& opts = {});
RestrictedMultPolys restricted_mult_polys(const PolycyclicPresentation& p,
                                          const Collector& coll,
                                          const MultPolyOptions& opts = {});

// Full symbolic multiplication polynomials q_{k,l}(x, y) of the unitriangular
// group, computed by the generalized collection process with polynomial
// exponents.
struct UTSymbolicProduct {
  int m = 0;
  UtOrder order = UtOrder::standard;
  int n = 0;
  std::vector<std::pair<int, int>> labels;  // basis position -> cell (i, j)
  std::vector<Polynomial> q;                // q[k-1] for basis position k
  int position(int i, int j) const;
  const Polynomial& at_cell(int i, int j) const {
    return q[static_cast<size_t>(position(i, j) - 1)];
  }
};

UTSymbolicProduct ut_symbolic_product(int m, UtOrder order = UtOrder::standard,
                                      long long max_steps = 2'000'000);

// Every monomial of q_{k,l} must factor as a chain
// X_{k,l1} X_{l1,l2} ... X_{l_{d-1},l} with strictly increasing indices
// and X in {x, y}. Returns the first offender, if any.
struct ChainViolation {
  int k = 0, l = 0;
  Monomial monomial;
};
std::optional<ChainViolation> chain_shape_violation(const UTSymbolicProduct& prod);

struct CensusRow {
  int k = 0, l = 0;
  long actual = 0;
  long bound = 0;  // 2 * 3^(l - 1 - k)
};
struct CensusTable {
  int m = 0;
  std::vector<CensusRow> rows;
  long total_actual = 0;
  long total_bound = 0;
  Int grand_bound;  // 3^m
  bool within_bounds = true;
};
CensusTable monomial_census_ut(int m);

struct WeightViolation {
  int i = 0, j = 0;
  Monomial monomial;
};
// Lemma-style bound: every monomial of q_i^{(j)} has weight <= weight(a_i).
std::optional<WeightViolation> weight_bound_violation(const PolycyclicPresentation& p,
                                                      const RestrictedMultPolys& rmp);
// Degree bound: total degree of every q_i^{(j)} is at most the class.
std::optional<WeightViolation> degree_bound_violation(const PolycyclicPresentation& p,
                                                      const RestrictedMultPolys& rmp);

}  // namespace nilrep
