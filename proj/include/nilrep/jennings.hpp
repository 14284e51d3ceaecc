#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilrep/collect.hpp"
#include "nilrep/matrix.hpp"

namespace nilrep {

// Canonical u-monomial u_1^{r_1} ... u_n^{r_n} with u_i = 1 - a_i,
// stored as the exponent vector.
using UMonomial = std::vector<int>;
std::string umonomial_str(const UMonomial& v);  // "1", "u1^2*u3"

// Group-ring element reduced modulo monomials of weight above the class.
struct GroupRingElement {
  std::map<UMonomial, Rat> terms;
  bool operator==(const GroupRingElement&) const = default;
};

// Count of u-monomials of weight at most the class, computed without
// materializing the basis.
Int jennings_dimension(const PolycyclicPresentation& p);

// Writes a_1^{e_1} ... a_n^{e_n} = prod (1 - u_i)^{e_i} over the truncated
// u-monomial basis; negative exponents expand by the truncated geometric
// series.
GroupRingElement group_elem_to_ubasis(const PolycyclicPresentation& p,
                                      const NormalWord& g);

// The weight-<= c u-monomials ordered by ascending weight; ties broken by
// descending exponent vectors.
std::vector<UMonomial> jennings_basis(const PolycyclicPresentation& p,
                                      size_t max_dim);

// Right-multiplication matrices on the truncated basis; asserts dimension,
// unitriangularity, integrality, and the defining relations.
MatrixRepresentation jennings_matrices(const PolycyclicPresentation& p,
                                       const Collector& coll,
                                       size_t max_dim = 5000);

// (1/d) sum_{e | d} mu(d/e) k^e and its partial sums.
Int witt_rank(long k, long d);
Int hirsch_free_nilpotent(long k, long c);

}  // namespace nilrep
