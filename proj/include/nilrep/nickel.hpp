#pragma once

#include <optional>
#include <vector>

#include "nilrep/matrix.hpp"
#include "nilrep/multpoly.hpp"
#include "nilrep/poly.hpp"

namespace nilrep {

// Echelonized polynomial basis kept sorted by strictly decreasing leading
// monomial under the weight-graded order.
class ModuleBasis {
 public:
  explicit ModuleBasis(MonomialOrder order) : order_(std::move(order)) {}

  const MonomialOrder& order() const { return order_; }
  size_t size() const { return polys_.size(); }
  const Polynomial& poly(size_t pos) const { return polys_[pos]; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  std::optional<size_t> position_of_lm(const Monomial& m) const;

  // Reduces f against the basis; a nonzero remainder is normalized to
  // primitive integer form (content one, positive leading coefficient) and
  // inserted at its ordered place. Returns the remainder, zero when f was
  // already in the span.
  Polynomial insert(Polynomial f);

  Polynomial reduce(Polynomial f) const;
  bool in_span(const Polynomial& f) const { return reduce(f).is_zero(); }
  // Expresses f over the basis; throws VerificationError if f is outside.
  std::vector<Rat> coordinates(Polynomial f) const;

 private:
  MonomialOrder order_;
  std::vector<Polynomial> polys_;
  std::vector<Monomial> lms_;  // cached leading monomials, aligned with polys_
  std::map<Monomial, size_t> by_lm_;
};

std::vector<Polynomial> coordinate_seeds(const PolycyclicPresentation& p);

struct ClosureOptions {
  size_t max_dim = 0;  // 0: derived safety bound from the class and rank
};

// Module closure under the generator action f -> f(q^{(j)}), sweeping
// j = n down to 1 and then verifying closure to a fixed point.
ModuleBasis closure(const PolycyclicPresentation& p, const RestrictedMultPolys& rmp,
                    std::vector<Polynomial> seeds = {}, ClosureOptions opts = {});

MatrixRepresentation extract_matrices(const PolycyclicPresentation& p,
                                      const ModuleBasis& basis,
                                      const RestrictedMultPolys& rmp);

size_t nickel_dimension(const PolycyclicPresentation& p);
MatrixRepresentation nickel_matrices(const PolycyclicPresentation& p);

}  // namespace nilrep
