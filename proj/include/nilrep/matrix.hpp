#pragma once

#include <string>
#include <vector>

#include "nilrep/errors.hpp"
#include "nilrep/numeric.hpp"
#include "nilrep/presentation.hpp"

namespace nilrep {

// Dense square integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Int(0)) {}
  static IntMatrix identity(int n);

  int size() const { return n_; }
  const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }
  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool is_unitriangular() const;
  IntMatrix inverse_unitriangular() const;
  // Negative exponents require a unitriangular matrix.
  IntMatrix power(const Int& e) const;

  std::string str() const;
  bool operator==(const IntMatrix&) const = default;
  bool operator<(const IntMatrix& other) const { return a_ < other.a_; }

 private:
  int n_ = 0;
  std::vector<Int> a_;
};

// A matrix representation of a presentation: one unitriangular integer
// matrix per generator, acting on row vectors so that rho(gh) = rho(g)rho(h).
struct MatrixRepresentation {
  std::string method;             // "nickel" or "jennings"
  std::string convention = "row";
  int dimension = 0;
  std::vector<std::string> generator_names;
  std::vector<IntMatrix> generators;  // indexed by generator - 1
  std::vector<std::string> basis;     // printable basis labels

  // rho(a_1)^{e_1} ... rho(a_n)^{e_n}
  IntMatrix of(const NormalWord& g) const;
};

}  // namespace nilrep
