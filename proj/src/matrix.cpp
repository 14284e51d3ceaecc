#include "nilrep/matrix.hpp"

#include <sstream>

namespace nilrep {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (n_ != other.n_) throw Error("matrix size mismatch");
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) {
        const Int& bkj = other.at(k, j);
        if (bkj == 0) continue;
        mpz_addmul(out.at(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  return out;
}

bool IntMatrix::is_unitriangular() const {
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 1) return false;
    for (int j = 0; j < i; ++j)
      if (at(i, j) != 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::inverse_unitriangular() const {
  if (!is_unitriangular()) throw Error("matrix is not unitriangular");
  IntMatrix inv = identity(n_);
  for (int i = n_ - 1; i >= 0; --i)
    for (int j = i + 1; j < n_; ++j) {
      Int v = at(i, j);
      for (int k = i + 1; k < j; ++k)
        mpz_addmul(v.get_mpz_t(), at(i, k).get_mpz_t(), inv.at(k, j).get_mpz_t());
      inv.at(i, j) = -v;
    }
  return inv;
}

IntMatrix IntMatrix::power(const Int& e) const {
  IntMatrix base = e < 0 ? inverse_unitriangular() : *this;
  Int todo = abs(e);
  IntMatrix acc = identity(n_);
  while (todo > 0) {
    if (mpz_odd_p(todo.get_mpz_t())) acc = acc * base;
    todo >>= 1;
    if (todo > 0) base = base * base;
  }
  return acc;
}

std::string IntMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i) {
    out << (i == 0 ? "[" : " ");
    out << "[";
    for (int j = 0; j < n_; ++j) {
      if (j) out << ", ";
      out << at(i, j).get_str();
    }
    out << "]" << (i + 1 == n_ ? "]" : "\n");
  }
  return out.str();
}

IntMatrix MatrixRepresentation::of(const NormalWord& g) const {
  IntMatrix acc = IntMatrix::identity(dimension);
  for (int i = 1; i <= g.size(); ++i) {
    if (g.exp(i) == 0) continue;
    acc = acc * generators[static_cast<size_t>(i - 1)].power(g.exp(i));
  }
  return acc;
}

}  // namespace nilrep
