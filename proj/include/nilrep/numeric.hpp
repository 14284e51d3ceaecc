#pragma once

#include <gmpxx.h>

#include <string>

namespace nilrep {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

inline bool is_integer(const Rat& q) {
  return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

// C(top, k) for integer top (top may be negative), small k.
inline Int binomial(const Int& top, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
  return r;
}

inline Int int_pow(Int base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace nilrep
