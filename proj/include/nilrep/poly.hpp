#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/errors.hpp"
#include "nilrep/numeric.hpp"

namespace nilrep {

// Variable ids: x_i is the id i (1-based); y_i is kYVar + i.
inline constexpr int kYVar = 1 << 20;
inline int y_var(int i) { return kYVar + i; }
inline bool is_y_var(int v) { return v >= kYVar; }
inline int var_index(int v) { return is_y_var(v) ? v - kYVar : v; }
std::string var_name(int v);  // "x3" or "y3"

// Product of variables with positive exponents, kept sorted by variable id.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int v, int exp = 1);

  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(int v) const;
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;
  std::string str() const;  // "x1^2*x3"

  bool operator==(const Monomial&) const = default;
  // structural order, used only as a container key
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<int, int>> factors_;
};

// The admissible order used everywhere: by weight, then by total degree
// (fewer factors rank higher), then by exponents compared from the highest
// variable down, with x_1 < ... < x_n < y_1 < ... < y_n. The constant
// monomial is minimal.
class MonomialOrder {
 public:
  explicit MonomialOrder(std::vector<int> gen_weights);
  static MonomialOrder unit(int n);

  int generators() const { return static_cast<int>(w_.size()); }
  int generator_weight(int i) const { return w_[static_cast<size_t>(i - 1)]; }
  long weight(const Monomial& m) const;
  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

 private:
  std::vector<int> w_;  // weight of x_i and y_i
};

// Sparse polynomial with exact rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(Rat c);
  static Polynomial variable(int v);
  static Polynomial monomial(Monomial m, Rat c);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  Rat coeff(const Monomial& m) const;
  Rat constant_term() const { return coeff(Monomial()); }
  int total_degree() const;  // 0 for the zero polynomial
  bool depends_on(int v) const;

  Polynomial& add_term(const Monomial& m, const Rat& c);
  Polynomial& add_scaled(const Polynomial& p, const Rat& c);
  Polynomial& operator+=(const Polynomial& p) { return add_scaled(p, Rat(1)); }
  Polynomial& operator-=(const Polynomial& p) { return add_scaled(p, Rat(-1)); }
  Polynomial operator+(const Polynomial& p) const;
  Polynomial operator-(const Polynomial& p) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& p) const;
  Polynomial scaled(const Rat& c) const;

  long weight(const MonomialOrder& ord) const;  // -1 for the zero polynomial
  Monomial leading_monomial(const MonomialOrder& ord) const;
  Rat leading_coeff(const MonomialOrder& ord) const;

  // Simultaneous substitution; variables missing from sigma map to themselves.
  using PowerCache = std::map<std::pair<int, int>, Polynomial>;
  Polynomial substitute(const std::map<int, Polynomial>& sigma,
                        PowerCache* cache = nullptr) const;
  Rat evaluate(const std::function<Rat(int)>& point) const;

  // Terms joined with " + "/" - ", descending under ord (structural order
  // when ord is null); coefficients rendered as p or p/q.
  std::string str(const MonomialOrder* ord = nullptr) const;
  static Polynomial parse(const std::string& text);

  // C(x_v, k) with exact rational coefficients.
  static Polynomial binomial_in_var(int v, int k);

  bool operator==(const Polynomial&) const = default;

 private:
  std::map<Monomial, Rat> terms_;
};

}  // namespace nilrep
