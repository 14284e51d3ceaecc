#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/errors.hpp"
#include "nilrep/numeric.hpp"

namespace nilrep {

// Exponent vector (e_1, ..., e_n) of the normal form a_1^{e_1} ... a_n^{e_n}.
class NormalWord {
 public:
  NormalWord() = default;
  explicit NormalWord(int n) : exps_(static_cast<size_t>(n), Int(0)) {}
  explicit NormalWord(std::vector<Int> exps) : exps_(std::move(exps)) {}

  static NormalWord identity(int n) { return NormalWord(n); }

  int size() const { return static_cast<int>(exps_.size()); }
  bool is_identity() const;
  const Int& exp(int i) const { return exps_[static_cast<size_t>(i - 1)]; }
  Int& exp(int i) { return exps_[static_cast<size_t>(i - 1)]; }
  const std::vector<Int>& exponents() const { return exps_; }

  std::string str() const;  // "(1, 0, -2)"

  bool operator==(const NormalWord&) const = default;

 private:
  std::vector<Int> exps_;
};

// Word over the generators as a sequence of syllables (generator, exponent).
// A plain letter is a syllable with exponent +1 or -1.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<std::pair<int, long>> sylls);

  void push(int gen, Int exp);
  const std::vector<std::pair<int, Int>>& syllables() const { return sylls_; }
  bool empty() const { return sylls_.empty(); }

  // CLI syntax: whitespace-separated tokens "g<k>", "g<k>^-1", "g<k>^<e>".
  static Word parse(const std::string& text, int n);

 private:
  std::vector<std::pair<int, Int>> sylls_;
};

enum class UtOrder { standard, column };

// A Mal'cev presentation: generators a_1..a_n, optional positive weights,
// and for pairs i < j the normal word of [a_i, a_j] over indices > j.
// An absent relation entry means the pair commutes.
class PolycyclicPresentation {
 public:
  using RelationMap = std::map<std::pair<int, int>, NormalWord>;

  // Validates all invariants; empty relation words are dropped. Passing an
  // empty name list installs default names g1..gn.
  static PolycyclicPresentation create(int n, std::vector<std::string> names,
                                       std::vector<int> weights,
                                       RelationMap relations);

  int generators() const { return n_; }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i - 1)]; }
  const std::vector<std::string>& names() const { return names_; }

  bool has_weights() const { return !weights_.empty(); }
  int weight(int i) const;  // throws WeightError when weights are absent
  const std::vector<int>& weights() const { return weights_; }
  int nilpotency_class() const;      // max declared weight
  int weight_one_generators() const; // count of weight-1 generators

  // nullptr when the pair commutes. Requires 1 <= i < j <= n.
  const NormalWord* relation(int i, int j) const;
  const RelationMap& relations() const { return relations_; }
  bool commutes(int i, int j) const { return relation(i, j) == nullptr; }

  std::string serialize() const;
  static PolycyclicPresentation parse(const std::string& text);
  static PolycyclicPresentation parse_stream(std::istream& in);

  bool operator==(const PolycyclicPresentation&) const = default;

 private:
  PolycyclicPresentation() = default;

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<int> weights_;  // empty when absent
  RelationMap relations_;
};

// Built-in families used by the report suites.
PolycyclicPresentation builtin_ut(int m, UtOrder order);
PolycyclicPresentation builtin_heisenberg(int m);
PolycyclicPresentation builtin_free_abelian(int k);
PolycyclicPresentation builtin_free_nilpotent_c2(int k);
PolycyclicPresentation builtin_filiform(int c);

PolycyclicPresentation direct_product(const PolycyclicPresentation& a,
                                      const PolycyclicPresentation& b);
PolycyclicPresentation central_product(const PolycyclicPresentation& a,
                                       const PolycyclicPresentation& b);

// Basis position (1-based) -> matrix cell (i, j) of builtin_ut(m, order).
std::vector<std::pair<int, int>> ut_generator_labels(int m, UtOrder order);

}  // namespace nilrep
