#pragma once

#include <array>
#include <random>
#include <vector>

#include "nilrep/presentation.hpp"

namespace nilrep {

// Run-length encoded word: consecutive letters of one generator.
struct Run {
  int gen;
  Int exp;
};
using RunWord = std::vector<Run>;

enum class RewriteStrategy { leftmost, random_site };

// The four signed commutation rule words per generator pair: the normal word
// of [a_j^{sj}, a_i^{si}] over indices > j, inserted when a_j^{sj} a_i^{si}
// is rewritten to a_i^{si} a_j^{sj} <word>.
class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(int n);

  int generators() const { return n_; }
  bool known(int i, int j) const;
  bool commutes(int i, int j) const;  // requires known(i, j)
  const NormalWord& rule(int i, int j, int sign_i, int sign_j) const;

  void mark_commuting(int i, int j);
  void set(int i, int j, int sign_i, int sign_j, NormalWord w);

 private:
  size_t pair_index(int i, int j) const;
  static size_t sign_slot(int sign_i, int sign_j);

  int n_ = 0;
  std::vector<char> state_;  // 0 unknown, 1 commuting, 2 rule words stored
  std::vector<std::array<NormalWord, 4>> words_;
};

struct CollectOptions {
  long long max_steps = 10'000'000;
  RewriteStrategy strategy = RewriteStrategy::leftmost;
  std::mt19937_64* rng = nullptr;  // required for random_site
  // When false, equal-index runs are never merged; letters introduced by
  // rewrites then provably never disappear. Test hook for the
  // no-cancellation discipline.
  bool merge_adjacent = true;
  // Set after collection: per-index letter count of the final word.
  std::vector<Int>* final_letter_counts = nullptr;
};

// Collects a word to its normal form by successive rewrites
// a_j^{sj} a_i^{si} -> a_i^{si} a_j^{sj} [a_j^{sj}, a_i^{si}]  (j > i),
// merging adjacent runs of equal index. Commuting runs are swapped whole.
NormalWord collect_word(const RuleSet& rules, int n, RunWord w,
                        const CollectOptions& opts = {});

// Derives the four signed rule variants from the stored relations,
// processing pairs in order of strictly decreasing j, with all inversions
// and conjugations evaluated by collection inside the tail subgroup.
RuleSet derive_signed_rules(const PolycyclicPresentation& p,
                            long long max_steps = 10'000'000);

// Group arithmetic for one presentation; rules are derived eagerly.
class Collector {
 public:
  explicit Collector(PolycyclicPresentation p, long long max_steps = 10'000'000);

  const PolycyclicPresentation& presentation() const { return pres_; }
  const RuleSet& rules() const { return rules_; }
  long long max_steps() const { return max_steps_; }
  void set_max_steps(long long steps) { max_steps_ = steps; }

  NormalWord normal_form(const Word& w) const;
  NormalWord normal_form(const Word& w, const CollectOptions& opts) const;
  NormalWord normal_form_runs(RunWord runs) const;

  NormalWord multiply(const NormalWord& g, const NormalWord& h) const;
  NormalWord invert(const NormalWord& g) const;
  NormalWord power(const NormalWord& g, const Int& e) const;

  static RunWord runs_of(const NormalWord& g);

 private:
  PolycyclicPresentation pres_;
  RuleSet rules_;
  long long max_steps_;
};

}  // namespace nilrep
