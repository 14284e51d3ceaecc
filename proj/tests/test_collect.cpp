#include <doctest.h>

#include <random>

#include "nilrep/collect.hpp"
#include "nilrep/verify.hpp"

using namespace nilrep;

namespace {

NormalWord word_at(int n, std::initializer_list<std::pair<int, long>> terms) {
  NormalWord w(n);
  for (auto& [k, e] : terms) w.exp(k) = e;
  return w;
}

NormalWord oracle_commutator(int m, UtOrder order, int i, int j, int si, int sj) {
  // [a_j^{sj}, a_i^{si}] via the literal matrix product
  Word w;
  w.push(j, -sj);
  w.push(i, -si);
  w.push(j, sj);
  w.push(i, si);
  return ut_matrix_normal_form(m, order, w);
}

}  // namespace

TEST_CASE("heisenberg signed rules") {
  PolycyclicPresentation p = builtin_heisenberg(1);
  RuleSet rules = derive_signed_rules(p);
  // [a_2, a_1] is the inverse of the stored relation
  CHECK(rules.rule(1, 2, +1, +1) == word_at(3, {{3, -1}}));
  // [a_2^{-1}, a_1^{-1}] from the 3x3 matrix oracle
  CHECK(rules.rule(1, 2, -1, -1) ==
        oracle_commutator(3, UtOrder::standard, 1, 2, -1, -1));
  CHECK(rules.rule(1, 2, -1, -1) == word_at(3, {{3, -1}}));
  // the mixed signs as well
  CHECK(rules.rule(1, 2, -1, +1) ==
        oracle_commutator(3, UtOrder::standard, 1, 2, -1, +1));
  CHECK(rules.rule(1, 2, +1, -1) ==
        oracle_commutator(3, UtOrder::standard, 1, 2, +1, -1));
  CHECK(rules.commutes(1, 3));
  CHECK(rules.commutes(2, 3));
}

TEST_CASE("all four signed rules agree with the matrix oracle on ut(4) and ut(5)") {
  for (int m : {4, 5})
    for (UtOrder order : {UtOrder::standard, UtOrder::column}) {
      PolycyclicPresentation p = builtin_ut(m, order);
      RuleSet rules = derive_signed_rules(p);
      int n = p.generators();
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (rules.commutes(i, j)) {
            CHECK(oracle_commutator(m, order, i, j, 1, 1).is_identity());
            continue;
          }
          for (int si : {1, -1})
            for (int sj : {1, -1})
              CHECK(rules.rule(i, j, si, sj) ==
                    oracle_commutator(m, order, i, j, si, sj));
        }
    }
}

TEST_CASE("free abelian rules are all trivial") {
  RuleSet rules = derive_signed_rules(builtin_free_abelian(4));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) CHECK(rules.commutes(i, j));
}

TEST_CASE("heisenberg normal forms") {
  Collector coll(builtin_heisenberg(1));
  CHECK(coll.normal_form(Word{{2, 1}, {1, 1}}) == word_at(3, {{1, 1}, {2, 1}, {3, -1}}));
  CHECK(coll.normal_form(Word{{1, 1}, {1, -1}}) == NormalWord::identity(3));
  CHECK(coll.normal_form(Word{{1, 2}, {3, 1}}) == word_at(3, {{1, 2}, {3, 1}}));
}

TEST_CASE("heisenberg arithmetic") {
  Collector coll(builtin_heisenberg(1));
  CHECK(coll.multiply(word_at(3, {{1, 1}}), word_at(3, {{2, 1}})) ==
        word_at(3, {{1, 1}, {2, 1}}));
  CHECK(coll.multiply(word_at(3, {{2, 1}}), word_at(3, {{1, 1}})) ==
        word_at(3, {{1, 1}, {2, 1}, {3, -1}}));
  CHECK(coll.invert(word_at(3, {{1, 1}, {2, 1}})) ==
        word_at(3, {{1, -1}, {2, -1}, {3, -1}}));
}

TEST_CASE("normal forms are strategy independent") {
  std::mt19937_64 seed_rng(2024);
  for (const PolycyclicPresentation& p :
       {builtin_heisenberg(1), builtin_heisenberg(2), builtin_ut(4, UtOrder::standard),
        builtin_filiform(3)}) {
    Collector coll(p);
    std::mt19937_64 word_rng(seed_rng());
    for (int t = 0; t < 1000; ++t) {
      Word w = random_word(p, word_rng);
      NormalWord leftmost = coll.normal_form(w);
      CollectOptions opts;
      std::mt19937_64 site_rng(seed_rng());
      opts.strategy = RewriteStrategy::random_site;
      opts.rng = &site_rng;
      CHECK(coll.normal_form(w, opts) == leftmost);
    }
  }
}

TEST_CASE("group laws on random elements") {
  std::mt19937_64 rng(99);
  for (const PolycyclicPresentation& p :
       {builtin_heisenberg(2), builtin_ut(4, UtOrder::standard), builtin_filiform(4)}) {
    Collector coll(p);
    NormalWord id = NormalWord::identity(p.generators());
    for (int t = 0; t < 50; ++t) {
      NormalWord a = random_normal_word(p, rng, 3);
      NormalWord b = random_normal_word(p, rng, 3);
      NormalWord c = random_normal_word(p, rng, 3);
      CHECK(coll.multiply(coll.multiply(a, b), c) ==
            coll.multiply(a, coll.multiply(b, c)));
      CHECK(coll.multiply(a, coll.invert(a)) == id);
      CHECK(coll.multiply(coll.invert(a), a) == id);
    }
    // power agrees with repeated multiplication for small exponents
    NormalWord g = random_normal_word(p, rng, 2);
    NormalWord acc = id;
    for (int e = 0; e <= 8; ++e) {
      CHECK(coll.power(g, e) == acc);
      acc = coll.multiply(acc, g);
    }
    NormalWord inv_acc = id;
    for (int e = 0; e >= -8; --e) {
      CHECK(coll.power(g, e) == inv_acc);
      inv_acc = coll.multiply(inv_acc, coll.invert(g));
    }
  }
}

TEST_CASE("power by squaring handles huge exponents in the free abelian case") {
  Collector coll(builtin_free_abelian(3));
  NormalWord g = word_at(3, {{1, 1}, {2, -2}, {3, 5}});
  Int e("1000000000000000000000000");
  NormalWord h = coll.power(g, e);
  CHECK(h.exp(1) == e);
  CHECK(h.exp(2) == -2 * e);
  CHECK(h.exp(3) == 5 * e);
}

TEST_CASE("collection agrees with matrix arithmetic on random ut words") {
  std::mt19937_64 rng(7);
  for (UtOrder order : {UtOrder::standard, UtOrder::column}) {
    PolycyclicPresentation p = builtin_ut(5, order);
    Collector coll(p);
    for (int t = 0; t < 250; ++t) {
      Word w = random_word(p, rng);
      CHECK(coll.normal_form(w) == ut_matrix_normal_form(5, order, w));
    }
  }
}

TEST_CASE("letters never disappear when merging is disabled") {
  PolycyclicPresentation p = builtin_ut(4, UtOrder::standard);
  Collector coll(p);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Word w = random_word(p, rng);
    std::vector<Int> before(static_cast<size_t>(p.generators()), Int(0));
    RunWord runs;
    for (auto& [gen, exp] : w.syllables()) {
      runs.push_back({gen, exp});
      before[static_cast<size_t>(gen - 1)] += abs(exp);
    }
    CollectOptions opts;
    opts.merge_adjacent = false;
    std::vector<Int> after;
    opts.final_letter_counts = &after;
    NormalWord nf = collect_word(coll.rules(), p.generators(), runs, opts);
    // unmerged collection computes the same normal form
    CHECK(nf == coll.normal_form(w));
    // and no index ever loses letters
    for (int k = 1; k <= p.generators(); ++k)
      CHECK(after[static_cast<size_t>(k - 1)] >= before[static_cast<size_t>(k - 1)]);
  }
}

TEST_CASE("step budget reports non-termination") {
  Collector coll(builtin_heisenberg(1));
  CollectOptions opts;
  opts.max_steps = 3;
  RunWord runs = {{3, Int(1)}, {2, Int(2)}, {1, Int(2)}};
  CHECK_THROWS_AS(collect_word(coll.rules(), 3, runs, opts), NonTerminatingError);
}
