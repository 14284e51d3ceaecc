#include <doctest.h>

#include <set>
#include <sstream>

#include "nilrep/collect.hpp"
#include "nilrep/presentation.hpp"
#include "nilrep/verify.hpp"

using namespace nilrep;

namespace {

const char* kHeisFile =
    "pcgroup\n"
    "n 3\n"
    "names a1 a2 a3\n"
    "weights 1 1 2\n"
    "rel 1 2 = 3:1\n"
    "end\n";

NormalWord word_at(int n, std::initializer_list<std::pair<int, long>> terms) {
  NormalWord w(n);
  for (auto& [k, e] : terms) w.exp(k) = e;
  return w;
}

}  // namespace

TEST_CASE("heisenberg file parses to the expected presentation") {
  PolycyclicPresentation p = PolycyclicPresentation::parse(kHeisFile);
  CHECK(p.generators() == 3);
  CHECK(p.weights() == std::vector<int>{1, 1, 2});
  REQUIRE(p.relation(1, 2) != nullptr);
  CHECK(*p.relation(1, 2) == word_at(3, {{3, 1}}));
  CHECK(p.commutes(1, 3));
  CHECK(p.commutes(2, 3));
  CHECK(p == builtin_heisenberg(1));
}

TEST_CASE("file with no rel lines is free abelian") {
  PolycyclicPresentation p = PolycyclicPresentation::parse("pcgroup\nn 2\nend\n");
  CHECK(p.generators() == 2);
  CHECK(p.commutes(1, 2));
  CHECK_FALSE(p.has_weights());
  CHECK(p.name(1) == "g1");
}

TEST_CASE("relation target must exceed j") {
  CHECK_THROWS_AS(PolycyclicPresentation::parse("pcgroup\nn 2\nrel 1 2 = 2:1\nend\n"),
                  IndexError);
}

TEST_CASE("grammar rejections") {
  CHECK_THROWS_AS(PolycyclicPresentation::parse("n 2\nend\n"), SyntaxError);
  CHECK_THROWS_AS(PolycyclicPresentation::parse("pcgroup\nn 2\n"), SyntaxError);
  CHECK_THROWS_AS(PolycyclicPresentation::parse("pcgroup\nn 3\nrel 1 2 = 3:0\nend\n"),
                  SyntaxError);
  CHECK_THROWS_AS(
      PolycyclicPresentation::parse("pcgroup\nn 4\nrel 1 2 = 4:1\nrel 1 2 = 3:1\nend\n"),
      SyntaxError);
  CHECK_THROWS_AS(
      PolycyclicPresentation::parse("pcgroup\nn 4\nrel 1 2 = 4:1 3:1\nend\n"),
      SyntaxError);  // targets not increasing
  CHECK_THROWS_AS(PolycyclicPresentation::parse("pcgroup\nn 2\nnames a\nend\n"),
                  SyntaxError);
  // comments and blank lines are fine
  PolycyclicPresentation p = PolycyclicPresentation::parse(
      "# heisenberg\npcgroup\n\nn 3   # three generators\nrel 1 2 = 3:1\nend\n");
  CHECK(p.generators() == 3);
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(PolycyclicPresentation::parse(
                      "pcgroup\nn 3\nweights 1 1 1\nrel 1 2 = 3:1\nend\n"),
                  WeightError);
  CHECK_THROWS_AS(PolycyclicPresentation::parse("pcgroup\nn 2\nweights 1 0\nend\n"),
                  WeightError);
}

TEST_CASE("round trip through the file grammar") {
  auto check_rt = [](const PolycyclicPresentation& p) {
    CHECK(PolycyclicPresentation::parse(p.serialize()) == p);
  };
  check_rt(builtin_heisenberg(2));
  check_rt(builtin_ut(4, UtOrder::standard));
  check_rt(builtin_ut(4, UtOrder::column));
  check_rt(builtin_free_abelian(3));
  check_rt(builtin_free_nilpotent_c2(3));
  check_rt(builtin_filiform(4));
  check_rt(central_product(builtin_heisenberg(1), builtin_heisenberg(1)));
  check_rt(PolycyclicPresentation::parse("pcgroup\nn 2\nend\n"));
}

TEST_CASE("ut(3, standard) is the heisenberg presentation") {
  PolycyclicPresentation p = builtin_ut(3, UtOrder::standard);
  CHECK(p.names() == std::vector<std::string>{"s_1_2", "s_2_3", "s_1_3"});
  CHECK(p.weights() == std::vector<int>{1, 1, 2});
  REQUIRE(p.relation(1, 2) != nullptr);
  CHECK(*p.relation(1, 2) == word_at(3, {{3, 1}}));
  CHECK(p.relations().size() == 1);
}

TEST_CASE("ut(4, standard) relations match the literal matrix commutators") {
  PolycyclicPresentation p = builtin_ut(4, UtOrder::standard);
  CHECK(p.generators() == 6);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      Word comm;
      comm.push(i, -1);
      comm.push(j, -1);
      comm.push(i, 1);
      comm.push(j, 1);
      NormalWord nf = ut_matrix_normal_form(4, UtOrder::standard, comm);
      const NormalWord* rel = p.relation(i, j);
      if (rel)
        CHECK(*rel == nf);
      else
        CHECK(nf.is_identity());
    }
  // exactly the cells (s12,s23), (s23,s34), (s12,s24), (s13,s34) interact
  std::set<std::pair<int, int>> keys;
  for (auto& [pair, word] : p.relations()) keys.insert(pair);
  CHECK(keys == std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 5}, {3, 4}});
}

TEST_CASE("ut(2) is the integers") {
  PolycyclicPresentation p = builtin_ut(2, UtOrder::standard);
  CHECK(p.generators() == 1);
  CHECK(p.relations().empty());
}

TEST_CASE("ut labels for both orderings") {
  auto std_labels = ut_generator_labels(4, UtOrder::standard);
  CHECK(std_labels == std::vector<std::pair<int, int>>{
                          {1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}, {1, 4}});
  auto col_labels = ut_generator_labels(4, UtOrder::column);
  CHECK(col_labels == std::vector<std::pair<int, int>>{
                          {1, 2}, {2, 3}, {1, 3}, {3, 4}, {2, 4}, {1, 4}});
}

TEST_CASE("heisenberg family relations") {
  PolycyclicPresentation p = builtin_heisenberg(2);
  CHECK(p.generators() == 5);
  REQUIRE(p.relation(1, 3) != nullptr);
  REQUIRE(p.relation(2, 4) != nullptr);
  CHECK(*p.relation(1, 3) == word_at(5, {{5, 1}}));
  CHECK(*p.relation(2, 4) == word_at(5, {{5, 1}}));
  CHECK(p.relations().size() == 2);
  CHECK(builtin_heisenberg(1).weights() == std::vector<int>{1, 1, 2});
}

TEST_CASE("free nilpotent class two") {
  // F(2,2) presents the same group as heisenberg(1)
  PolycyclicPresentation p2 = builtin_free_nilpotent_c2(2);
  CHECK(p2.relations() == builtin_heisenberg(1).relations());
  CHECK(p2.weights() == builtin_heisenberg(1).weights());
  // Hirsch length k + k(k-1)/2 by counting basic commutators
  PolycyclicPresentation p3 = builtin_free_nilpotent_c2(3);
  CHECK(p3.generators() == 3 + 3);
  CHECK(p3.relations().size() == 3);
}

TEST_CASE("filiform matches its defining automorphism") {
  PolycyclicPresentation p = builtin_filiform(2);
  CHECK(p.generators() == 3);
  CHECK(p.nilpotency_class() == 2);
  REQUIRE(p.relation(1, 2) != nullptr);

  // conjugation test: f_i^a = f_i f_{i+1}
  for (int c = 2; c <= 5; ++c) {
    PolycyclicPresentation fil = builtin_filiform(c);
    Collector coll(fil);
    for (int i = 1; i < c; ++i) {
      Word conj;
      conj.push(1, -1);
      conj.push(1 + i, 1);
      conj.push(1, 1);
      NormalWord expected(fil.generators());
      expected.exp(1 + i) = 1;
      expected.exp(2 + i) = 1;
      CHECK(coll.normal_form(conj) == expected);
    }
  }
}

TEST_CASE("direct product concatenates disjoint relation sets") {
  PolycyclicPresentation p =
      direct_product(builtin_heisenberg(1), builtin_heisenberg(1));
  CHECK(p.generators() == 6);
  CHECK(p.relations().size() == 2);
  REQUIRE(p.relation(1, 2) != nullptr);
  REQUIRE(p.relation(4, 5) != nullptr);
  CHECK(*p.relation(1, 2) == word_at(6, {{3, 1}}));
  CHECK(*p.relation(4, 5) == word_at(6, {{6, 1}}));
}

TEST_CASE("central product identifies the central generators") {
  PolycyclicPresentation p =
      central_product(builtin_heisenberg(1), builtin_heisenberg(1));
  CHECK(p.generators() == 5);
  REQUIRE(p.relation(1, 2) != nullptr);
  REQUIRE(p.relation(3, 4) != nullptr);
  CHECK(*p.relation(1, 2) == word_at(5, {{5, 1}}));
  CHECK(*p.relation(3, 4) == word_at(5, {{5, 1}}));

  PolycyclicPresentation z =
      central_product(builtin_free_abelian(2), builtin_free_abelian(2));
  CHECK(z.generators() == 3);
  CHECK(z.relations().empty());
}

TEST_CASE("word parsing") {
  Word w = Word::parse("g2 g1^-3 g3^2", 3);
  REQUIRE(w.syllables().size() == 3);
  CHECK(w.syllables()[0] == std::make_pair(2, Int(1)));
  CHECK(w.syllables()[1] == std::make_pair(1, Int(-3)));
  CHECK(w.syllables()[2] == std::make_pair(3, Int(2)));
  CHECK_THROWS_AS(Word::parse("h1", 3), SyntaxError);
  CHECK_THROWS_AS(Word::parse("g4", 3), IndexError);
  CHECK_THROWS_AS(Word::parse("g1^x", 3), SyntaxError);
}
