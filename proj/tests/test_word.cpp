#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cgt/constructions.hpp"
#include "cgt/word.hpp"

using namespace cgt;

namespace {

// random AST generator for property tests
Word random_word(std::mt19937_64& rng, int depth = 0) {
  int pick = static_cast<int>(rng() % 10);
  if (depth >= 3 || pick < 4) return Word::var(1 + static_cast<int>(rng() % 3));
  switch (pick) {
    case 4:
      return Word::inverse_of(random_word(rng, depth + 1));
    case 5:
    case 6:
      return Word::power_of(random_word(rng, depth + 1),
                            static_cast<long long>(rng() % 7) - 3);
    case 7:
    case 8:
      return Word::product_of(random_word(rng, depth + 1), random_word(rng, depth + 1));
    default:
      return Word::commutator_of({random_word(rng, depth + 1), random_word(rng, depth + 1)});
  }
}

}  // namespace

TEST_CASE("parsing the grammar") {
  CHECK(Word::parse("x1").letters() == std::vector<int>{1});
  CHECK(Word::parse("x1").arity() == 1);
  CHECK(Word::parse("x12").arity() == 12);

  Word c = Word::parse("[x1,x2]");
  CHECK(c.letters() == std::vector<int>{-1, -2, 1, 2});
  CHECK(c.str() == "[x1,x2]");

  Word nested = Word::parse("[[x1^2,x2^2],x3]");
  CHECK(nested.arity() == 3);
  CHECK(nested.str() == "[[x1^2,x2^2],x3]");
  // [u,v] = u^-1 v^-1 u v with u = x1^2, v = x2^2
  CHECK(Word::parse("[x1^2,x2^2]").letters() ==
        std::vector<int>{-1, -1, -2, -2, 1, 1, 2, 2});

  CHECK(Word::parse("x1*x2").letters() == std::vector<int>{1, 2});
  CHECK(Word::parse("x1 x2").letters() == std::vector<int>{1, 2});
  CHECK(Word::parse("x1x2").letters() == std::vector<int>{1, 2});
  CHECK(Word::parse("(x1x2)^-1").letters() == std::vector<int>{-2, -1});
  CHECK(Word::parse("x1^-2").letters() == std::vector<int>{-1, -1});
  CHECK(Word::parse("x1^0").letters().empty());
  CHECK(Word::parse("1").letters().empty());
  CHECK(Word::parse("[x1,x2,x3]").letters() == Word::parse("[[x1,x2],x3]").letters());
}

TEST_CASE("parse errors carry positions") {
  auto pos_of = [](const char* text) {
    try {
      Word::parse(text);
    } catch (const WordParseError& e) {
      return static_cast<int>(e.position);
    }
    return -1;
  };
  CHECK(pos_of("x0") == 0);        // variable index 0 rejected
  CHECK(pos_of("x100") == 0);      // above x99
  CHECK(pos_of("") == 0);
  CHECK(pos_of("x1^") == 3);
  CHECK(pos_of("(x1") == 0);
  CHECK(pos_of("[x1]") == 0);
  CHECK(pos_of("x1)") == 2);
  CHECK(pos_of("y1") == 0);
  CHECK_THROWS_AS(Word::parse("x1^99999999"), WordParseError);
}

TEST_CASE("free reduction") {
  CHECK(Word::parse("x1*x1^-1").letters().empty());
  CHECK(Word::parse("[x1,x1]").letters().empty());
  CHECK(Word::parse("x1*x2*x2^-1*x1").letters() == std::vector<int>{1, 1});
  CHECK(Word::parse("x1*x2*x2^-1*x1").free_reduced().str() == "x1^2");
  CHECK(Word::parse("[x1,x1]").free_reduced().str() == "1");
  CHECK(Word::parse("x1^-3").free_reduced().str() == "x1^-3");

  // idempotent and evaluation-preserving on 10^3 random words per group
  std::mt19937_64 rng(7);
  for (const auto& g : {symmetric_group(3), quaternion_group(), dihedral_group(8),
                        cyclic_group(6), wreath_c2(cyclic_group(3))}) {
    for (int i = 0; i < 1000; ++i) {
      Word w = random_word(rng);
      Word r = w.free_reduced();
      CHECK(r.letters() == w.letters());
      CHECK(r.free_reduced().letters() == r.letters());
      std::vector<int> flat(static_cast<std::size_t>(std::max(w.arity(), 1)));
      for (auto& id : flat) id = static_cast<int>(rng() % g->order());
      CHECK(w.evaluate_ids(*g, flat) == r.evaluate_ids(*g, flat));
    }
  }
}

TEST_CASE("print/parse round-trips on reduced words") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(rng).free_reduced();
    Word back = Word::parse(w.str());
    CHECK(back.letters() == w.letters());
  }
  // and for structured (unreduced) printing too
  for (const char* text : {"[x1,x2]", "[[x1^2,x2^2],x3]", "x1*x2^-1*(x1x2)^3", "[x1,x2,x3]"}) {
    Word w = Word::parse(text);
    CHECK(Word::parse(w.str()).letters() == w.letters());
  }
}

TEST_CASE("evaluation") {
  GroupPtr s3 = symmetric_group(3);
  GroupPtr c3 = cyclic_group(3);

  // all-identity assignment gives the identity
  Word w = Word::parse("[x1,x2]");
  std::map<int, GroupElement> ident = {{1, s3->identity()}, {2, s3->identity()}};
  CHECK(w.evaluate(*s3, ident).id == s3->identity_id());

  // the hand-computed commutator of (1 2) and (1 3) is (1 3 2)
  auto t12 = s3->find_permutation({1, 0, 2});
  auto t13 = s3->find_permutation({2, 1, 0});
  auto c132 = s3->find_permutation({2, 0, 1});
  REQUIRE(t12.has_value());
  std::map<int, GroupElement> asg = {{1, s3->element(*t12)}, {2, s3->element(*t13)}};
  CHECK(w.evaluate(*s3, asg).id == *c132);

  // x1^2 at r in C3 is r^2
  CHECK(Word::parse("x1^2").evaluate(*c3, {{1, c3->element(1)}}).id == 2);

  // missing binding and foreign elements are rejected
  CHECK_THROWS_AS(w.evaluate(*s3, {{1, s3->element(1)}}), InvalidArgumentError);
  CHECK_THROWS_AS(w.evaluate(*s3, {{1, s3->element(1)}, {2, c3->element(1)}}),
                  ParentMismatchError);

  // reduction preserves evaluation
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng);
    std::vector<int> flat(static_cast<std::size_t>(std::max(u.arity(), 1)));
    for (auto& id : flat) id = static_cast<int>(rng() % s3->order());
    CHECK(u.evaluate_ids(*s3, flat) == u.free_reduced().evaluate_ids(*s3, flat));
  }
}

TEST_CASE("structural evaluation agrees with the flat letter path") {
  std::mt19937_64 rng(17);
  for (const auto& g : {symmetric_group(3), quaternion_group(), dihedral_group(8),
                        cyclic_group(6)}) {
    for (int i = 0; i < 250; ++i) {
      Word w = random_word(rng);
      std::vector<int> flat(static_cast<std::size_t>(std::max(w.arity(), 1)));
      for (auto& id : flat) id = static_cast<int>(rng() % g->order());
      CHECK(w.evaluate_ids(*g, flat) == w.evaluate_ast_ids(*g, flat));
    }
  }
}

TEST_CASE("appending commutator variables") {
  Word w = Word::parse("[x1,x2]");
  CHECK(w.append_commutator_variables(0).letters() == w.letters());
  Word v1 = w.append_commutator_variables(1);
  CHECK(v1.arity() == 3);
  CHECK(v1.letters() == Word::parse("[[x1,x2],x3]").letters());
  Word v2 = Word::parse("x1").append_commutator_variables(2);
  CHECK(v2.arity() == 3);
  CHECK(v2.letters() == Word::parse("[x1,x2,x3]").letters());
  CHECK_THROWS_AS(w.append_commutator_variables(-1), InvalidArgumentError);
}

TEST_CASE("formal product order") {
  auto less = [](std::vector<int> p, std::vector<int> q) {
    return formal_product_less({std::move(p)}, {std::move(q)});
  };
  CHECK(less({1}, {1, 1}));               // shorter first
  CHECK(less({2, 1}, {1, 2}));            // rightmost differing position decides
  CHECK_FALSE(less({1, 2}, {2, 1}));
  CHECK_FALSE(less({2, 1}, {2, 1}));      // irreflexive

  // strict total order on all products with entries in 1..r, length <= 4
  for (int r = 1; r <= 3; ++r) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    for (int len = 1; len <= 4; ++len) {
      cur.assign(len, 1);
      for (;;) {
        all.push_back(cur);
        int pos = len - 1;
        while (pos >= 0 && cur[pos] == r) cur[pos--] = 1;
        if (pos < 0) break;
        ++cur[pos];
      }
    }
    for (const auto& p : all)
      for (const auto& q : all) {
        bool pq = less(p, q), qp = less(q, p);
        if (p == q) {
          CHECK_FALSE(pq);
        } else {
          CHECK(pq != qp);  // totality + antisymmetry
        }
        if (pq)
          for (const auto& s : all)
            if (less(q, s)) CHECK(less(p, s));  // transitivity
      }
  }
}
