#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "poschur/poset.hpp"

using namespace poschur;

TEST_CASE("from_relations takes transitive closure") {
  Poset p = from_relations(3, {{1, 2}, {2, 3}});
  CHECK(p.less(1, 2));
  CHECK(p.less(2, 3));
  CHECK(p.less(1, 3));
  CHECK_FALSE(p.less(3, 1));
  CHECK_FALSE(p.less(2, 1));
}

TEST_CASE("from_relations rejects cycles and bad indices") {
  CHECK_THROWS_AS(from_relations(2, {{1, 2}, {2, 1}}), CycleError);
  CHECK_THROWS_AS(from_relations(3, {{1, 2}, {2, 3}, {3, 1}}), CycleError);
  CHECK_THROWS_AS(from_relations(2, {{1, 1}}), CycleError);
  CHECK_THROWS_AS(from_relations(2, {{0, 1}}), ParamError);
  CHECK_THROWS_AS(from_relations(2, {{1, 3}}), ParamError);
}

TEST_CASE("basic relation predicates on the two-plus-two poset") {
  // 1<2 and 3<4, no other comparabilities.
  Poset p = from_relations(4, {{1, 2}, {3, 4}});
  CHECK(p.less(1, 2));
  CHECK(p.less(3, 4));
  CHECK(p.comparable(1, 2));
  CHECK(p.inc(1, 3));
  CHECK(p.inc(2, 3));
  CHECK(p.inc(1, 1));       // incomparable-or-equal includes equal
  CHECK_FALSE(p.incdot(1, 1));
  CHECK(p.incdot(2, 3));
  CHECK(p.wle(1, 3));       // incomparable implies both directions
  CHECK(p.wle(3, 1));
  CHECK(p.wle(1, 2));       // strict less implies weak
  CHECK_FALSE(p.wle(2, 1));
  auto rel = p.relations();
  CHECK(rel == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
}

TEST_CASE("p_k builds the gap poset with its natural labeling") {
  Nuio nu = p_k(2, 5);
  const Poset& p = nu.poset;
  CHECK(p.n() == 5);
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      CHECK(p.less(a, b) == (b - a >= 2));
    }
  }
  CHECK(nu.tlt(1, 2));
  CHECK_FALSE(nu.tlt(2, 1));
  CHECK_THROWS_AS(p_k(0, 3), ParamError);
  CHECK_THROWS_AS(p_k(1, 0), ParamError);
}

TEST_CASE("is_31_free") {
  CHECK(is_31_free(p_k(2, 5).poset));
  CHECK(is_31_free(from_relations(4, {{1, 2}, {3, 4}})));
  // A 3-chain plus an isolated element contains 3+1.
  CHECK_FALSE(is_31_free(from_relations(4, {{1, 2}, {2, 3}})));
  // Larger poset containing an induced 3+1.
  Poset q = from_relations(5, {{1, 2}, {2, 3}, {4, 5}});
  CHECK_FALSE(is_31_free(q));
}

TEST_CASE("is_nuio finds a compatible labeling exactly when one exists") {
  // The gap posets are the canonical positive examples.
  auto nu = is_nuio(p_k(2, 4).poset);
  REQUIRE(nu.has_value());
  // Compatibility condition (i): strict order respects the labeling.
  const Poset& p = nu->poset;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      if (p.less(a, b)) CHECK(nu->tlt(a, b));
    }
  }
  // Condition (ii): a<c with both incomparable to b forces a<b<c totally.
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = 1; c <= 4; ++c) {
        if (p.less(a, c) && p.incdot(a, b) && p.incdot(b, c)) {
          CHECK(nu->tlt(a, b));
          CHECK(nu->tlt(b, c));
        }
      }
    }
  }
  // Two-plus-two has no such labeling even though it is (3+1)-free.
  CHECK_FALSE(is_nuio(from_relations(4, {{1, 2}, {3, 4}})).has_value());
  // Neither does anything containing 3+1.
  CHECK_FALSE(is_nuio(from_relations(4, {{1, 2}, {2, 3}})).has_value());
}

TEST_CASE("content multiset") {
  Content beta({3, 1, 1});
  CHECK(beta.size() == 3);
  CHECK(beta.multiplicity(1) == 2);
  CHECK(beta.multiplicity(3) == 1);
  CHECK(beta.multiplicity(2) == 0);
  CHECK(beta.letters() == std::vector<int>{1, 1, 3});
  CHECK(beta == Content::from_pairs({{1, 2}, {3, 1}}));
  CHECK(beta.str() == "1,1,3");
}

TEST_CASE("blowup duplicates elements into incomparable copies") {
  // Chain 1<2, two copies of 1 and one copy of 2.
  Poset chain = from_relations(2, {{1, 2}});
  BlowupResult r = blowup_with_map(chain, Content({1, 1, 2}));
  CHECK(r.base == std::vector<int>{1, 1, 2});
  const Poset& q = r.poset;
  CHECK(q.n() == 3);
  CHECK(q.incdot(1, 2));  // the two copies of 1
  CHECK(q.less(1, 3));
  CHECK(q.less(2, 3));
  CHECK_FALSE(r.nuio.has_value());  // no labeling given on input
}

TEST_CASE("blowup of a subset of the ground set") {
  Poset p = p_k(2, 3).poset;  // only 1<3
  BlowupResult r = blowup_with_map(p, Content::from_pairs({{1, 1}, {3, 2}}));
  CHECK(r.base == std::vector<int>{1, 3, 3});
  CHECK(r.poset.less(1, 2));
  CHECK(r.poset.less(1, 3));
  CHECK(r.poset.incdot(2, 3));
  CHECK_THROWS_AS(blowup(p, Content({1, 4})), ParamError);
}

TEST_CASE("blowup transports a compatible labeling") {
  Nuio nu = p_k(2, 4);
  Nuio bu = blowup(nu, Content({1, 1, 2, 3, 3, 4}));
  const Poset& q = bu.poset;
  CHECK(q.n() == 6);
  // The blowup of a unit interval order stays one, with copies ordered by
  // (base rank, copy index).
  for (int a = 1; a <= q.n(); ++a) {
    for (int b = 1; b <= q.n(); ++b) {
      if (q.less(a, b)) CHECK(bu.tlt(a, b));
      for (int c = 1; c <= q.n(); ++c) {
        if (q.less(a, c) && q.incdot(a, b) && q.incdot(b, c)) {
          CHECK(bu.tlt(a, b));
          CHECK(bu.tlt(b, c));
        }
      }
    }
  }
  // Independent check: the blown-up poset admits a labeling at all.
  CHECK(is_nuio(q).has_value());
}

TEST_CASE("chains lists strictly decreasing sequences, largest element first") {
  Poset p = p_k(2, 4).poset;
  auto all = all_elements(p);
  CHECK(chains(p, all, 0) == std::vector<std::vector<int>>{{}});
  CHECK(chains(p, all, 1) ==
        std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  CHECK(chains(p, all, 2) ==
        std::vector<std::vector<int>>{{3, 1}, {4, 1}, {4, 2}});
  CHECK(chains(p, all, 3).empty());
  CHECK(chains(p, all, -1).empty());
  // Restricting the support drops chains that leave it.
  CHECK(chains(p, {1, 2}, 2).empty());
  CHECK(chains(p, {1, 4}, 2) == std::vector<std::vector<int>>{{4, 1}});
  // Duplicate support entries are collapsed.
  CHECK(chains(p, {1, 1, 4, 4}, 2) == std::vector<std::vector<int>>{{4, 1}});
}

TEST_CASE("dual reverses every relation") {
  Poset p = from_relations(3, {{1, 2}, {2, 3}});
  Poset d = dual(p);
  CHECK(d.less(2, 1));
  CHECK(d.less(3, 2));
  CHECK(d.less(3, 1));
  CHECK_FALSE(d.less(1, 2));
  CHECK(dual(d) == p);
}
