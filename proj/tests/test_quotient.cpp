#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "poschur/quotient.hpp"

using namespace poschur;

namespace {

Poset chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i < n; ++i) rel.push_back({i, i + 1});
  return from_relations(n, rel);
}

NCElement word_elem(const Poset& p, const Word& w) {
  return NCElement::monomial(p, w);
}

}  // namespace

TEST_CASE("single applicable generator on a three-letter content") {
  Poset p = p_k(2, 4).poset;
  ContentSpace cs = build(p, Content({1, 2, 3}), IdealKind::plac);
  CHECK(cs.dim() == 6);
  CHECK(cs.rank() == 1);
  CHECK(cs.n_components() == 5);
  CHECK(member(cs, word_elem(p, {3, 1, 2}) - word_elem(p, {2, 3, 1})));
  CHECK_FALSE(member(cs, word_elem(p, {3, 1, 2}) - word_elem(p, {1, 2, 3})));
  CHECK(member(cs, NCElement(p)));  // zero element
  CHECK(cs.rep_word({3, 1, 2}) == Word{2, 3, 1});
  auto rows = cs.reduced_basis();
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == std::pair<Word, Word>{{3, 1, 2}, {2, 3, 1}});
}

TEST_CASE("total order recovers classical Knuth classes on three letters") {
  Poset p = chain(3);
  ContentSpace cs = build(p, Content({1, 2, 3}), IdealKind::plac);
  CHECK(cs.rank() == 2);
  CHECK(cs.n_components() == 4);
  CHECK(congruent(cs, word_elem(p, {2, 1, 3}), word_elem(p, {2, 3, 1})));
  CHECK(congruent(cs, word_elem(p, {3, 1, 2}), word_elem(p, {1, 3, 2})));
  CHECK_FALSE(congruent(cs, word_elem(p, {2, 1, 3}), word_elem(p, {3, 1, 2})));
  CHECK_FALSE(congruent(cs, word_elem(p, {1, 2, 3}), word_elem(p, {3, 2, 1})));
}

TEST_CASE("commutative kind identifies every rearrangement") {
  Poset p = p_k(2, 4).poset;
  ContentSpace cs = build(p, Content({1, 1, 2}), IdealKind::pol);
  CHECK(cs.dim() == 3);
  CHECK(cs.n_components() == 1);
  CHECK(cs.rank() == 2);
  CHECK(congruent(cs, word_elem(p, {1, 1, 2}), word_elem(p, {2, 1, 1})));
  // The commutative kind does not require (3+1)-freeness.
  Poset bad = from_relations(4, {{1, 2}, {2, 3}});
  CHECK(build(bad, Content({1, 2}), IdealKind::pol).n_components() == 1);
  CHECK_THROWS_AS(build(bad, Content({1, 2}), IdealKind::plac),
                  NotThreeOneFreeError);
  CHECK_THROWS_AS(build(bad, Content({1, 2}), IdealKind::h),
                  NotThreeOneFreeError);
}

TEST_CASE("relation spaces nest across the three kinds") {
  Poset p = p_k(2, 4).poset;
  for (const Content& beta :
       {Content({1, 2, 3}), Content({1, 2, 2}), Content({1, 2, 3, 4})}) {
    ContentSpace plac = build(p, beta, IdealKind::plac);
    ContentSpace hsp = build(p, beta, IdealKind::h);
    ContentSpace pol = build(p, beta, IdealKind::pol);
    CHECK(plac.rank() <= hsp.rank());
    CHECK(hsp.rank() <= pol.rank());
    for (const auto& [w, rep] : plac.reduced_basis()) {
      CHECK(member(hsp, word_elem(p, w) - word_elem(p, rep)));
    }
    for (const auto& [w, rep] : hsp.reduced_basis()) {
      CHECK(member(pol, word_elem(p, w) - word_elem(p, rep)));
    }
  }
}

TEST_CASE("membership validates input") {
  Poset p = p_k(2, 4).poset;
  ContentSpace cs = build(p, Content({1, 2, 3}), IdealKind::plac);
  NCElement wrong = word_elem(p, {1, 2, 4});
  CHECK_THROWS_AS(member(cs, wrong), ContentMismatchError);
  NCElement tdep = NCElement::monomial(p, {1, 2, 3}, PolyT::t_power(1));
  CHECK_THROWS_AS(member(cs, tdep), TCoefficientError);
  CHECK_THROWS_AS(build(p, Content({9}), IdealKind::plac), ParamError);
}

TEST_CASE("commutative congruence equals equality of commutative images") {
  Poset p = p_k(2, 4).poset;
  NCElement f = h_p(p, 2) * e_p(p, 1);
  NCElement g = e_p(p, 1) * h_p(p, 2);
  CHECK(congruent_per_content(p, f, g, IdealKind::pol));
  // Direct commutative evaluation oracle: multiset the letters.
  std::map<Word, PolyT> fc, gc;
  for (const auto& [w, c] : f.terms) {
    Word s = w;
    std::sort(s.begin(), s.end());
    fc[s] += c;
  }
  for (const auto& [w, c] : g.terms) {
    Word s = w;
    std::sort(s.begin(), s.end());
    gc[s] += c;
  }
  CHECK(fc == gc);
}

TEST_CASE("complete functions commute modulo the plactic relations") {
  Poset p = p_k(2, 4).poset;
  NCElement f = h_p(p, 1) * h_p(p, 2);
  NCElement g = h_p(p, 2) * h_p(p, 1);
  CHECK(congruent_per_content(p, f, g, IdealKind::plac));
}

TEST_CASE("elementary functions commute modulo the plactic relations") {
  Poset p = p_k(2, 5).poset;
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= k; ++l) {
      CHECK(congruent_per_content(p, e_p(p, k) * e_p(p, l),
                                  e_p(p, l) * e_p(p, k), IdealKind::plac));
    }
  }
}

TEST_CASE("positivity probe") {
  Poset p = p_k(2, 4).poset;
  ProbeReport neg = positivity_probe(p, -e_p(p, 1), IdealKind::plac);
  CHECK(neg.negative);
  CHECK(neg.verdict() == "NEGATIVE");
  REQUIRE_FALSE(neg.negatives.empty());
  CHECK(neg.negatives[0].pairing == PolyT(-1));

  ProbeReport pos = positivity_probe(p, m_p(p, {2, 1}), IdealKind::h);
  CHECK_FALSE(pos.negative);
  CHECK(pos.verdict() == "INCONCLUSIVE-POSITIVE");

  ProbeReport jprobe = positivity_probe(p, j_p(p, {2, 1}), IdealKind::plac);
  CHECK_FALSE(jprobe.negative);
  for (const auto& finding : jprobe.pairings) {
    CHECK(finding.pairing.nonneg());
  }
  CHECK_THROWS_AS(positivity_probe(p, e_p(p, 1), IdealKind::pol), ParamError);
}

TEST_CASE("relation-space cache returns identical spaces") {
  Poset p = p_k(2, 4).poset;
  auto a = content_space_cached(p, Content({1, 2, 3}), IdealKind::plac);
  auto b = content_space_cached(p, Content({1, 2, 3}), IdealKind::plac);
  CHECK(a.get() == b.get());
  CHECK(a->rank() == 1);
}
