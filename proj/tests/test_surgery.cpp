#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/census.hpp"
#include "../src/surgery.hpp"
#include "oracle.hpp"

using namespace curvesi;

namespace {
const SurfaceOrder& torus() {
  static const SurfaceOrder order = SurfaceOrder::torus();
  return order;
}
}  // namespace

TEST_CASE("corner sites and opposite pairs") {
  const auto w = CyclicWord::parse("abAB");
  const auto sites = corner_sites(w);
  REQUIRE(sites.size() == 4);
  for (const auto& s : sites) CHECK(s.kind == CornerKind::Corner);

  const auto pairs = find_opposite_corner_pairs(w);
  REQUIRE(pairs.size() == 2);
  for (const auto& p : pairs) CHECK(p.orientation == PairOrientation::Reversed);
  CHECK(pairs[0].site1.position == 0);
  CHECK(pairs[0].site2.position == 2);

  const auto same = find_opposite_corner_pairs(CyclicWord::parse("aabb"));
  bool found_same = false;
  for (const auto& p : same) found_same = found_same || p.orientation == PairOrientation::Same;
  CHECK(found_same);

  const auto tiny = find_opposite_corner_pairs(CyclicWord::parse("ab"));
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].orientation == PairOrientation::Same);

  CHECK(find_opposite_corner_pairs(CyclicWord::parse("aaaa")).empty());
}

TEST_CASE("reversed surgery reproduces the worked curve example") {
  // ⟨baBBAba⟩, corners b|a and B|A with x, z empty and y = baB
  const auto w = CyclicWord::parse("baBBAba");  // canonical abaBBAb
  REQUIRE(w.text() == "abaBBAb");
  const OppositeCornerPair pair{{6, CornerKind::Corner}, {4, CornerKind::Corner},
                                PairOrientation::Reversed};
  const auto out = surgery_reversed(w, pair);
  CHECK(out == CyclicWord::parse("bbbABAA"));
  CHECK(self_intersection(out, torus()).value == 6);
  // the word is the inverse class of the figure's ⟨baBBBaa⟩
  CHECK(out.inverted() == CyclicWord::parse("baBBBaa"));
  CHECK(self_intersection(w, torus()).value + 1 <= 6);
}

TEST_CASE("reversed surgery on the commutator") {
  const auto w = CyclicWord::parse("abAB");
  const auto pairs = find_opposite_corner_pairs(w);
  const auto out = surgery_reversed(w, pairs[0]);
  CHECK(block_pairs(out) == 1);
  CHECK(out.alpha() == 2);
  CHECK(out.beta() == 2);
  CHECK(self_intersection(out, torus()).value == 1);
}

TEST_CASE("same-orientation surgery splits into the block shapes") {
  const auto w = CyclicWord::parse("abababaB");
  // the lemma's cut: ⟨ab|aba|baB⟩, corners b|a then a|b
  bool found = false;
  for (const auto& pair : find_opposite_corner_pairs(w)) {
    if (pair.orientation != PairOrientation::Same) continue;
    const auto mw = surgery_same(w, pair);
    CHECK(mw.alpha() == w.alpha());
    CHECK(mw.beta() == w.beta());
    CHECK(block_pairs(mw.components[0]) + block_pairs(mw.components[1]) == 3);
    const auto d0 = block_decomposition(mw.components[0]);
    const auto d1 = block_decomposition(mw.components[1]);
    // one component of block shape r s r S (h = 2), the other r s (h = 1)
    if ((d0.h == 2 && d1.h == 1) || (d0.h == 1 && d1.h == 2)) found = true;
  }
  CHECK(found);
}

TEST_CASE("same-orientation surgery on overlapping corners") {
  const auto w = CyclicWord::parse("ab");
  const auto pairs = find_opposite_corner_pairs(w);
  const auto mw = surgery_same(w, pairs[0]);
  REQUIRE(mw.components.size() == 2);
  CHECK(mw.components[0].length() + mw.components[1].length() == 2);
  CHECK(multiword_si(mw, torus()).value == 1);  // [a, b] crosses once
}

TEST_CASE("same-orientation surgery example with alpha/beta bookkeeping") {
  const auto w = CyclicWord::parse("aabab");
  for (const auto& pair : find_opposite_corner_pairs(w)) {
    if (pair.orientation != PairOrientation::Same) continue;
    const auto mw = surgery_same(w, pair);
    CHECK(mw.alpha() == 3);
    CHECK(mw.beta() == 2);
  }
}

TEST_CASE("merge surgery") {
  // [⟨abaB⟩, ⟨ab⟩] merged at opposite corners gives a single word
  const MultiWord mw{{CyclicWord::parse("abaB"), CyclicWord::parse("ab")}};
  // corner b|a in component 1 at position 1, a|b in component 2 at position 0
  const auto out = surgery_merge(mw, {1, CornerKind::Corner}, {0, CornerKind::Corner});
  CHECK(out.alpha() == 3);
  CHECK(out.beta() == 3);
  CHECK(block_pairs(out) == 2);
  const long long before = multiword_si(mw, torus()).value;
  CHECK(self_intersection(out, torus()).value >= before + 1);
}

TEST_CASE("merge with reversed corners goes through inversion") {
  // [⟨ab⟩, ⟨AB⟩]: corner a|b against A|B (form 4) equals inverting the second
  // component and merging same-orientation corners (form 3)
  const MultiWord mw{{CyclicWord::parse("ab"), CyclicWord::parse("AB")}};
  const auto via_form4 = surgery_merge(mw, {0, CornerKind::Corner}, {0, CornerKind::Corner});

  const auto inverted = CyclicWord::parse("AB").inverted();  // ⟨ab⟩
  REQUIRE(inverted.text() == "ab");
  // in the inverted component the matching s|r corner sits at position 1
  const MultiWord mw3{{CyclicWord::parse("ab"), inverted}};
  const auto via_form3 = surgery_merge(mw3, {0, CornerKind::Corner}, {1, CornerKind::Corner});
  CHECK(via_form4 == via_form3);
}

TEST_CASE("merge rejects non-opposite corners") {
  const MultiWord mw{{CyclicWord::parse("ab"), CyclicWord::parse("aB")}};
  CHECK_THROWS_AS(surgery_merge(mw, {0, CornerKind::Corner}, {0, CornerKind::Corner}), Error);
}

TEST_CASE("wrong orientation errors") {
  const auto w = CyclicWord::parse("aabb");
  OppositeCornerPair same_pair{{1, CornerKind::Corner}, {3, CornerKind::Corner},
                               PairOrientation::Same};
  CHECK_THROWS_AS(surgery_reversed(w, same_pair), Error);
  OppositeCornerPair bogus{{1, CornerKind::Corner}, {3, CornerKind::Corner},
                           PairOrientation::Reversed};
  CHECK_THROWS_AS(surgery_reversed(w, bogus), Error);
}

TEST_CASE("split then merge restores the invariants") {
  for (int L = 3; L <= 8; ++L) {
    enumerate_canonical(L, [&](const CyclicWord& w, bool) {
      for (const auto& pair : find_opposite_corner_pairs(w)) {
        if (pair.orientation != PairOrientation::Same) continue;
        const auto mw = surgery_same(w, pair);
        const auto& c1 = mw.components[0];
        const auto& c2 = mw.components[1];
        for (int i = 0; i < static_cast<int>(c1.length()); ++i) {
          const Letter r = c1.at(static_cast<std::size_t>(i));
          const Letter s = c1.at(static_cast<std::size_t>(i) + 1);
          if (r == s) continue;
          for (int j = 0; j < static_cast<int>(c2.length()); ++j) {
            const Letter q1 = c2.at(static_cast<std::size_t>(j));
            const Letter q2 = c2.at(static_cast<std::size_t>(j) + 1);
            if (q1 == q2) continue;
            if ((q1 == s && q2 == r) || (q1 == inverse(r) && q2 == inverse(s))) {
              const auto back = surgery_merge(mw, {i, CornerKind::Corner}, {j, CornerKind::Corner});
              CHECK(back.alpha() == w.alpha());
              CHECK(back.beta() == w.beta());
              CHECK(block_pairs(back) == block_pairs(w) - 2);
              return;
            }
          }
        }
      }
    });
  }
}

TEST_CASE("reduction pipeline") {
  SUBCASE("two block-pairs are already terminal") {
    const auto tr = reduce_to_two_blockpairs(CyclicWord::parse("abAB"));
    CHECK(tr.steps.empty());
    CHECK(tr.final_word == CyclicWord::parse("abAB"));
    CHECK(tr.guaranteed_gain == 0);
  }
  SUBCASE("four three-letter block-pairs") {
    const auto tr = reduce_to_two_blockpairs(CyclicWord::parse("abababaB"));
    CHECK(block_pairs(tr.final_word) <= 2);
    CHECK(tr.final_word.alpha() == 4);
    CHECK(tr.final_word.beta() == 4);
    CHECK(tr.guaranteed_gain == 2);
  }
  SUBCASE("two-letter word with three block-pairs") {
    const auto tr = reduce_to_two_blockpairs(CyclicWord::parse("ababab"));
    CHECK(block_pairs(tr.final_word) <= 2);
    CHECK(tr.final_word.alpha() == 3);
    CHECK(tr.final_word.beta() == 3);
  }
  SUBCASE("pure powers are rejected") {
    CHECK_THROWS_AS(reduce_to_two_blockpairs(CyclicWord::parse("aaa")), Error);
  }
  SUBCASE("trace serialization carries rule/before/after") {
    const auto tr = reduce_to_two_blockpairs(CyclicWord::parse("abababaB"));
    const auto json = trace_to_json(tr);
    CHECK(json.find("\"rule\"") != std::string::npos);
    CHECK(json.find("\"before\"") != std::string::npos);
    CHECK(json.find("\"guaranteed_gain\":2") != std::string::npos);
  }
}

TEST_CASE("pipeline invariants on every short word") {
  for (int L = 2; L <= 9; ++L) {
    enumerate_canonical(L, [&](const CyclicWord& w, bool) {
      const int h = block_pairs(w);
      if (h == 0) return;
      const auto tr = reduce_to_two_blockpairs(w);
      CHECK(tr.final_word.alpha() == w.alpha());
      CHECK(tr.final_word.beta() == w.beta());
      CHECK(block_pairs(tr.final_word) <= 2);
      const bool exact_before = is_primitive(w) || is_pure_power(w);
      const auto& f = tr.final_word;
      if (exact_before && (is_primitive(f) || is_pure_power(f))) {
        CHECK(self_intersection(f, torus()).value >=
              self_intersection(w, torus()).value + h - 2);
      }
    });
  }
}
