#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "../src/census.hpp"
#include "../src/linking.hpp"
#include "oracle.hpp"

using namespace curvesi;

namespace {
const SurfaceOrder& torus() {
  static const SurfaceOrder order = SurfaceOrder::torus();
  return order;
}
std::vector<Letter> lv(const char* text) { return letters_from_string(text); }
}  // namespace

TEST_CASE("orientation predicate on the torus clock") {
  CHECK(similarly_oriented({Letter::a, Letter::b, Letter::A}, {Letter::b, Letter::A, Letter::B},
                           torus()));
  CHECK_FALSE(similarly_oriented({Letter::a, Letter::b, Letter::A},
                                 {Letter::a, Letter::A, Letter::b}, torus()));
  CHECK_FALSE(similarly_oriented({Letter::a, Letter::a, Letter::b},
                                 {Letter::a, Letter::b, Letter::A}, torus()));
}

TEST_CASE("length-2 linking on the torus is exactly the doubled-letter list") {
  const std::set<std::pair<std::string, std::string>> expected = {
      {"aa", "bb"}, {"aa", "BB"}, {"AA", "bb"}, {"AA", "BB"}};
  const std::string letters = "abAB";
  std::vector<std::string> pairs2;
  for (char x : letters) {
    for (char y : letters) {
      if (y != oracle::inv(x)) pairs2.push_back(std::string{x, y});
    }
  }
  for (const auto& u : pairs2) {
    for (const auto& v : pairs2) {
      const bool linked = classify_linear(lv(u.c_str()), lv(v.c_str()), torus()).has_value();
      const bool in_list = expected.count({u, v}) + expected.count({v, u}) > 0;
      CHECK_MESSAGE(linked == in_list, u, " vs ", v);
    }
  }
}

TEST_CASE("classification examples") {
  CHECK(classify_linear(lv("aab"), lv("Baa"), torus()) == PairKind::II);
  CHECK_FALSE(classify_linear(lv("aab"), lv("baa"), torus()).has_value());

  const auto host = CyclicWord::parse("aabb");
  const auto pair = classify_pair(host, {0, 2}, host, {2, 2}, torus());
  REQUIRE(pair.has_value());
  CHECK(pair->kind == PairKind::I);

  CHECK_THROWS_AS(classify_pair(host, {0, 2}, host, {1, 3}, torus()), Error);
  CHECK_THROWS_AS(classify_pair(host, {0, 2}, host, {0, 2}, torus()), Error);
}

TEST_CASE("pair tables for single-family and mixed interiors") {
  // Linking of pairs sharing the interior a^i: rows and columns are the words
  // p1 a^i p2; cells marked '=' share a first or last letter, 'N' fail the
  // orientation test, 'Y' are linked.
  auto word_a = [](const std::string& shape, int i) {
    std::string out;
    for (char c : shape) {
      if (c == '*') out += std::string(static_cast<std::size_t>(i), 'a');
      else out += c;
    }
    return out;
  };
  const std::vector<std::string> shapes = {"a*b", "b*a", "a*B", "B*a", "b*b", "a*a", "B*B"};
  const char* table[7] = {"=N=Y==Y", "N=Y===Y", "=Y=NY==", "Y=N=Y==", "==YY=YY", "====Y=Y",
                          "YY==YY="};
  for (int i = 1; i <= 3; ++i) {
    for (std::size_t r = 0; r < shapes.size(); ++r) {
      for (std::size_t c = 0; c < shapes.size(); ++c) {
        const bool linked =
            classify_linear(lv(word_a(shapes[r], i).c_str()), lv(word_a(shapes[c], i).c_str()),
                            torus())
                .has_value();
        CHECK_MESSAGE(linked == (table[r][c] == 'Y'), "i=", i, " ", shapes[r], " vs ", shapes[c]);
      }
    }
  }

  // interiors a^i b^j and a^i b^j a^k share one table shape
  const std::vector<std::string> ends = {"ab", "ba", "bb", "aa"};
  const char* table2[4] = {"=N==", "N===", "===Y", "==Y="};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        const std::string mid2 = std::string(static_cast<std::size_t>(i), 'a') +
                                 std::string(static_cast<std::size_t>(j), 'b');
        const std::string mid3 = mid2 + std::string(static_cast<std::size_t>(k), 'a');
        for (const std::string& mid : {mid2, mid3}) {
          for (std::size_t r = 0; r < ends.size(); ++r) {
            for (std::size_t c = 0; c < ends.size(); ++c) {
              const std::string u = ends[r][0] + mid + ends[r][1];
              const std::string v = ends[c][0] + mid + ends[c][1];
              const bool linked =
                  classify_linear(lv(u.c_str()), lv(v.c_str()), torus()).has_value();
              CHECK_MESSAGE(linked == (table2[r][c] == 'Y'), u, " vs ", v);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("type II and type III are exchanged by inverting one element") {
  // {u, v} links as type II exactly when {u, v^{-1}} links as type III.
  std::vector<std::string> words{""};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::string> next;
    for (const auto& base : words) {
      for (char c : std::string("abAB")) {
        if (!base.empty() && c == oracle::inv(base.back())) continue;
        next.push_back(base + c);
      }
    }
    words = std::move(next);
    if (len < 3) continue;
    for (const auto& u : words) {
      for (const auto& v : words) {
        std::string vinv(v.rbegin(), v.rend());
        for (char& c : vinv) c = oracle::inv(c);
        const auto direct = classify_linear(lv(u.c_str()), lv(v.c_str()), torus());
        const auto dual = classify_linear(lv(u.c_str()), lv(vinv.c_str()), torus());
        CHECK((direct == PairKind::II) == (dual == PairKind::III));
        CHECK((direct == PairKind::III) == (dual == PairKind::II));
      }
    }
  }
}

TEST_CASE("classification is symmetric in the pair") {
  for (int L = 2; L <= 6; ++L) {
    for (const auto& text : oracle::brute_classes(L)) {
      const auto w = CyclicWord::parse(text);
      for (int len = 2; len <= L + 2; ++len) {
        for (int s1 = 0; s1 < L; ++s1) {
          for (int s2 = s1 + 1; s2 < L; ++s2) {
            const auto fwd = classify_pair(w, {s1, len}, w, {s2, len}, torus());
            const auto rev = classify_pair(w, {s2, len}, w, {s1, len}, torus());
            CHECK(fwd.has_value() == rev.has_value());
            if (fwd && rev) CHECK(fwd->kind == rev->kind);
          }
        }
      }
    }
  }
}

TEST_CASE("self-intersection values from worked examples") {
  auto si = [](const char* text) { return self_intersection(CyclicWord::parse(text), torus()); };
  CHECK(si("baBBAba").value == 3);
  CHECK(si("baBBBaa").value == 6);
  CHECK(si("aabbb").value == 2);
  CHECK(si("abAB").value == 0);
  CHECK(si("a").value == 0);
  CHECK(si("aaa").value == 2);  // pure power rule
  CHECK(si("aaa").exact);
  CHECK(si("abaB").value == 1);

  const auto bound = si("abab");
  CHECK(bound.value == 1);
  CHECK_FALSE(bound.exact);
}

TEST_CASE("intersection numbers from worked examples") {
  auto in = [](const char* a, const char* b) {
    return intersection_number(CyclicWord::parse(a), CyclicWord::parse(b), torus());
  };
  CHECK(in("ab", "aB") == 2);
  CHECK(in("aab", "aBB") == 5);
  CHECK(in("ababb", "aB") == 5);

  CHECK_THROWS_AS(in("abab", "aB"), Error);      // not primitive
  CHECK_THROWS_AS(in("ab", "AB"), Error);        // inverse class hits the cap
  try {
    in("ab", "AB");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("multiword SI") {
  auto mw = [](std::initializer_list<const char*> texts) {
    MultiWord m;
    for (const char* t : texts) m.components.push_back(CyclicWord::parse(t));
    return m;
  };
  CHECK(multiword_si(mw({"ab", "aB"}), torus()).value == 2);
  CHECK(multiword_si(mw({"a", "b"}), torus()).value == 1);
  CHECK(multiword_si(mw({"aabbb"}), torus()).value == 2);
  CHECK(multiword_si(mw({"aa", "b"}), torus()).value == 3);  // pure power component
  CHECK_THROWS_AS(multiword_si(mw({"abab", "aB"}), torus()), Error);
}

TEST_CASE("parallel copies of a primitive class cross twice per crossing") {
  for (const char* text : {"ab", "abaB", "aabb", "baBBAba"}) {
    const auto w = CyclicWord::parse(text);
    const long long si = self_intersection(w, torus()).value;
    CHECK(intersection_number(w, w, torus()) == 2 * si);
  }
}

TEST_CASE("engine matches the brute-force oracle on all short classes") {
  for (int L = 1; L <= 7; ++L) {
    for (const auto& text : oracle::brute_classes(L)) {
      const auto w = CyclicWord::parse(text);
      if (!is_primitive(w) && !is_pure_power(w)) continue;
      CHECK_MESSAGE(self_intersection(w, torus()).value == oracle::brute_si("abAB", text),
                    "torus SI of ", text);
    }
  }
  // a sample against the pants ring as well
  const SurfaceOrder& pants = validated_pants_order();
  for (const auto& text : oracle::brute_classes(5)) {
    const auto w = CyclicWord::parse(text);
    if (!is_primitive(w)) continue;
    CHECK_MESSAGE(self_intersection(w, pants).value == oracle::brute_si("aAbB", text),
                  "pants SI of ", text);
  }
}

TEST_CASE("IN is symmetric") {
  const char* words[] = {"ab", "aB", "aab", "abb", "aabb", "abaB", "ababb"};
  for (const char* a : words) {
    for (const char* b : words) {
      const auto v = CyclicWord::parse(a);
      const auto w = CyclicWord::parse(b);
      try {
        CHECK(intersection_number(v, w, torus()) == intersection_number(w, v, torus()));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
      }
    }
  }
}

TEST_CASE("IN matches the brute-force oracle on short primitive pairs") {
  const auto threes = oracle::brute_classes(3);
  for (const auto& a : threes) {
    for (const auto& b : threes) {
      const auto v = CyclicWord::parse(a);
      const auto w = CyclicWord::parse(b);
      if (!is_primitive(v) || !is_primitive(w)) continue;
      long long engine = -1, brute = -1;
      try {
        engine = intersection_number(v, w, torus());
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
        continue;
      }
      brute = oracle::brute_in("abAB", a, b);
      CHECK_MESSAGE(engine == brute, "IN(", a, ",", b, ")");
    }
  }
}

TEST_CASE("inversion leaves SI unchanged") {
  for (int L = 1; L <= 7; ++L) {
    for (const auto& text : oracle::brute_classes(L)) {
      const auto w = CyclicWord::parse(text);
      if (!is_primitive(w)) continue;
      CHECK(self_intersection(w.inverted(), torus()).value ==
            self_intersection(w, torus()).value);
    }
  }
}

TEST_CASE("no linked pair at the occurrence-length cap") {
  // the enumerator raises CapExceeded if anything shows up at length L+2
  for (int L = 1; L <= 10; ++L) {
    enumerate_canonical(L, [&](const CyclicWord& w, bool primitive) {
      if (!primitive) return;
      CHECK_NOTHROW(count_linked_pairs(w, torus()));
    });
  }
}

TEST_CASE("linked pair kinds are reported") {
  const auto pairs = linked_pairs(CyclicWord::parse("abaB"), torus());
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].kind == PairKind::III);
  CHECK(pairs[0].first.length == 3);
  CHECK(pairs[0].host_first == "abaB");
}

TEST_CASE("enumerated pairs re-classify to the same kind") {
  for (const char* text : {"aabb", "abaB", "baBBAba", "aabbb", "abABaB"}) {
    const auto w = CyclicWord::parse(text);
    for (const auto& p : linked_pairs(w, torus())) {
      const auto again = classify_pair(w, p.first, w, p.second, torus());
      REQUIRE(again.has_value());
      CHECK(again->kind == p.kind);
    }
  }
}

TEST_CASE("IN is invariant under inverting both classes") {
  const char* words[] = {"ab", "aB", "aab", "abb", "abaB", "ababb"};
  for (const char* a : words) {
    for (const char* b : words) {
      const auto v = CyclicWord::parse(a);
      const auto w = CyclicWord::parse(b);
      try {
        CHECK(intersection_number(v, w, torus()) ==
              intersection_number(v.inverted(), w.inverted(), torus()));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
      }
    }
  }
}
