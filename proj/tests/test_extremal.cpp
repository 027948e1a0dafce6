#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "../src/census.hpp"
#include "../src/extremal.hpp"

using namespace curvesi;

TEST_CASE("maximal SI by length") {
  CHECK(max_si(8, Surface::Torus) == 9);
  CHECK(max_si(7, Surface::Torus) == 6);
  CHECK(max_si(1, Surface::Torus) == 0);
  CHECK(max_si(3, Surface::Torus) == 0);
  CHECK(max_si(12, Surface::Torus) == 25);

  CHECK(max_si(5, Surface::Pants) == 6);
  CHECK(max_si(4, Surface::Pants) == 3);
  CHECK(max_si(6, Surface::Pants) == 7);
  CHECK(max_si(2, Surface::Pants) == 1);
  CHECK_THROWS_AS(max_si(16, Surface::Pants), Error);
  CHECK(max_si(16, Surface::Pants, /*force=*/true) == 16 * 16 / 4 - 1);
}

TEST_CASE("counting formulas against the word generators") {
  CHECK(count_maximal(8) == 40);
  CHECK(count_maximal(9) == 104);
  CHECK(count_maximal(12) == 104);
  CHECK(count_submaximal(8) == 90);
  CHECK(count_submaximal(9) == 48);
  CHECK(count_submaximal(6) == 40);

  CHECK(maximal_words(4).size() == 8);
  CHECK(maximal_words(6).size() == 20);

  for (int L = 4; L <= 30; ++L) {
    CHECK(static_cast<long long>(maximal_words(L).size()) == count_maximal(L));
    CHECK(static_cast<long long>(submaximal_words(L).size()) == count_submaximal(L));
    const long long n = L;
    const long long combined =
        (L % 2 == 1) ? 3 * n * n - 12 * n + 17 : 7 * n * n / 2 - 14 * n + 18;
    CHECK(count_maximal(L) + count_submaximal(L) == combined);
  }
}

TEST_CASE("generated words realize the right SI") {
  const SurfaceOrder& torus = surface_order(Surface::Torus);
  for (int L = 4; L <= 10; ++L) {
    const long long mx = max_si(L, Surface::Torus);
    for (const auto& w : maximal_words(L)) {
      CHECK(is_primitive(w));
      CHECK(self_intersection(w, torus).value == mx);
    }
    for (const auto& w : submaximal_words(L)) {
      CHECK(is_primitive(w));
      CHECK(self_intersection(w, torus).value == mx - 1);
    }
  }
}

TEST_CASE("generators are complete at small lengths") {
  const SurfaceOrder& torus = surface_order(Surface::Torus);
  for (int L = 4; L <= 9; ++L) {
    const long long mx = max_si(L, Surface::Torus);
    std::set<std::string> census_max, census_submax, gen_max, gen_submax;
    enumerate_canonical(L, [&](const CyclicWord& w, bool primitive) {
      if (!primitive) return;
      const long long si = self_intersection(w, torus).value;
      if (si == mx) census_max.insert(w.text());
      if (si == mx - 1) census_submax.insert(w.text());
    });
    for (const auto& w : maximal_words(L)) gen_max.insert(w.text());
    for (const auto& w : submaximal_words(L)) gen_submax.insert(w.text());
    CHECK(census_max == gen_max);
    CHECK(census_submax == gen_submax);
  }
}

TEST_CASE("minimal length for a target SI") {
  CHECK(min_length_for_si(1) == 4);
  CHECK(min_length_for_si(2) == 5);
  CHECK(min_length_for_si(4) == 6);
  CHECK(min_length_for_si(16) == 10);
  CHECK(min_length_for_si(25) == 12);
  for (long long k = 1; k <= 60; ++k) {
    int by_scan = 0;
    for (int L = 1; L <= 40 && by_scan == 0; ++L) {
      if (max_si(L, Surface::Torus) >= k) by_scan = L;
    }
    CHECK(min_length_for_si(k) == by_scan);
  }
}

TEST_CASE("closed-form dispatcher") {
  auto cf = [](const char* text) { return closed_form_si(CyclicWord::parse(text)); };
  CHECK(cf("aabbb").value == 2);
  CHECK(cf("aabbb").exact);
  CHECK(cf("abaB").value == 1);
  CHECK(cf("ababaB").value == 2);
  CHECK(cf("abAB").value == 0);
  CHECK(cf("AAbbb").value == 2);  // relabeled one-block-pair shape

  const auto square = cf("abab");
  CHECK(square.value == 1);
  CHECK(square.exact);  // i = j = 1 pins the value
  const auto square22 = cf("aabbaabb");
  CHECK(square22.value == (2 + 2 - 2) * (2 + 2 - 2) + 1);
  CHECK_FALSE(square22.exact);

  CHECK_THROWS_AS(cf("abababab"), Error);  // four block-pairs: no closed form
  CHECK_THROWS_AS(cf("aaaa"), Error);      // pure power

  CHECK(closed_form_in(CyclicWord::parse("ab"), CyclicWord::parse("aB")) == 2);
  CHECK(closed_form_in(CyclicWord::parse("aab"), CyclicWord::parse("aBB")) == 5);
  CHECK(closed_form_in(CyclicWord::parse("ababb"), CyclicWord::parse("aB")) == 5);
  CHECK_THROWS_AS(closed_form_in(CyclicWord::parse("ab"), CyclicWord::parse("ab")), Error);
}

TEST_CASE("bound reports") {
  const auto commutator = bound_report(CyclicWord::parse("abAB"));
  CHECK(commutator.si == 0);
  CHECK(commutator.bound == 1);
  CHECK(commutator.slack == 1);
  CHECK(commutator.kind == BoundKind::BlockPair);
  CHECK_FALSE(commutator.pure_power_exception);

  const auto grid = bound_report(CyclicWord::parse("aabb"));
  CHECK(grid.si == 1);
  CHECK(grid.bound == 1);
  CHECK(grid.slack == 0);
  CHECK(grid.kind == BoundKind::General);

  const auto cube = bound_report(CyclicWord::parse("aaa"));
  CHECK(cube.si == 2);
  CHECK(cube.bound == 0);
  CHECK(cube.kind == BoundKind::Length);
  CHECK(cube.pure_power_exception);

  CHECK_THROWS_AS(bound_report(CyclicWord::parse("abab")), Error);
}

TEST_CASE("bounds hold across the short census") {
  const SurfaceOrder& torus = surface_order(Surface::Torus);
  for (int L = 1; L <= 12; ++L) {
    enumerate_canonical(L, [&](const CyclicWord& w, bool primitive) {
      if (!primitive) return;
      const long long si = self_intersection(w, torus).value;
      const long long alpha = w.alpha(), beta = w.beta();
      CHECK(si <= (alpha - 1) * (beta - 1));
      const int h = block_pairs(w);
      if (h == 1) CHECK(si == (alpha - 1) * (beta - 1));
      if (h >= 2) CHECK(si <= (alpha - 1) * (beta - 1) - h + 2);
      CHECK(si <= max_si(L, Surface::Torus));
      const auto report = bound_report(w);
      CHECK(report.si + report.slack == report.bound);
      CHECK(report.slack >= 0);
    });
  }
}
