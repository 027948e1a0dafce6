#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "census.hpp"
#include "extremal.hpp"
#include "linking.hpp"
#include "surgery.hpp"
#include "word.hpp"

namespace curvesi {

namespace {

class Checker {
 public:
  explicit Checker(std::string suite) : report_{std::move(suite), true, {}} {}

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++passed_;
    } else {
      report_.passed = false;
      report_.lines.push_back("FAIL " + what);
    }
  }

  void note(const std::string& line) { report_.lines.push_back(line); }

  VerifyReport finish() {
    report_.lines.push_back((report_.passed ? "pass: " : "FAIL: ") + report_.suite + " (" +
                            std::to_string(passed_) + " checks passed, " +
                            std::to_string(std::count_if(report_.lines.begin(),
                                                         report_.lines.end(),
                                                         [](const std::string& l) {
                                                           return l.rfind("FAIL ", 0) == 0;
                                                         })) +
                            " failed)");
    return report_;
  }

 private:
  VerifyReport report_;
  long long passed_ = 0;
};

std::string rep(char c, int n) { return std::string(static_cast<std::size_t>(n), c); }

// ---------------------------------------------------------------- appendix

VerifyReport suite_appendix_oracle(int) {
  Checker out("appendix-oracle");
  const SurfaceOrder& torus = SurfaceOrder::torus();
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      {  // SI(a^i b^j) = (i-1)(j-1)
        auto w = CyclicWord::parse(rep('a', i) + rep('b', j));
        const long long want = static_cast<long long>(i - 1) * (j - 1);
        out.check(self_intersection(w, torus).value == want &&
                      closed_form_si(w).value == want,
                  "one-block-pair SI " + w.text());
      }
      for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
          {  // IN(a^i b^j, a^m B^n) = in + mj
            auto v = CyclicWord::parse(rep('a', i) + rep('b', j));
            auto w = CyclicWord::parse(rep('a', m) + rep('B', n));
            const long long want = static_cast<long long>(i) * n + static_cast<long long>(m) * j;
            out.check(intersection_number(v, w, torus) == want &&
                          closed_form_in(v, w) == want,
                      "IN(" + v.text() + "," + w.text() + ")");
          }
          {  // SI(a^i b^j a^m B^n) = (i+m-1)(j+n-1)
            auto w = CyclicWord::parse(rep('a', i) + rep('b', j) + rep('a', m) + rep('B', n));
            const long long want = static_cast<long long>(i + m - 1) * (j + n - 1);
            out.check(self_intersection(w, torus).value == want &&
                          closed_form_si(w).value == want,
                      "mixed two-block-pair SI " + w.text());
          }
          {  // SI(a^i b^j A^m B^n) = (i+m-1)(j+n-1) - 1
            auto w = CyclicWord::parse(rep('a', i) + rep('b', j) + rep('A', m) + rep('B', n));
            const long long want = static_cast<long long>(i + m - 1) * (j + n - 1) - 1;
            out.check(self_intersection(w, torus).value == want &&
                          closed_form_si(w).value == want,
                      "commutator-shape SI " + w.text());
          }
          {  // abab family: exact unless i=m and j=n, then the +1 bound
            auto w = CyclicWord::parse(rep('a', i) + rep('b', j) + rep('a', m) + rep('b', n));
            auto r = self_intersection(w, torus);
            auto cf = closed_form_si(w);
            if (i == m && j == n) {
              const long long bound = static_cast<long long>(i + m - 2) * (j + n - 2) + 1;
              bool ok = !r.exact && r.value == bound && cf.value == bound;
              if (i == 1 || j == 1) ok = ok && cf.exact && cf.value == 1;
              out.check(ok, "square two-block-pair bound " + w.text());
            } else {
              const long long want = static_cast<long long>(i + m - 2) * (j + n - 2) +
                                     std::llabs(i - m) + std::llabs(j - n) - 1;
              out.check(r.exact && r.value == want && cf.exact && cf.value == want,
                        "two-block-pair SI " + w.text());
            }
          }
          // IN(a^i b^j a^k b^l, a^m B^n) = (i+k)n + m(j+l), all 1..4 exponents
          for (int k = 1; k <= 4; ++k) {
            for (int l = 1; l <= 4; ++l) {
              auto v = CyclicWord::parse(rep('a', i) + rep('b', j) + rep('a', k) + rep('b', l));
              auto w = CyclicWord::parse(rep('a', m) + rep('B', n));
              const long long want = static_cast<long long>(i + k) * n +
                                     static_cast<long long>(m) * (j + l);
              out.check(linked_pair_in_count(v, w, torus) == want &&
                            closed_form_in(v, w) == want,
                        "IN(" + v.text() + "," + w.text() + ")");
            }
          }
        }
      }
    }
  }
  // three-block-pair family, all exponents 1..4
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
          for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n) {
              auto w = CyclicWord::parse(rep('a', i) + rep('b', j) + rep('a', k) + rep('b', l) +
                                         rep('a', m) + rep('B', n));
              const long long want = static_cast<long long>(i + k + m - 1) * (j + l + n - 1) -
                                     2 * (k + std::min(j, l) - 1);
              out.check(self_intersection(w, torus).value == want &&
                            closed_form_si(w).value == want,
                        "three-block-pair SI " + w.text());
            }
  // no linked pair has an occurrence shaped r s u s R
  for (int L = 5; L <= 8; ++L) {
    enumerate_canonical(L, [&](const CyclicWord& w, bool primitive) {
      if (!primitive) return;
      for (const auto& p : linked_pairs(w, SurfaceOrder::torus())) {
        for (const Occurrence& o : {p.first, p.second}) {
          if (o.length < 5) continue;
          const Letter r = w.at(static_cast<std::size_t>(o.start));
          const Letter s = w.at(static_cast<std::size_t>(o.start) + 1);
          const Letter s2 = w.at(static_cast<std::size_t>(o.start + o.length - 2));
          const Letter r2 = w.at(static_cast<std::size_t>(o.start + o.length - 1));
          out.check(!(r2 == inverse(r) && s2 == s && r != s),
                    "corner-shaped occurrence linked in " + w.text());
        }
      }
    });
  }
  return out.finish();
}

// ---------------------------------------------------------------- surgery

struct SurgeryStats {
  long long pairs = 0;
  long long si_checks = 0;
  std::vector<std::string> violations;
};

void check_word_surgeries(const CyclicWord& w, const SurfaceOrder& torus, SurgeryStats* stats) {
  const int h = block_pairs(w);
  const bool exact_before = is_primitive(w) || is_pure_power(w);
  long long si_before = 0;
  if (exact_before) si_before = self_intersection(w, torus).value;
  auto violation = [&](const std::string& what) {
    if (stats->violations.size() < 20) stats->violations.push_back(what + " on " + w.text());
  };
  for (const auto& pair : find_opposite_corner_pairs(w)) {
    ++stats->pairs;
    if (pair.orientation == PairOrientation::Reversed) {
      const CyclicWord out = surgery_reversed(w, pair);
      if (out.alpha() != w.alpha() || out.beta() != w.beta()) violation("reversed alpha/beta");
      if (block_pairs(out) != h - 1) violation("reversed block-pairs");
      if (exact_before && (is_primitive(out) || is_pure_power(out))) {
        ++stats->si_checks;
        if (self_intersection(out, torus).value < si_before + 1) violation("reversed SI gain");
      }
    } else {
      const MultiWord mw = surgery_same(w, pair);
      if (mw.alpha() != w.alpha() || mw.beta() != w.beta()) violation("same alpha/beta");
      if (block_pairs(mw.components[0]) + block_pairs(mw.components[1]) != h - 1) {
        violation("same block-pairs");
      }
      bool exact_after = exact_before;
      for (const auto& c : mw.components) {
        exact_after = exact_after && (is_primitive(c) || is_pure_power(c));
      }
      if (exact_after) {
        try {
          ++stats->si_checks;
          if (multiword_si(mw, torus).value < si_before + 1) violation("same SI gain");
        } catch (const Error& e) {
          if (e.code() != ErrorCode::CapExceeded) throw;
          --stats->si_checks;  // inverse-conjugate components, SI not computable
        }
      }
      // round trip: merging the components back restores alpha/beta/h
      const CyclicWord& c1 = mw.components[0];
      const CyclicWord& c2 = mw.components[1];
      bool merged = false;
      for (int i = 0; i < static_cast<int>(c1.length()) && !merged; ++i) {
        if (c1.at(static_cast<std::size_t>(i)) == c1.at(static_cast<std::size_t>(i) + 1)) continue;
        for (int j = 0; j < static_cast<int>(c2.length()) && !merged; ++j) {
          const Letter q1 = c2.at(static_cast<std::size_t>(j));
          const Letter q2 = c2.at(static_cast<std::size_t>(j) + 1);
          if (q1 == q2) continue;
          const Letter r = c1.at(static_cast<std::size_t>(i));
          const Letter s = c1.at(static_cast<std::size_t>(i) + 1);
          if ((q1 == s && q2 == r) || (q1 == inverse(r) && q2 == inverse(s))) {
            const CyclicWord back = surgery_merge(mw, {i, CornerKind::Corner},
                                                  {j, CornerKind::Corner});
            if (back.alpha() != w.alpha() || back.beta() != w.beta() ||
                block_pairs(back) != h - 2) {
              violation("merge round-trip invariants");
            }
            merged = true;
          }
        }
      }
    }
  }
  if (h >= 1) {
    const ReductionTrace tr = reduce_to_two_blockpairs(w);
    const CyclicWord& f = tr.final_word;
    if (f.alpha() != w.alpha() || f.beta() != w.beta() || block_pairs(f) > 2 ||
        block_pairs(f) < 1) {
      violation("pipeline invariants");
    }
    if (exact_before && (is_primitive(f) || is_pure_power(f))) {
      if (self_intersection(f, torus).value < si_before + h - 2) violation("pipeline SI gain");
    }
  }
}

std::vector<CyclicWord> random_reduced_words(int count, int max_length, unsigned seed) {
  std::mt19937 rng(seed);  // raw draws keep the word list identical across toolchains
  std::vector<CyclicWord> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const int L = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_length - 1));
    std::vector<Letter> letters;
    letters.push_back(static_cast<Letter>(rng() % 4));
    while (static_cast<int>(letters.size()) < L) {
      std::array<Letter, 4> options{};
      int n = 0;
      for (int c = 0; c < 4; ++c) {
        const Letter x = static_cast<Letter>(c);
        if (x == inverse(letters.back())) continue;
        if (static_cast<int>(letters.size()) == L - 1 && x == inverse(letters.front())) continue;
        options[static_cast<std::size_t>(n++)] = x;
      }
      letters.push_back(options[rng() % static_cast<unsigned>(n)]);
    }
    out.push_back(CyclicWord::from_letters(std::move(letters)));
  }
  return out;
}

VerifyReport suite_surgery_invariants(int threads) {
  Checker out("surgery-invariants");
  const SurfaceOrder& torus = SurfaceOrder::torus();

  std::vector<CyclicWord> words;
  for (int L = 2; L <= 10; ++L) {
    enumerate_canonical(L, [&](const CyclicWord& w, bool) { words.push_back(w); });
  }
  const std::size_t exhaustive = words.size();
  for (const auto& w : random_reduced_words(10000, 12, 0x5eed)) words.push_back(w);

  const int n_threads = resolve_threads(threads);
  std::vector<SurgeryStats> stats(static_cast<std::size_t>(n_threads));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < n_threads; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = next.fetch_add(1); i < words.size(); i = next.fetch_add(1)) {
        check_word_surgeries(words[i], torus, &stats[static_cast<std::size_t>(t)]);
      }
    });
  }
  for (auto& th : pool) th.join();

  long long pairs = 0, si_checks = 0;
  for (const auto& s : stats) {
    pairs += s.pairs;
    si_checks += s.si_checks;
    for (const auto& v : s.violations) out.check(false, v);
  }
  out.check(pairs > 0, "no corner pairs visited");
  out.note("surgeries checked: " + std::to_string(pairs) + " corner pairs over " +
           std::to_string(exhaustive) + " exhaustive + 10000 random words, " +
           std::to_string(si_checks) + " SI comparisons");

  // worked single cases
  {
    auto w = CyclicWord::parse("baBBAba");
    OppositeCornerPair pair{{6, CornerKind::Corner}, {4, CornerKind::Corner},
                            PairOrientation::Reversed};
    out.check(surgery_reversed(w, pair) == CyclicWord::parse("bbbABAA"),
              "reversed surgery on baBBAba");
    auto tr = reduce_to_two_blockpairs(CyclicWord::parse("abababaB"));
    out.check(block_pairs(tr.final_word) <= 2 && tr.final_word.alpha() == 4 &&
                  tr.final_word.beta() == 4,
              "reduction of abababaB");
  }
  // the four three-block-pair shapes stay two under the top bound
  {
    const std::array<std::string, 4> patterns{"ababAB", "abAbaB", "abaBAB", "abABaB"};
    for (int e1 = 1; e1 <= 3; ++e1)
      for (int e2 = 1; e2 <= 3; ++e2)
        for (int e3 = 1; e3 <= 3; ++e3)
          for (int e4 = 1; e4 <= 3; ++e4)
            for (int e5 = 1; e5 <= 3; ++e5)
              for (int e6 = 1; e6 <= 3; ++e6)
                for (const auto& pattern : patterns) {
                  const std::array<int, 6> e{e1, e2, e3, e4, e5, e6};
                  std::string text;
                  for (int t = 0; t < 6; ++t) {
                    text += rep(pattern[static_cast<std::size_t>(t)],
                                e[static_cast<std::size_t>(t)]);
                  }
                  auto w = CyclicWord::parse(text);
                  if (!is_primitive(w)) continue;
                  const long long bound =
                      static_cast<long long>(w.alpha() - 1) * (w.beta() - 1) - 2;
                  out.check(self_intersection(w, torus).value <= bound,
                            "three-block-pair cap " + text);
                }
  }
  return out.finish();
}

// ---------------------------------------------------------------- table1

const std::vector<std::vector<long long>>& table1_data() {
  static const std::vector<std::vector<long long>> data = {
      {4},
      {4},
      {8},
      {10, 8},
      {16, 8, 24},
      {8, 16, 32, 40, 20},
      {24, 16, 32, 48, 112, 24, 56},
      {16, 24, 52, 76, 116, 156, 136, 104, 90, 40},
      {24, 32, 64, 120, 144, 240, 384, 208, 376, 136, 304, 48, 104},
      {16, 32, 72, 168, 272, 332, 492, 628, 644, 700, 700, 548, 464, 360, 224, 160, 68},
      {40, 48, 80, 160, 272, 584, 664, 1200, 1280, 1368, 1608, 1368, 2048, 976, 1704, 528, 1072,
       264, 592, 80, 168},
      {16, 40, 104, 208, 372, 660, 1048, 1408, 2044, 2696, 3088, 3580, 3866, 3792, 3816, 3612,
       3272, 2820, 2276, 1808, 1308, 960, 680, 392, 250, 104},
  };
  return data;
}

VerifyReport suite_table1(int threads) {
  Checker out("table1");
  const auto rows = census_table(12, SurfaceOrder::torus(), threads);
  const auto& want = table1_data();
  for (int L = 1; L <= 12; ++L) {
    const auto& row = rows[static_cast<std::size_t>(L - 1)];
    const auto& expect = want[static_cast<std::size_t>(L - 1)];
    bool ok = row.counts.size() == expect.size();
    for (std::size_t k = 0; ok && k < expect.size(); ++k) {
      const auto it = row.counts.find(static_cast<long long>(k));
      ok = (it != row.counts.end() && it->second == expect[k]);
    }
    out.check(ok, "table row " + std::to_string(L));
    if (ok) out.note("row " + std::to_string(L) + ": " + std::to_string(row.total) + " classes");
    if (L < 4) continue;
    // extreme-column placement: the last nonzero column sits at the maximal SI
    // with the maximal-word count, preceded by the one-less-count column
    const long long mx = max_si(L, Surface::Torus);
    const auto last = row.counts.rbegin();
    out.check(last != row.counts.rend() && last->first == mx && last->second == count_maximal(L),
              "top column placement at L=" + std::to_string(L));
    const auto prev = row.counts.find(mx - 1);
    out.check(prev != row.counts.end() && prev->second == count_submaximal(L),
              "second column placement at L=" + std::to_string(L));
  }
  return out.finish();
}

// ---------------------------------------------------------------- extremal

VerifyReport suite_extremal(int threads) {
  Checker out("extremal");
  for (int L = 4; L <= 30; ++L) {
    out.check(static_cast<long long>(maximal_words(L).size()) == count_maximal(L),
              "maximal generator cardinality L=" + std::to_string(L));
    out.check(static_cast<long long>(submaximal_words(L).size()) == count_submaximal(L),
              "submaximal generator cardinality L=" + std::to_string(L));
    const long long combined = count_maximal(L) + count_submaximal(L);
    const long long n = L;
    const long long want = (L % 2 == 1) ? 3 * n * n - 12 * n + 17 : 7 * n * n / 2 - 14 * n + 18;
    out.check(combined == want, "combined count identity L=" + std::to_string(L));
  }
  for (int L = 4; L <= 14; ++L) {
    const long long mx = max_si(L, Surface::Torus);
    std::set<std::string> census_max, census_submax;
    for (const auto& [text, si] : census_with_si(L, SurfaceOrder::torus(), threads)) {
      if (si == mx) census_max.insert(text);
      if (si == mx - 1) census_submax.insert(text);
    }
    std::set<std::string> gen_max, gen_submax;
    for (const auto& w : maximal_words(L)) gen_max.insert(w.text());
    for (const auto& w : submaximal_words(L)) gen_submax.insert(w.text());
    out.check(static_cast<long long>(census_max.size()) == count_maximal(L),
              "census maximal count L=" + std::to_string(L));
    out.check(static_cast<long long>(census_submax.size()) == count_submaximal(L),
              "census submaximal count L=" + std::to_string(L));
    out.check(census_max == gen_max, "maximal word set L=" + std::to_string(L));
    out.check(census_submax == gen_submax, "submaximal word set L=" + std::to_string(L));
    out.note("L=" + std::to_string(L) + ": " + std::to_string(census_max.size()) + " maximal, " +
             std::to_string(census_submax.size()) + " submaximal");
  }
  return out.finish();
}

// ---------------------------------------------------------------- pants

VerifyReport pants_checks(const char* name, int lo, int hi, int threads) {
  Checker out(name);
  for (int L = lo; L <= hi; ++L) {
    const auto ex = pants_extremes(L, /*force=*/false, threads);
    const long long n = L;
    long long want_max;
    if (L % 2 == 1) want_max = (n * n - 1) / 4;
    else if (L == 2) want_max = 1;
    else if (L % 4 == 0) want_max = n * n / 4 - 1;
    else want_max = n * n / 4 - 2;
    out.check(ex.max_si == want_max, "pants max L=" + std::to_string(L));
    if (L % 2 == 1 && L >= 3) {
      std::vector<std::string> want_words;
      const std::array<std::pair<char, char>, 4> rs{{{'a', 'B'}, {'B', 'a'}, {'A', 'b'}, {'b', 'A'}}};
      for (const auto& [r, s] : rs) {
        std::string text(1, r);
        for (int t = 0; t < (L - 1) / 2; ++t) {
          text += r;
          text += s;
        }
        want_words.push_back(CyclicWord::parse(text).text());
      }
      std::sort(want_words.begin(), want_words.end());
      out.check(ex.max_words == want_words, "pants maximal words L=" + std::to_string(L));
    }
    if (L >= 3) {
      out.check(ex.max_count == (L % 2 == 1 ? 4 : 2), "pants max count L=" + std::to_string(L));
      out.check(ex.min_si == L / 2, "pants min L=" + std::to_string(L));
    } else {
      out.check(ex.min_si == 0, "pants min L=" + std::to_string(L));
    }
    if (L % 2 == 0 && L > 2) {
      out.check(ex.nonprimitive_bound_max == n * n / 4 + n / 2 - 1,
                "pants power-bound max L=" + std::to_string(L));
    }
    out.note("L=" + std::to_string(L) + ": max " + std::to_string(ex.max_si) + " x" +
             std::to_string(ex.max_count) + ", min " + std::to_string(ex.min_si));
  }
  return out.finish();
}

VerifyReport suite_pants(int threads) { return pants_checks("pants", 1, 13, threads); }

VerifyReport suite_pants_extended(int threads) {
  return pants_checks("pants-extended", 14, 15, threads);
}

// ---------------------------------------------------------------- symmetry

std::vector<std::array<Letter, 4>> ring_symmetries(const SurfaceOrder& order) {
  // letter permutations commuting with inversion that map the ring to itself
  // up to rotation or reflection
  std::vector<std::array<Letter, 4>> out;
  const auto& ring = order.ring();
  auto ring_image_ok = [&](const std::array<Letter, 4>& sigma) {
    std::array<Letter, 4> image;
    for (int i = 0; i < 4; ++i) image[static_cast<std::size_t>(i)] =
        sigma[static_cast<std::size_t>(ring[static_cast<std::size_t>(i)])];
    for (int rot = 0; rot < 4; ++rot) {
      bool fwd = true, rev = true;
      for (int i = 0; i < 4; ++i) {
        fwd = fwd && image[static_cast<std::size_t>(i)] == ring[static_cast<std::size_t>((i + rot) & 3)];
        rev = rev && image[static_cast<std::size_t>(i)] == ring[static_cast<std::size_t>((rot - i + 8) & 3)];
      }
      if (fwd || rev) return true;
    }
    return false;
  };
  for (int ia = 0; ia < 4; ++ia) {
    for (int ib = 0; ib < 4; ++ib) {
      const Letter sa = static_cast<Letter>(ia), sb = static_cast<Letter>(ib);
      if (sb == sa || sb == inverse(sa)) continue;
      std::array<Letter, 4> sigma{};
      sigma[static_cast<std::size_t>(Letter::a)] = sa;
      sigma[static_cast<std::size_t>(Letter::A)] = inverse(sa);
      sigma[static_cast<std::size_t>(Letter::b)] = sb;
      sigma[static_cast<std::size_t>(Letter::B)] = inverse(sb);
      if (ring_image_ok(sigma)) out.push_back(sigma);
    }
  }
  return out;
}

VerifyReport suite_symmetry(int threads) {
  Checker out("symmetry");
  struct Case {
    const SurfaceOrder* order;
    const char* name;
  };
  const SurfaceOrder& torus = SurfaceOrder::torus();
  const SurfaceOrder& pants = validated_pants_order();
  const std::array<Case, 2> cases{{{&torus, "torus"}, {&pants, "pants"}}};
  for (const auto& [order, name] : cases) {
    const auto symmetries = ring_symmetries(*order);
    out.note(std::string(name) + ": " + std::to_string(symmetries.size()) +
             " ring-preserving relabelings");
    long long violations = 0, checks = 0;
    for (int L = 1; L <= 8; ++L) {
      std::vector<CyclicWord> words;
      enumerate_canonical(L, [&](const CyclicWord& w, bool primitive) {
        if (primitive) words.push_back(w);
      });
      std::atomic<long long> bad{0}, done{0};
      const int n_threads = resolve_threads(threads);
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&]() {
          for (std::size_t i = next.fetch_add(1); i < words.size(); i = next.fetch_add(1)) {
            const CyclicWord& w = words[i];
            const long long si = self_intersection(w, *order).value;
            if (self_intersection(w.inverted(), *order).value != si) ++bad;
            ++done;
            for (const auto& sigma : symmetries) {
              if (self_intersection(relabel(w, sigma), *order).value != si) ++bad;
              ++done;
            }
          }
        });
      }
      for (auto& th : pool) th.join();
      violations += bad;
      checks += done;
    }
    out.check(violations == 0, std::string(name) + " symmetry violations: " +
                                   std::to_string(violations));
    out.note(std::string(name) + ": " + std::to_string(checks) + " invariance checks");
  }
  return out.finish();
}

// ---------------------------------------------------------------- growth

VerifyReport suite_growth(int threads) {
  Checker out("growth");
  for (int L = 8; L <= 12; ++L) {
    long long total = 0;
    enumerate_canonical(L, [&](const CyclicWord&, bool primitive) {
      if (primitive) ++total;
    });
    const double target = std::pow(3.0, L) / L;
    const double ratio = static_cast<double>(total) / target;
    out.check(ratio >= 0.75 && ratio <= 1.25,
              "primitive total L=" + std::to_string(L) + " ratio " + std::to_string(ratio));
    out.note("L=" + std::to_string(L) + ": " + std::to_string(total) + " classes, 3^L/L ratio " +
             std::to_string(ratio));
  }
  const std::array<std::pair<int, long long>, 3> primes{{{5, 16}, {7, 24}, {11, 40}}};
  for (const auto& [L, want] : primes) {
    const auto h = si_histogram(L, SurfaceOrder::torus(), threads);
    const auto it = h.counts.find(0);
    out.check(it != h.counts.end() && it->second == want,
              "simple classes at prime length " + std::to_string(L));
  }
  for (int L = 4; L <= 12; L += 2) {
    const auto h = si_histogram(L, SurfaceOrder::torus(), threads);
    const auto it = h.counts.find(1);
    out.check(it != h.counts.end() && it->second == 4LL * (L - 2),
              "single-crossing classes at even length " + std::to_string(L));
  }
  return out.finish();
}

// ---------------------------------------------------------------- min-length

VerifyReport suite_min_length(int threads) {
  Checker out("min-length");
  std::vector<SiHistogram> rows;
  for (int L = 1; L <= 12; ++L) rows.push_back(si_histogram(L, SurfaceOrder::torus(), threads));
  auto census_max = [&](int L) {
    const auto& counts = rows[static_cast<std::size_t>(L - 1)].counts;
    return counts.empty() ? -1 : counts.rbegin()->first;
  };
  for (long long k = 1; k <= 25; ++k) {
    const int got = min_length_for_si(k);
    int by_formula = 0;
    for (int L = 1; L <= 40; ++L) {
      if (max_si(L, Surface::Torus) >= k) {
        by_formula = L;
        break;
      }
    }
    int by_census = 0;
    for (int L = 1; L <= 12; ++L) {
      if (census_max(L) >= k) {
        by_census = L;
        break;
      }
    }
    out.check(got == by_formula && got == by_census,
              "minimal length for SI >= " + std::to_string(k) + ": " + std::to_string(got) +
                  " / " + std::to_string(by_formula) + " / " + std::to_string(by_census));
    // sharpness: a class with SI exactly k exists at that minimal length
    const auto& counts = rows[static_cast<std::size_t>(got - 1)].counts;
    const auto it = counts.find(k);
    out.check(it != counts.end() && it->second > 0,
              "no class of length " + std::to_string(got) + " has SI exactly " +
                  std::to_string(k));
  }
  return out.finish();
}

}  // namespace

const std::vector<std::vector<long long>>& reference_table1() { return table1_data(); }

std::vector<std::string> suite_names() {
  return {"appendix-oracle", "surgery-invariants", "table1",   "extremal",  "pants",
          "pants-extended",  "symmetry",           "growth",   "min-length", "all"};
}

VerifyReport run_suite(const std::string& name, int threads) {
  if (name == "appendix-oracle") return suite_appendix_oracle(threads);
  if (name == "surgery-invariants") return suite_surgery_invariants(threads);
  if (name == "table1") return suite_table1(threads);
  if (name == "extremal") return suite_extremal(threads);
  if (name == "pants") return suite_pants(threads);
  if (name == "pants-extended") return suite_pants_extended(threads);
  if (name == "symmetry") return suite_symmetry(threads);
  if (name == "growth") return suite_growth(threads);
  if (name == "min-length") return suite_min_length(threads);
  if (name == "all") {
    VerifyReport all{"all", true, {}};
    for (const auto& suite : suite_names()) {
      if (suite == "all" || suite == "pants-extended") continue;
      VerifyReport r = run_suite(suite, threads);
      all.passed = all.passed && r.passed;
      for (auto& line : r.lines) all.lines.push_back(suite + ": " + line);
    }
    all.lines.push_back(all.passed ? "pass: all suites" : "FAIL: at least one suite failed");
    return all;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace curvesi
