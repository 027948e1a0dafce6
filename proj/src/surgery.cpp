#include "surgery.hpp"

#include <algorithm>
#include <optional>

#include <json.hpp>

namespace curvesi {

namespace {

int imod(int i, int n) { return ((i % n) + n) % n; }

// Letters from index `from` to index `to` inclusive, walking forward cyclically.
std::vector<Letter> arc(const std::vector<Letter>& s, int from, int to) {
  const int n = static_cast<int>(s.size());
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(imod(to - from, n)) + 1);
  for (int i = from;; ++i) {
    out.push_back(s[static_cast<std::size_t>(imod(i, n))]);
    if (imod(i, n) == imod(to, n)) break;
  }
  return out;
}

std::vector<Letter> inverted_linear(const std::vector<Letter>& s) {
  std::vector<Letter> out(s.rbegin(), s.rend());
  for (Letter& x : out) x = inverse(x);
  return out;
}

void require_corner(const CyclicWord& w, const CornerSite& site) {
  const int L = static_cast<int>(w.length());
  if (site.position < 0 || site.position >= L) {
    throw Error(ErrorCode::InvalidArgument, "corner position out of range");
  }
  if (w.at(static_cast<std::size_t>(site.position)) ==
      w.at(static_cast<std::size_t>(site.position) + 1)) {
    throw Error(ErrorCode::InvalidArgument,
                "site at " + std::to_string(site.position) + " in " + w.text() +
                    " is a transversal, not a corner");
  }
}

}  // namespace

std::vector<CornerSite> corner_sites(const CyclicWord& w) {
  std::vector<CornerSite> out;
  const int L = static_cast<int>(w.length());
  for (int i = 0; i < L; ++i) {
    const bool transversal = w.at(static_cast<std::size_t>(i)) ==
                             w.at(static_cast<std::size_t>(i) + 1);
    out.push_back({i, transversal ? CornerKind::Transversal : CornerKind::Corner});
  }
  return out;
}

std::vector<OppositeCornerPair> find_opposite_corner_pairs(const CyclicWord& w) {
  std::vector<OppositeCornerPair> out;
  const int L = static_cast<int>(w.length());
  auto letter = [&](int i) { return w.at(static_cast<std::size_t>(imod(i, L))); };
  for (int i = 0; i < L; ++i) {
    if (letter(i) == letter(i + 1)) continue;
    for (int j = i + 1; j < L; ++j) {
      if (letter(j) == letter(j + 1)) continue;
      const CornerSite s1{i, CornerKind::Corner};
      const CornerSite s2{j, CornerKind::Corner};
      if (letter(j) == letter(i + 1) && letter(j + 1) == letter(i)) {
        out.push_back({s1, s2, PairOrientation::Same});
      } else if (letter(j) == inverse(letter(i)) && letter(j + 1) == inverse(letter(i + 1))) {
        out.push_back({s1, s2, PairOrientation::Reversed});
      }
    }
  }
  return out;
}

CyclicWord surgery_reversed(const CyclicWord& w, const OppositeCornerPair& pair) {
  require_corner(w, pair.site1);
  require_corner(w, pair.site2);
  const int i = pair.site1.position;
  const int j = pair.site2.position;
  const Letter r = w.at(static_cast<std::size_t>(i));
  const Letter s = w.at(static_cast<std::size_t>(i) + 1);
  if (pair.orientation != PairOrientation::Reversed ||
      w.at(static_cast<std::size_t>(j)) != inverse(r) ||
      w.at(static_cast<std::size_t>(j) + 1) != inverse(s)) {
    throw Error(ErrorCode::WrongOrientation,
                "sites " + std::to_string(i) + "," + std::to_string(j) + " of " + w.text() +
                    " are not a reversed-orientation opposite pair");
  }
  // ⟨x r|s y R|S z⟩ -> ⟨x r|r Y S|S z⟩: keep the S..r arc, reverse the s..R arc.
  const auto& letters = w.letters();
  std::vector<Letter> result = arc(letters, j + 1, i);
  const std::vector<Letter> middle = inverted_linear(arc(letters, i + 1, j));
  result.insert(result.end(), middle.begin(), middle.end());
  return CyclicWord::from_letters(std::move(result));
}

MultiWord surgery_same(const CyclicWord& w, const OppositeCornerPair& pair) {
  require_corner(w, pair.site1);
  require_corner(w, pair.site2);
  const int i = pair.site1.position;
  const int j = pair.site2.position;
  if (i == j) {
    throw Error(ErrorCode::DegenerateSplit, "corner sites coincide");
  }
  const Letter r = w.at(static_cast<std::size_t>(i));
  const Letter s = w.at(static_cast<std::size_t>(i) + 1);
  if (pair.orientation != PairOrientation::Same || w.at(static_cast<std::size_t>(j)) != s ||
      w.at(static_cast<std::size_t>(j) + 1) != r) {
    throw Error(ErrorCode::WrongOrientation,
                "sites " + std::to_string(i) + "," + std::to_string(j) + " of " + w.text() +
                    " are not a same-orientation opposite pair");
  }
  // ⟨x r|s y s|r z⟩ -> [⟨x r|r z⟩, ⟨s y s|⟩]
  const auto& letters = w.letters();
  return MultiWord{{CyclicWord::from_letters(arc(letters, j + 1, i)),
                    CyclicWord::from_letters(arc(letters, i + 1, j))}};
}

CyclicWord surgery_merge(const MultiWord& mw, const CornerSite& site1, const CornerSite& site2) {
  if (mw.components.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "merge surgery needs a two-component multi-word");
  }
  const CyclicWord& c1 = mw.components[0];
  const CyclicWord& c2 = mw.components[1];
  require_corner(c1, site1);
  require_corner(c2, site2);
  const int i = site1.position;
  const Letter r = c1.at(static_cast<std::size_t>(i));
  const Letter s = c1.at(static_cast<std::size_t>(i) + 1);
  const Letter q1 = c2.at(static_cast<std::size_t>(site2.position));
  const Letter q2 = c2.at(static_cast<std::size_t>(site2.position) + 1);

  std::vector<Letter> second = c2.letters();
  int j = site2.position;
  if (q1 == inverse(r) && q2 == inverse(s)) {
    // form (4): invert component 2, mapping the corner (R,S) to (s,r)
    second = inverted_linear(second);
    j = static_cast<int>(second.size()) - 2 - j;
    j = imod(j, static_cast<int>(second.size()));
  } else if (!(q1 == s && q2 == r)) {
    throw Error(ErrorCode::NotOppositeCorners,
                "corners (" + std::string(1, to_char(r)) + std::string(1, to_char(s)) + ") and (" +
                    std::string(1, to_char(q1)) + std::string(1, to_char(q2)) +
                    ") are not opposite");
  }
  // form (3): [⟨x r|s y⟩, ⟨z s|r w⟩] -> ⟨x r|r w z s|s y⟩
  std::vector<Letter> result = arc(c1.letters(), i + 1, i);
  const std::vector<Letter> tail = arc(second, j + 1, j);
  result.insert(result.end(), tail.begin(), tail.end());
  return CyclicWord::from_letters(std::move(result));
}

namespace {

struct CompositePlan {
  OppositeCornerPair split;
  CornerSite merge1;
  CornerSite merge2;
};

// First same-orientation pair (by position order) whose two components admit a
// cross-component opposite-corner merge, together with the first such merge.
std::optional<CompositePlan> find_same_merge_plan(const CyclicWord& w) {
  for (const auto& pair : find_opposite_corner_pairs(w)) {
    if (pair.orientation != PairOrientation::Same) continue;
    MultiWord mid = surgery_same(w, pair);
    const CyclicWord& c1 = mid.components[0];
    const CyclicWord& c2 = mid.components[1];
    const int L1 = static_cast<int>(c1.length());
    const int L2 = static_cast<int>(c2.length());
    for (int i = 0; i < L1; ++i) {
      const Letter r = c1.at(static_cast<std::size_t>(i));
      const Letter s = c1.at(static_cast<std::size_t>(i) + 1);
      if (r == s) continue;
      for (int j = 0; j < L2; ++j) {
        const Letter q1 = c2.at(static_cast<std::size_t>(j));
        const Letter q2 = c2.at(static_cast<std::size_t>(j) + 1);
        if (q1 == q2) continue;
        if ((q1 == s && q2 == r) || (q1 == inverse(r) && q2 == inverse(s))) {
          return CompositePlan{pair, {i, CornerKind::Corner}, {j, CornerKind::Corner}};
        }
      }
    }
  }
  return std::nullopt;
}

// ⟨x^i y^j x^k y^l x^m Y^n⟩ -> ⟨x^{i+k} y^{j+l} x^m Y^n⟩ for a three-letter
// word with three block-pairs (x the pure family, Y the minority letter).
CyclicWord three_blockpair_substitute(const CyclicWord& w) {
  const auto d = block_decomposition(w);
  if (d.h != 3 || w.distinct_letter_count() != 3) {
    throw Error(ErrorCode::InvalidArgument, "substitution needs three letters and h = 3");
  }
  const int nb = static_cast<int>(d.blocks.size());
  // Locate the family owning a single letter and the minority letter of the other.
  std::array<int, 4> letter_count{};
  for (const auto& blk : d.blocks) letter_count[static_cast<std::size_t>(blk.letter)]++;
  int minority = -1;
  for (int x = 0; x < 4; ++x) {
    if (letter_count[static_cast<std::size_t>(x)] == 1 &&
        letter_count[static_cast<std::size_t>(inverse(static_cast<Letter>(x)))] == 2) {
      minority = x;
    }
  }
  if (minority < 0) {
    throw Error(ErrorCode::InvalidArgument, "no minority block in " + w.text());
  }
  int mpos = -1;
  for (int t = 0; t < nb; ++t) {
    if (d.blocks[static_cast<std::size_t>(t)].letter == static_cast<Letter>(minority)) mpos = t;
  }
  auto blk = [&](int t) -> const Block& {
    return d.blocks[static_cast<std::size_t>(imod(t, nb))];
  };
  // rotate so blocks read x^i y^j x^k y^l x^m Y^n with the minority block last
  const Block bi = blk(mpos + 1), bj = blk(mpos + 2), bk = blk(mpos + 3);
  const Block bl = blk(mpos + 4), bm = blk(mpos + 5), bn = blk(mpos);
  std::vector<Letter> out;
  auto push = [&](Letter x, int e) { out.insert(out.end(), static_cast<std::size_t>(e), x); };
  push(bi.letter, bi.exponent + bk.exponent);
  push(bj.letter, bj.exponent + bl.exponent);
  push(bm.letter, bm.exponent);
  push(bn.letter, bn.exponent);
  return CyclicWord::from_letters(std::move(out));
}

// [⟨x^i y^j x^k y^l⟩, ⟨x^m Y^n⟩] -> ⟨x^{i+k} y^{j+l} x^m Y^n⟩.
CyclicWord multiword_substitute(const MultiWord& mw) {
  if (mw.components.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "substitution needs two components");
  }
  const CyclicWord* four = &mw.components[0];
  const CyclicWord* two = &mw.components[1];
  if (block_pairs(*four) == 1) std::swap(four, two);
  const auto d4 = block_decomposition(*four);
  const auto d2 = block_decomposition(*two);
  if (d4.h != 2 || four->distinct_letter_count() != 2 || d2.h != 1 ||
      two->distinct_letter_count() != 2) {
    throw Error(ErrorCode::InvalidArgument, "components do not match the substitution shapes");
  }
  // component letter sets must be {x, y} and {x, Y}; the shared letter is x
  std::array<bool, 4> in4{}, in2{};
  for (const auto& blk : d4.blocks) in4[static_cast<std::size_t>(blk.letter)] = true;
  for (const auto& blk : d2.blocks) in2[static_cast<std::size_t>(blk.letter)] = true;
  Letter x = Letter::a, y = Letter::a;
  bool have_x = false, have_y = false;
  for (int l = 0; l < 4; ++l) {
    if (in4[static_cast<std::size_t>(l)] && in2[static_cast<std::size_t>(l)]) {
      if (have_x) throw Error(ErrorCode::InvalidArgument, "ambiguous shared letter");
      x = static_cast<Letter>(l);
      have_x = true;
    }
  }
  if (!have_x) {
    throw Error(ErrorCode::InvalidArgument, "components do not match the substitution shapes");
  }
  for (int l = 0; l < 4; ++l) {
    if (in4[static_cast<std::size_t>(l)] && static_cast<Letter>(l) != x) {
      y = static_cast<Letter>(l);
      have_y = true;
    }
  }
  if (!have_y || !in2[static_cast<std::size_t>(inverse(y))]) {
    throw Error(ErrorCode::InvalidArgument, "components do not match the substitution shapes");
  }
  long long sum_x4 = 0, sum_y4 = 0, m = 0, n = 0;
  for (const auto& blk : d4.blocks) (blk.letter == x ? sum_x4 : sum_y4) += blk.exponent;
  for (const auto& blk : d2.blocks) (blk.letter == x ? m : n) += blk.exponent;
  std::vector<Letter> out;
  auto push = [&](Letter l, long long e) {
    out.insert(out.end(), static_cast<std::size_t>(e), l);
  };
  push(x, sum_x4);
  push(y, sum_y4);
  push(x, m);
  push(inverse(y), n);
  return CyclicWord::from_letters(std::move(out));
}

}  // namespace

ReductionTrace reduce_to_two_blockpairs(const CyclicWord& w) {
  const int h0 = block_pairs(w);
  if (h0 == 0) {
    throw Error(ErrorCode::PurePower, "pure powers have no block-pairs to reduce");
  }
  ReductionTrace trace{{}, w, h0 > 2 ? h0 - 2 : 0};
  CyclicWord cur = w;
  while (block_pairs(cur) > 2) {
    const int letters = cur.distinct_letter_count();
    if (letters == 4) {
      const auto pairs = find_opposite_corner_pairs(cur);
      const auto it = std::find_if(pairs.begin(), pairs.end(), [](const OppositeCornerPair& p) {
        return p.orientation == PairOrientation::Reversed;
      });
      if (it == pairs.end()) {
        throw Error(ErrorCode::InvalidArgument,
                    "four-letter word without a reversed pair: " + cur.text());
      }
      CyclicWord next = surgery_reversed(cur, *it);
      trace.steps.push_back({"reversed-surgery", cur.text(), next.text()});
      cur = next;
    } else if (letters == 3 && block_pairs(cur) == 3) {
      CyclicWord next = three_blockpair_substitute(cur);
      trace.steps.push_back({"two-blockpair-substitution", cur.text(), next.text()});
      cur = next;
    } else if (auto plan = find_same_merge_plan(cur)) {
      MultiWord mid = surgery_same(cur, plan->split);
      trace.steps.push_back({"same-surgery", cur.text(), mid.text()});
      CyclicWord next = surgery_merge(mid, plan->merge1, plan->merge2);
      trace.steps.push_back({"merge-surgery", mid.text(), next.text()});
      cur = next;
    } else {
      // three letters, h = 4, alternating pattern with no merge continuation:
      // split off the ⟨x^m Y^n⟩ tail and substitute.
      const auto pairs = find_opposite_corner_pairs(cur);
      bool done = false;
      for (const auto& pair : pairs) {
        if (pair.orientation != PairOrientation::Same) continue;
        MultiWord mid = surgery_same(cur, pair);
        const int h1 = block_pairs(mid.components[0]);
        const int h2 = block_pairs(mid.components[1]);
        if (!((h1 == 2 && h2 == 1) || (h1 == 1 && h2 == 2))) continue;
        try {
          CyclicWord next = multiword_substitute(mid);
          trace.steps.push_back({"same-surgery", cur.text(), mid.text()});
          trace.steps.push_back({"two-blockpair-substitution", mid.text(), next.text()});
          cur = next;
          done = true;
          break;
        } catch (const Error&) {
          continue;
        }
      }
      if (!done) {
        throw Error(ErrorCode::InvalidArgument, "no reduction step applies to " + cur.text());
      }
    }
  }
  trace.final_word = cur;
  return trace;
}

std::string trace_to_json(const ReductionTrace& trace) {
  nlohmann::ordered_json j;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& step : trace.steps) {
    j["steps"].push_back({{"rule", step.rule}, {"before", step.before}, {"after", step.after}});
  }
  j["final"] = trace.final_word.text();
  j["guaranteed_gain"] = trace.guaranteed_gain;
  return j.dump();
}

}  // namespace curvesi
