#pragma once

#include <string>
#include <vector>

#include "word.hpp"

namespace curvesi {

enum class CornerKind { Transversal, Corner };

/// Adjacent letter pair (w[position], w[position+1]), position cyclic.
/// Transversal when the letters are equal, corner otherwise.
struct CornerSite {
  int position;
  CornerKind kind;
};

enum class PairOrientation { Same, Reversed };

/// Two diagonally opposed corners: writing site1's pair as (p,q), a same-
/// orientation opposite reads (q,p) and a reversed-orientation one (P,Q).
struct OppositeCornerPair {
  CornerSite site1;
  CornerSite site2;
  PairOrientation orientation;
};

std::vector<CornerSite> corner_sites(const CyclicWord& w);

/// All unordered opposite-corner pairs, ordered by (position1, position2).
std::vector<OppositeCornerPair> find_opposite_corner_pairs(const CyclicWord& w);

/// Reversed-orientation surgery ⟨x r|s y R|S z⟩ -> ⟨x r|r Y S|S z⟩, anchored so
/// that site1 provides the r|s corner. Preserves alpha/beta, drops one block-pair.
CyclicWord surgery_reversed(const CyclicWord& w, const OppositeCornerPair& pair);

/// Same-orientation surgery ⟨x r|s y s|r z⟩ -> [⟨x r|r z⟩, ⟨s y s|⟩].
MultiWord surgery_same(const CyclicWord& w, const OppositeCornerPair& pair);

/// Merge surgery [⟨x r|s y⟩, ⟨z s|r w⟩] -> ⟨x r|r w z s|s y⟩; a reversed-
/// orientation second corner is handled by inverting component 2 first.
CyclicWord surgery_merge(const MultiWord& mw, const CornerSite& site1, const CornerSite& site2);

struct ReductionStep {
  std::string rule;
  std::string before;
  std::string after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  CyclicWord final_word;
  int guaranteed_gain;
};

/// Drive a word with h >= 1 block-pairs down to h <= 2 by cross-corner
/// surgeries (plus the two-block-pair substitution for the three-letter
/// terminal cases), preserving alpha and beta throughout.
ReductionTrace reduce_to_two_blockpairs(const CyclicWord& w);

std::string trace_to_json(const ReductionTrace& trace);

}  // namespace curvesi
