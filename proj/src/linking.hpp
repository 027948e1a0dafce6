#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "word.hpp"

namespace curvesi {

/// Cyclic arrangement of the four letter-directions around the basepoint.
/// The torus ring is (a, b, A, B); the pants ring is (a, A, b, B).
/// Orientation predicates depend only on the ring up to rotation and reflection.
class SurfaceOrder {
 public:
  static SurfaceOrder torus() { return SurfaceOrder({Letter::a, Letter::b, Letter::A, Letter::B}, "torus"); }
  static SurfaceOrder pants() { return SurfaceOrder({Letter::a, Letter::A, Letter::b, Letter::B}, "pants"); }
  static SurfaceOrder from_ring(const std::array<Letter, 4>& ring, std::string name = "custom");

  const std::array<Letter, 4>& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  std::string ring_text() const;

  /// +1 / -1 for the two rotational senses of a triple of distinct letters, 0 otherwise.
  int orientation(Letter x, Letter y, Letter z) const {
    return orient_[idx3(x, y, z)];
  }

  /// Chords inverse(p1)->p2 and inverse(q1)->q2 have four distinct endpoints
  /// that alternate around the ring.
  bool chords_interleave(Letter p1, Letter p2, Letter q1, Letter q2) const {
    return chord_[idx4(p1, p2, q1, q2)];
  }

 private:
  SurfaceOrder(const std::array<Letter, 4>& ring, std::string name);
  static std::size_t idx3(Letter x, Letter y, Letter z) {
    return (static_cast<std::size_t>(x) << 4) | (static_cast<std::size_t>(y) << 2) |
           static_cast<std::size_t>(z);
  }
  static std::size_t idx4(Letter p1, Letter p2, Letter q1, Letter q2) {
    return (static_cast<std::size_t>(p1) << 6) | (static_cast<std::size_t>(p2) << 4) |
           (static_cast<std::size_t>(q1) << 2) | static_cast<std::size_t>(q2);
  }

  std::array<Letter, 4> ring_;
  std::array<int, 4> pos_;  // pos_[letter] = index on the ring
  std::array<std::int8_t, 64> orient_{};
  std::array<bool, 256> chord_{};
  std::string name_;
};

/// Both triples consist of three distinct letters and traverse the ring in the
/// same rotational sense.
bool similarly_oriented(const std::array<Letter, 3>& t1, const std::array<Letter, 3>& t2,
                        const SurfaceOrder& order);

/// A positioned linear subword of a cyclic word: letters w[start..start+length),
/// indices read cyclically (so length may exceed the word length).
struct Occurrence {
  int start;
  int length;

  friend bool operator==(const Occurrence& x, const Occurrence& y) {
    return x.start == y.start && x.length == y.length;
  }
};

enum class PairKind { I, II, III };

const char* pair_kind_name(PairKind k);

struct LinkedPair {
  Occurrence first;
  Occurrence second;
  PairKind kind;
  std::string host_first;   // canonical spelling of the word holding `first`
  std::string host_second;  // canonical spelling of the word holding `second`
};

/// Classify a pair of same-length linear words (length >= 2) as linked or not.
std::optional<PairKind> classify_linear(const std::vector<Letter>& u, const std::vector<Letter>& v,
                                        const SurfaceOrder& order);

/// Occurrence-based classification. Throws LengthMismatch / SameOccurrence on
/// violated preconditions (same-occurrence only applies when host1 == host2).
std::optional<LinkedPair> classify_pair(const CyclicWord& host1, Occurrence o1,
                                        const CyclicWord& host2, Occurrence o2,
                                        const SurfaceOrder& order);

/// Self-intersection value with its exactness tag. `exact` is false only for
/// non-primitive words that are not pure powers, where the value is the
/// upper bound (k-1) + number of linked pairs. Multiple points count with
/// multiplicity (an n-fold point contributes n-choose-2), which is what the
/// pair count yields with no deduplication.
struct SiResult {
  long long value;
  bool exact;
};

SiResult self_intersection(const CyclicWord& w, const SurfaceOrder& order);

/// Number of linked occurrence pairs of w (both occurrences in w). Scans
/// occurrence lengths 2..L+2 and raises CapExceeded if a pair shows up at the cap.
long long count_linked_pairs(const CyclicWord& w, const SurfaceOrder& order);

/// Enumerate the linked pairs of w (test and inspection use).
std::vector<LinkedPair> linked_pairs(const CyclicWord& w, const SurfaceOrder& order);

/// Minimal intersection number of two distinct primitive classes.
/// Throws NonPrimitiveInput for powers and CapExceeded when occurrences reach
/// the interior cap |v| + |w| (e.g. when the classes coincide or are inverse).
long long intersection_number(const CyclicWord& v, const CyclicWord& w, const SurfaceOrder& order);

/// Ordered linked-pair count between periodic extensions of v and w, without
/// the primitivity guard of intersection_number.
long long linked_pair_in_count(const CyclicWord& v, const CyclicWord& w, const SurfaceOrder& order);

/// SI of a one- or two-component system: component SIs plus pairwise IN.
/// Components must be primitive or pure powers for an exact result.
SiResult multiword_si(const MultiWord& mw, const SurfaceOrder& order);

}  // namespace curvesi
