#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace curvesi {

// Error codes shared with the C API (include/curvesi.h mirrors the values).
enum class ErrorCode : int {
  EmptyWord = 1,
  IllegalCharacter = 2,
  NotCyclicallyReduced = 3,
  LengthMismatch = 4,
  SameOccurrence = 5,
  NonPrimitiveInput = 6,
  CapExceeded = 7,
  WrongOrientation = 8,
  DegenerateSplit = 9,
  NotOppositeCorners = 10,
  PurePower = 11,
  UnvalidatedLength = 12,
  UnknownShape = 13,
  InvalidArgument = 14,
  VerifyFailed = 15,
  IoError = 16,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// One of the four letter-directions a, b, A, B (A = a^-1, B = b^-1).
/// The numeric values fix the total order a < b < A < B used for canonical forms.
enum class Letter : std::uint8_t { a = 0, b = 1, A = 2, B = 3 };

constexpr Letter inverse(Letter x) {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 2u);
}

/// True for a/A, false for b/B.
constexpr bool is_a_family(Letter x) {
  return (static_cast<std::uint8_t>(x) & 1u) == 0;
}

constexpr char to_char(Letter x) {
  constexpr std::array<char, 4> chars{'a', 'b', 'A', 'B'};
  return chars[static_cast<std::uint8_t>(x)];
}

// Throws IllegalCharacter for anything outside {a,b,A,B}.
Letter letter_from_char(char c);

std::string letters_to_string(const std::vector<Letter>& letters);
std::vector<Letter> letters_from_string(std::string_view text);

/// Index of the least rotation of `s` under the fixed letter order (Booth's algorithm).
std::size_t least_rotation_index(const std::vector<Letter>& s);

/// A cyclically reduced cyclic word stored in its canonical rotation
/// (the lexicographically least one under a < b < A < B). Immutable.
class CyclicWord {
 public:
  /// Parse a spelling over {a,b,A,B}. The input must already be cyclically
  /// reduced (including across the wrap-around); it is rotated to canonical form.
  static CyclicWord parse(std::string_view text);

  /// Canonicalize a raw letter sequence; same validation as parse().
  static CyclicWord from_letters(std::vector<Letter> letters);

  std::size_t length() const { return letters_.size(); }
  Letter at(std::size_t i) const { return letters_[i % letters_.size()]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Count of a/A letters.
  int alpha() const;
  /// Count of b/B letters.
  int beta() const;
  int distinct_letter_count() const;

  /// Canonical spelling.
  std::string text() const { return letters_to_string(letters_); }

  /// The inverse class: reversed, letter-inverted, re-canonicalized.
  CyclicWord inverted() const;

  friend bool operator==(const CyclicWord& x, const CyclicWord& y) {
    return x.letters_ == y.letters_;
  }
  friend bool operator<(const CyclicWord& x, const CyclicWord& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.letters_ < y.letters_;
  }

 private:
  explicit CyclicWord(std::vector<Letter> canonical) : letters_(std::move(canonical)) {}
  std::vector<Letter> letters_;
};

/// A nonempty reduced linear word (no adjacent letter/inverse pair; the ends are free).
struct LinearWord {
  std::vector<Letter> letters;

  static LinearWord parse(std::string_view text);
  static LinearWord from_letters(std::vector<Letter> letters);

  std::string text() const { return letters_to_string(letters); }
  LinearWord inverted() const;

  friend bool operator==(const LinearWord& x, const LinearWord& y) {
    return x.letters == y.letters;
  }
};

/// An ordered curve system of one or two cyclic words.
struct MultiWord {
  std::vector<CyclicWord> components;

  int alpha() const;
  int beta() const;
  std::string text() const;  // components joined by ","
};

struct Block {
  Letter letter;
  int exponent;
};

/// Maximal-run decomposition w = r1^j1 s1^k1 ... rn^jn sn^kn, read cyclically
/// from the canonical rotation. h = n (0 for pure powers), alpha/beta as in CyclicWord.
struct BlockDecomposition {
  std::vector<Block> blocks;
  int h;
  int alpha;
  int beta;
};

BlockDecomposition block_decomposition(const CyclicWord& w);

/// Number of block-pairs.
int block_pairs(const CyclicWord& w);

struct PowerDecomposition {
  CyclicWord root;
  int exponent;
};

/// Maximal k with w = root^k (k = 1 iff w is primitive).
PowerDecomposition power_decomposition(const CyclicWord& w);

bool is_primitive(const CyclicWord& w);

/// Proper or improper power of a single generator (single distinct letter).
bool is_pure_power(const CyclicWord& w);

/// Apply a letter permutation and re-canonicalize.
CyclicWord relabel(const CyclicWord& w, const std::array<Letter, 4>& image);

}  // namespace curvesi
