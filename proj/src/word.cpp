#include "word.hpp"

#include <algorithm>

namespace curvesi {

Letter letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'A': return Letter::A;
    case 'B': return Letter::B;
    default:
      throw Error(ErrorCode::IllegalCharacter,
                  std::string("illegal character '") + c + "' (alphabet is a, b, A, B)");
  }
}

std::string letters_to_string(const std::vector<Letter>& letters) {
  std::string out;
  out.reserve(letters.size());
  for (Letter x : letters) out.push_back(to_char(x));
  return out;
}

std::vector<Letter> letters_from_string(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(letter_from_char(c));
  return out;
}

std::size_t least_rotation_index(const std::vector<Letter>& s) {
  // Booth's least-rotation algorithm on the doubled word.
  const std::size_t n = s.size();
  if (n <= 1) return 0;
  std::vector<int> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = s[j % n];
    int i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[k % n]) {
      if (sj < s[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

namespace {

void check_cyclically_reduced(const std::vector<Letter>& letters) {
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (letters[(i + 1) % n] == inverse(letters[i])) {
      throw Error(ErrorCode::NotCyclicallyReduced,
                  "not cyclically reduced: " + letters_to_string(letters) + " has " +
                      to_char(letters[i]) + std::string(1, to_char(letters[(i + 1) % n])) +
                      (i + 1 == n ? " across the wrap-around" : "") + " at position " +
                      std::to_string(i));
    }
  }
}

std::vector<Letter> rotate_to(const std::vector<Letter>& letters, std::size_t k) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(k), letters.end());
  out.insert(out.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

}  // namespace

CyclicWord CyclicWord::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::EmptyWord, "empty word");
  return from_letters(letters_from_string(text));
}

CyclicWord CyclicWord::from_letters(std::vector<Letter> letters) {
  if (letters.empty()) throw Error(ErrorCode::EmptyWord, "empty word");
  check_cyclically_reduced(letters);
  const std::size_t k = least_rotation_index(letters);
  if (k != 0) letters = rotate_to(letters, k);
  return CyclicWord(std::move(letters));
}

int CyclicWord::alpha() const {
  int n = 0;
  for (Letter x : letters_) n += is_a_family(x) ? 1 : 0;
  return n;
}

int CyclicWord::beta() const { return static_cast<int>(length()) - alpha(); }

int CyclicWord::distinct_letter_count() const {
  std::array<bool, 4> seen{};
  for (Letter x : letters_) seen[static_cast<std::size_t>(x)] = true;
  int n = 0;
  for (bool s : seen) n += s ? 1 : 0;
  return n;
}

CyclicWord CyclicWord::inverted() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (Letter& x : inv) x = inverse(x);
  return from_letters(std::move(inv));
}

LinearWord LinearWord::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::EmptyWord, "empty word");
  return from_letters(letters_from_string(text));
}

LinearWord LinearWord::from_letters(std::vector<Letter> letters) {
  if (letters.empty()) throw Error(ErrorCode::EmptyWord, "empty word");
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i + 1] == inverse(letters[i])) {
      throw Error(ErrorCode::NotCyclicallyReduced,
                  "not reduced: " + letters_to_string(letters));
    }
  }
  return LinearWord{std::move(letters)};
}

LinearWord LinearWord::inverted() const {
  std::vector<Letter> inv(letters.rbegin(), letters.rend());
  for (Letter& x : inv) x = inverse(x);
  return LinearWord{std::move(inv)};
}

int MultiWord::alpha() const {
  int n = 0;
  for (const auto& c : components) n += c.alpha();
  return n;
}

int MultiWord::beta() const {
  int n = 0;
  for (const auto& c : components) n += c.beta();
  return n;
}

std::string MultiWord::text() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ",";
    out += components[i].text();
  }
  return out;
}

BlockDecomposition block_decomposition(const CyclicWord& w) {
  BlockDecomposition d;
  d.alpha = w.alpha();
  d.beta = w.beta();
  const auto& s = w.letters();
  const std::size_t n = s.size();
  // The canonical rotation never splits a run across the wrap-around unless the
  // word is a pure power (a smaller rotation would exist otherwise).
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && s[j + 1] == s[i]) ++j;
    d.blocks.push_back({s[i], static_cast<int>(j - i + 1)});
    i = j + 1;
  }
  if (d.blocks.size() == 1) {
    d.h = 0;
  } else {
    d.h = static_cast<int>(d.blocks.size()) / 2;
  }
  return d;
}

int block_pairs(const CyclicWord& w) { return block_decomposition(w).h; }

PowerDecomposition power_decomposition(const CyclicWord& w) {
  const auto& s = w.letters();
  const std::size_t n = s.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + p < n && periodic; ++i) periodic = (s[i] == s[i + p]);
    if (periodic) {
      std::vector<Letter> root(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p));
      return {CyclicWord::from_letters(std::move(root)), static_cast<int>(n / p)};
    }
  }
  return {w, 1};
}

bool is_primitive(const CyclicWord& w) { return power_decomposition(w).exponent == 1; }

bool is_pure_power(const CyclicWord& w) { return w.distinct_letter_count() == 1; }

CyclicWord relabel(const CyclicWord& w, const std::array<Letter, 4>& image) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter x : w.letters()) out.push_back(image[static_cast<std::size_t>(x)]);
  return CyclicWord::from_letters(std::move(out));
}

}  // namespace curvesi
