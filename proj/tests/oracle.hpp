// Independent brute-force oracle for the test suites. Everything here works
// on plain strings and transcribes the linking rules directly, with none of
// the engine's incremental machinery, so the two routes share no code.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline char inv(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
  }
  return '?';
}

// positions on the boundary ring (a cyclic arrangement like "abAB")
inline int ring_pos(const std::string& ring, char c) {
  return static_cast<int>(ring.find(c));
}

// +1 / -1 for the two senses of a triple of distinct ring points, 0 otherwise
inline int orient(const std::string& ring, char x, char y, char z) {
  if (x == y || y == z || x == z) return 0;
  const int dx = ring_pos(ring, x);
  const int dy = (ring_pos(ring, y) - dx + 4) % 4;
  const int dz = (ring_pos(ring, z) - dx + 4) % 4;
  return dy < dz ? 1 : -1;
}

inline bool similarly(const std::string& ring, const std::string& t1, const std::string& t2) {
  const int o1 = orient(ring, t1[0], t1[1], t1[2]);
  return o1 != 0 && o1 == orient(ring, t2[0], t2[1], t2[2]);
}

// chords inv(p1)->p2 and inv(q1)->q2 alternate around the ring
inline bool chords_linked(const std::string& ring, const std::string& u, const std::string& v) {
  const int a1 = ring_pos(ring, inv(u[0])), a2 = ring_pos(ring, u[1]);
  const int b1 = ring_pos(ring, inv(v[0])), b2 = ring_pos(ring, v[1]);
  std::set<int> ends{a1, a2, b1, b2};
  if (ends.size() != 4) return false;
  const int e = (a2 - a1 + 4) % 4;
  const int s = (b1 - a1 + 4) % 4;
  const int t = (b2 - a1 + 4) % 4;
  return (s < e) != (t < e);
}

// Def-3.2-style classification of two equal-length linear words.
inline std::optional<int> classify(const std::string& ring, const std::string& u,
                                   const std::string& v) {
  const std::size_t n = u.size();
  if (n < 2 || v.size() != n) return std::nullopt;
  if (n == 2) return chords_linked(ring, u, v) ? std::optional<int>(1) : std::nullopt;
  const std::string yu = u.substr(1, n - 2);
  const std::string yv = v.substr(1, n - 2);
  std::string yv_invrev(yv.rbegin(), yv.rend());
  for (char& c : yv_invrev) c = inv(c);
  const char p1 = u.front(), p2 = u.back(), q1 = v.front(), q2 = v.back();
  const char x1 = yu.front(), x2 = yu.back();
  if (yu == yv && similarly(ring, {inv(p1), inv(q1), x1}, {p2, q2, inv(x2)})) return 2;
  if (yu == yv_invrev && similarly(ring, {inv(p1), q2, x1}, {p2, inv(q1), inv(x2)})) return 3;
  return std::nullopt;
}

inline std::string cyclic_substr(const std::string& w, int start, int len) {
  std::string out;
  for (int t = 0; t < len; ++t) out.push_back(w[static_cast<std::size_t>((start + t) % static_cast<int>(w.size()))]);
  return out;
}

// number of linked unordered occurrence pairs of a single word
inline long long count_self_pairs(const std::string& ring, const std::string& w) {
  const int L = static_cast<int>(w.size());
  long long count = 0;
  for (int len = 2; len <= L + 2; ++len) {
    for (int s1 = 0; s1 < L; ++s1) {
      for (int s2 = s1 + 1; s2 < L; ++s2) {
        if (classify(ring, cyclic_substr(w, s1, len), cyclic_substr(w, s2, len))) ++count;
      }
    }
  }
  return count;
}

// exact SI for primitive words and pure powers, on the given ring
inline long long brute_si(const std::string& ring, const std::string& w) {
  const int L = static_cast<int>(w.size());
  bool pure = true;
  for (char c : w) pure = pure && (c == w[0]);
  if (pure) return L - 1;
  return count_self_pairs(ring, w);
}

// ordered linked pairs between periodic extensions of two words
inline long long brute_in(const std::string& ring, const std::string& v, const std::string& w) {
  const int cap = static_cast<int>(v.size() + w.size()) + 2;
  long long count = 0;
  for (int len = 2; len <= cap; ++len) {
    for (std::size_t s1 = 0; s1 < v.size(); ++s1) {
      for (std::size_t s2 = 0; s2 < w.size(); ++s2) {
        if (classify(ring, cyclic_substr(v, static_cast<int>(s1), len),
                     cyclic_substr(w, static_cast<int>(s2), len))) {
          ++count;
        }
      }
    }
  }
  return count;
}

// lexicographic comparison under the letter order a < b < A < B
inline bool rank_less(const std::string& x, const std::string& y) {
  auto key = [](char c) { return std::string("abAB").find(c); };
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (key(x[i]) != key(y[i])) return key(x[i]) < key(y[i]);
  }
  return x.size() < y.size();
}

inline std::string least_rotation(const std::string& s) {
  std::string best = s;
  for (int r = 1; r < static_cast<int>(s.size()); ++r) {
    const std::string rot = cyclic_substr(s, r, static_cast<int>(s.size()));
    if (rank_less(rot, best)) best = rot;
  }
  return best;
}

// all reduced cyclic classes of length L, keyed by their least rotation
inline std::set<std::string> brute_classes(int L) {
  std::set<std::string> classes;
  std::vector<int> idx(static_cast<std::size_t>(L), 0);
  const std::string letters = "abAB";
  while (true) {
    std::string s;
    for (int t : idx) s.push_back(letters[static_cast<std::size_t>(t)]);
    bool reduced = true;
    for (int p = 0; p < L && reduced; ++p) {
      reduced = s[static_cast<std::size_t>((p + 1) % L)] != inv(s[static_cast<std::size_t>(p)]);
    }
    if (reduced) classes.insert(least_rotation(s));
    int p = L - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == 3) idx[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
  }
  return classes;
}

inline bool brute_primitive(const std::string& w) {
  const int L = static_cast<int>(w.size());
  for (int p = 1; p < L; ++p) {
    if (L % p == 0 && cyclic_substr(w, p, L) == w) return false;
  }
  return true;
}

}  // namespace oracle
