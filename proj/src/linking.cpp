#include "linking.hpp"

#include <algorithm>

namespace curvesi {

SurfaceOrder SurfaceOrder::from_ring(const std::array<Letter, 4>& ring, std::string name) {
  std::array<bool, 4> seen{};
  for (Letter x : ring) seen[static_cast<std::size_t>(x)] = true;
  if (!(seen[0] && seen[1] && seen[2] && seen[3])) {
    throw Error(ErrorCode::InvalidArgument, "ring must be a permutation of a, b, A, B");
  }
  return SurfaceOrder(ring, std::move(name));
}

SurfaceOrder::SurfaceOrder(const std::array<Letter, 4>& ring, std::string name)
    : ring_(ring), name_(std::move(name)) {
  for (int i = 0; i < 4; ++i) pos_[static_cast<std::size_t>(ring_[i])] = i;

  // Orientation of (x,y,z): walk the ring from x; +1 if y comes before z.
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (int z = 0; z < 4; ++z) {
        int v = 0;
        if (x != y && y != z && x != z) {
          const int dy = (pos_[y] - pos_[x] + 4) & 3;
          const int dz = (pos_[z] - pos_[x] + 4) & 3;
          v = dy < dz ? 1 : -1;
        }
        orient_[idx3(static_cast<Letter>(x), static_cast<Letter>(y), static_cast<Letter>(z))] =
            static_cast<std::int8_t>(v);
      }
    }
  }

  // Chord for an adjacent pair (p1, p2) joins inverse(p1) to p2 on the ring.
  // Two chords force a crossing exactly when their endpoints alternate.
  for (int p1 = 0; p1 < 4; ++p1) {
    for (int p2 = 0; p2 < 4; ++p2) {
      for (int q1 = 0; q1 < 4; ++q1) {
        for (int q2 = 0; q2 < 4; ++q2) {
          const int a1 = pos_[static_cast<std::size_t>(inverse(static_cast<Letter>(p1)))];
          const int a2 = pos_[p2];
          const int b1 = pos_[static_cast<std::size_t>(inverse(static_cast<Letter>(q1)))];
          const int b2 = pos_[q2];
          bool linked = false;
          if (a1 != a2 && b1 != b2 && a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2) {
            const int e = (a2 - a1 + 4) & 3;
            const int s = (b1 - a1 + 4) & 3;
            const int t = (b2 - a1 + 4) & 3;
            linked = (s < e) != (t < e);
          }
          chord_[idx4(static_cast<Letter>(p1), static_cast<Letter>(p2), static_cast<Letter>(q1),
                      static_cast<Letter>(q2))] = linked;
        }
      }
    }
  }
}

std::string SurfaceOrder::ring_text() const {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (i) out += ",";
    out += to_char(ring_[i]);
  }
  return out;
}

bool similarly_oriented(const std::array<Letter, 3>& t1, const std::array<Letter, 3>& t2,
                        const SurfaceOrder& order) {
  const int o1 = order.orientation(t1[0], t1[1], t1[2]);
  return o1 != 0 && o1 == order.orientation(t2[0], t2[1], t2[2]);
}

const char* pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::I: return "I";
    case PairKind::II: return "II";
    case PairKind::III: return "III";
  }
  return "?";
}

std::optional<PairKind> classify_linear(const std::vector<Letter>& u, const std::vector<Letter>& v,
                                        const SurfaceOrder& order) {
  if (u.size() != v.size() || u.size() < 2) {
    throw Error(ErrorCode::LengthMismatch, "occurrences must have equal length >= 2");
  }
  const std::size_t n = u.size();
  if (n == 2) {
    return order.chords_interleave(u[0], u[1], v[0], v[1]) ? std::optional<PairKind>(PairKind::I)
                                                           : std::nullopt;
  }
  const Letter p1 = u[0], p2 = u[n - 1];
  const Letter q1 = v[0], q2 = v[n - 1];
  const Letter x1 = u[1], x2 = u[n - 2];

  bool same_interior = true;
  for (std::size_t t = 1; t + 1 < n && same_interior; ++t) same_interior = (u[t] == v[t]);
  if (same_interior &&
      similarly_oriented({inverse(p1), inverse(q1), x1}, {p2, q2, inverse(x2)}, order)) {
    return PairKind::II;
  }

  bool inverse_interior = true;
  for (std::size_t t = 1; t + 1 < n && inverse_interior; ++t) {
    inverse_interior = (v[t] == inverse(u[n - 1 - t]));
  }
  if (inverse_interior &&
      similarly_oriented({inverse(p1), q2, x1}, {p2, inverse(q1), inverse(x2)}, order)) {
    return PairKind::III;
  }
  return std::nullopt;
}

namespace {

std::vector<Letter> extract(const CyclicWord& host, Occurrence o) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(o.length));
  for (int t = 0; t < o.length; ++t) out.push_back(host.at(static_cast<std::size_t>(o.start + t)));
  return out;
}

}  // namespace

std::optional<LinkedPair> classify_pair(const CyclicWord& host1, Occurrence o1,
                                        const CyclicWord& host2, Occurrence o2,
                                        const SurfaceOrder& order) {
  if (o1.length != o2.length || o1.length < 2) {
    throw Error(ErrorCode::LengthMismatch, "occurrences must have equal length >= 2");
  }
  const bool same_host = (host1 == host2);
  if (same_host && o1 == o2) {
    throw Error(ErrorCode::SameOccurrence, "occurrences within one word must be distinct");
  }
  const int cap = same_host ? static_cast<int>(host1.length()) + 2
                            : static_cast<int>(host1.length() + host2.length()) + 2;
  if (o1.length > cap) {
    throw Error(ErrorCode::InvalidArgument,
                "occurrence length " + std::to_string(o1.length) + " exceeds cap " +
                    std::to_string(cap));
  }
  auto kind = classify_linear(extract(host1, o1), extract(host2, o2), order);
  if (!kind) return std::nullopt;
  return LinkedPair{o1, o2, *kind, host1.text(), host2.text()};
}

namespace {

// Shared enumerator over occurrence pairs. Two modes:
//  - self: host1 == host2 == w, unordered start pairs s1 < s2, interior cap L;
//  - cross: two hosts, all ordered start pairs, interior cap |v| + |w|.
// The cap flag trips when an interior *match* that could still link reaches
// the cap; by the periodicity bound this only happens when truncating the
// enumeration would be unsound.
template <typename Sink>
long long enumerate_pairs(const std::vector<Letter>& sv, const std::vector<Letter>& sw,
                          bool self_mode, int interior_cap, const SurfaceOrder& order,
                          bool* hit_cap, Sink&& sink) {
  const int Lv = static_cast<int>(sv.size());
  const int Lw = static_cast<int>(sw.size());
  long long count = 0;
  auto v_at = [&](int i) { return sv[static_cast<std::size_t>(i % Lv)]; };
  auto w_at = [&](int i) { return sw[static_cast<std::size_t>(i % Lw)]; };

  for (int s1 = 0; s1 < Lv; ++s1) {
    const int s2_begin = self_mode ? s1 + 1 : 0;
    for (int s2 = s2_begin; s2 < Lw; ++s2) {
      // length 2
      if (order.chords_interleave(v_at(s1), v_at(s1 + 1), w_at(s2), w_at(s2 + 1))) {
        ++count;
        sink(s1, s2, 2, PairKind::I);
      }

      // type II: equal interiors; the first triple does not depend on the length.
      // When it is degenerate no length can link, so an unbounded interior match
      // (e.g. between period-shifted starts of a power) is harmless.
      const int o1_ii = order.orientation(inverse(v_at(s1)), inverse(w_at(s2)), v_at(s1 + 1));
      if (o1_ii != 0) {
        int lce = 0;
        while (lce < interior_cap && v_at(s1 + 1 + lce) == w_at(s2 + 1 + lce)) ++lce;
        if (lce >= interior_cap) *hit_cap = true;
        for (int m = 1; m <= lce; ++m) {
          const int o2 = order.orientation(v_at(s1 + m + 1), w_at(s2 + m + 1),
                                           inverse(v_at(s1 + m)));
          if (o2 == o1_ii) {
            ++count;
            sink(s1, s2, m + 2, PairKind::II);
          }
        }
      }

      // type III: the second interior is the inverse of the first, read backwards
      for (int m = 1; m <= interior_cap; ++m) {
        bool match = true;
        for (int t = 0; t < m; ++t) {
          if (w_at(s2 + 1 + t) != inverse(v_at(s1 + m - t))) {
            match = false;
            break;
          }
        }
        if (!match) continue;
        if (m >= interior_cap) *hit_cap = true;
        const int o1 = order.orientation(inverse(v_at(s1)), w_at(s2 + m + 1), v_at(s1 + 1));
        if (o1 != 0 &&
            o1 == order.orientation(v_at(s1 + m + 1), inverse(w_at(s2)), inverse(v_at(s1 + m)))) {
          ++count;
          sink(s1, s2, m + 2, PairKind::III);
        }
      }
    }
  }
  return count;
}

void no_sink(int, int, int, PairKind) {}

}  // namespace

long long count_linked_pairs(const CyclicWord& w, const SurfaceOrder& order) {
  const int L = static_cast<int>(w.length());
  bool hit_cap = false;
  const long long n =
      enumerate_pairs(w.letters(), w.letters(), true, L, order, &hit_cap, no_sink);
  if (hit_cap) {
    throw Error(ErrorCode::CapExceeded,
                "linked-pair interior reached the occurrence-length cap for " + w.text());
  }
  return n;
}

std::vector<LinkedPair> linked_pairs(const CyclicWord& w, const SurfaceOrder& order) {
  const int L = static_cast<int>(w.length());
  std::vector<LinkedPair> out;
  bool hit_cap = false;
  enumerate_pairs(w.letters(), w.letters(), true, L, order, &hit_cap,
                  [&](int s1, int s2, int len, PairKind kind) {
                    out.push_back(LinkedPair{{s1, len}, {s2, len}, kind, w.text(), w.text()});
                  });
  if (hit_cap) {
    throw Error(ErrorCode::CapExceeded,
                "linked-pair interior reached the occurrence-length cap for " + w.text());
  }
  return out;
}

long long linked_pair_in_count(const CyclicWord& v, const CyclicWord& w,
                               const SurfaceOrder& order) {
  const int cap = static_cast<int>(v.length() + w.length());
  bool hit_cap = false;
  const long long n = enumerate_pairs(v.letters(), w.letters(), false, cap, order, &hit_cap, no_sink);
  if (hit_cap) {
    throw Error(ErrorCode::CapExceeded, "intersection enumeration for " + v.text() + " and " +
                                            w.text() + " reached the interior cap " +
                                            std::to_string(cap));
  }
  return n;
}

SiResult self_intersection(const CyclicWord& w, const SurfaceOrder& order) {
  if (is_pure_power(w)) {
    return {static_cast<long long>(w.length()) - 1, true};
  }
  const auto pd = power_decomposition(w);
  const long long pairs = count_linked_pairs(w, order);
  if (pd.exponent == 1) return {pairs, true};
  return {pairs + pd.exponent - 1, false};
}

long long intersection_number(const CyclicWord& v, const CyclicWord& w,
                              const SurfaceOrder& order) {
  if (!is_primitive(v) || !is_primitive(w)) {
    throw Error(ErrorCode::NonPrimitiveInput, "intersection_number requires primitive words");
  }
  return linked_pair_in_count(v, w, order);
}

SiResult multiword_si(const MultiWord& mw, const SurfaceOrder& order) {
  if (mw.components.empty() || mw.components.size() > 2) {
    throw Error(ErrorCode::InvalidArgument, "multi-word must have one or two components");
  }
  if (mw.components.size() == 1) return self_intersection(mw.components[0], order);
  const CyclicWord& v = mw.components[0];
  const CyclicWord& w = mw.components[1];
  for (const CyclicWord* c : {&v, &w}) {
    if (!is_primitive(*c) && !is_pure_power(*c)) {
      throw Error(ErrorCode::NonPrimitiveInput,
                  "component " + c->text() + " admits no exact self-intersection value");
    }
  }
  const SiResult s1 = self_intersection(v, order);
  const SiResult s2 = self_intersection(w, order);
  return {s1.value + s2.value + linked_pair_in_count(v, w, order), true};
}

}  // namespace curvesi
