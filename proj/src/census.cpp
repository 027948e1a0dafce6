#include "census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

#include <json.hpp>

namespace curvesi {

namespace {

constexpr std::array<Letter, 4> kLetters{Letter::a, Letter::b, Letter::A, Letter::B};

// Canonical-form DFS. A rotation start i is "live" while w[i..t) == w[0..t-i);
// appending a letter below the matched base letter would make that rotation
// lexicographically smaller than the stored spelling, so the branch dies.
// At a full word, live rotations decide canonicity (wrap comparison) and
// primitivity (full equality = proper period).
struct CanonicalDfs {
  int length;
  const std::function<void(const CyclicWord&, bool)>* sink;
  std::vector<Letter> word;

  explicit CanonicalDfs(int L, const std::function<void(const CyclicWord&, bool)>& s)
      : length(L), sink(&s), word(static_cast<std::size_t>(L), Letter::a) {}

  struct Live {
    int count = 0;
    std::array<std::int16_t, 32> start{};
  };

  // Returns false when the extension is already beaten by a smaller rotation.
  bool extend(const Live& live, int t, Letter c, Live* next) const {
    next->count = 0;
    for (int k = 0; k < live.count; ++k) {
      const int i = live.start[static_cast<std::size_t>(k)];
      const Letter base = word[static_cast<std::size_t>(t - i)];
      if (c < base) return false;
      if (c == base) next->start[static_cast<std::size_t>(next->count++)] = static_cast<std::int16_t>(i);
    }
    if (t >= 1) {
      if (c < word[0]) return false;
      if (c == word[0]) next->start[static_cast<std::size_t>(next->count++)] = static_cast<std::int16_t>(t);
    }
    return true;
  }

  void leaf(const Live& live) const {
    bool primitive = true;
    for (int k = 0; k < live.count; ++k) {
      const int i = live.start[static_cast<std::size_t>(k)];
      int cmp = 0;
      for (int t = 0; t < i && cmp == 0; ++t) {
        cmp = static_cast<int>(word[static_cast<std::size_t>(t)]) -
              static_cast<int>(word[static_cast<std::size_t>(length - i + t)]);
      }
      if (cmp < 0) return;  // a smaller rotation exists
      if (cmp == 0) primitive = false;
    }
    (*sink)(CyclicWord::from_letters(word), primitive);
  }

  void dfs(int t, const Live& live) {
    if (t == length) {
      leaf(live);
      return;
    }
    for (Letter c : kLetters) {
      if (t > 0 && c == inverse(word[static_cast<std::size_t>(t - 1)])) continue;
      if (t == length - 1 && c == inverse(word[0])) continue;
      Live next;
      if (!extend(live, t, c, &next)) continue;
      word[static_cast<std::size_t>(t)] = c;
      dfs(t + 1, next);
    }
  }

  // Seed the DFS with a fixed prefix; returns silently if the prefix is not
  // extendable to a canonical word.
  void run(const std::vector<Letter>& prefix) {
    Live live;
    for (std::size_t t = 0; t < prefix.size(); ++t) {
      const Letter c = prefix[t];
      if (t > 0 && c == inverse(word[t - 1])) return;
      if (static_cast<int>(t) == length - 1 && c == inverse(word[0])) return;
      Live next;
      if (!extend(live, static_cast<int>(t), c, &next)) return;
      word[t] = c;
      live = next;
    }
    dfs(static_cast<int>(prefix.size()), live);
  }
};

std::vector<std::vector<Letter>> shard_prefixes(int length) {
  if (length < 1) throw Error(ErrorCode::InvalidArgument, "length must be positive");
  if (length > 30) {
    throw Error(ErrorCode::InvalidArgument, "enumeration supports lengths up to 30");
  }
  std::vector<std::vector<Letter>> shards;
  if (length < 4) {
    shards.push_back({});
    return shards;
  }
  for (Letter l0 : kLetters) {
    for (Letter l1 : kLetters) {
      if (l1 == inverse(l0)) continue;
      for (Letter l2 : kLetters) {
        if (l2 == inverse(l1)) continue;
        shards.push_back({l0, l1, l2});
      }
    }
  }
  return shards;
}

// Run `work(shard_index)` once for each shard, over a deterministic shard list.
void run_sharded(int shard_count, int threads, const std::function<void(int)>& work) {
  if (threads <= 1 || shard_count <= 1) {
    for (int s = 0; s < shard_count; ++s) work(s);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int n = std::min(threads, shard_count);
  pool.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    pool.emplace_back([&]() {
      for (int s = next.fetch_add(1); s < shard_count; s = next.fetch_add(1)) work(s);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

void enumerate_canonical(int length,
                         const std::function<void(const CyclicWord&, bool)>& sink) {
  if (length < 1) throw Error(ErrorCode::InvalidArgument, "length must be positive");
  if (length > 30) {
    throw Error(ErrorCode::InvalidArgument, "enumeration supports lengths up to 30");
  }
  CanonicalDfs dfs(length, sink);
  dfs.run({});
}

std::vector<CyclicWord> enumerate_words(int length, bool primitive_only) {
  std::vector<CyclicWord> out;
  enumerate_canonical(length, [&](const CyclicWord& w, bool primitive) {
    if (!primitive_only || primitive) out.push_back(w);
  });
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CURVESI_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

SiHistogram si_histogram(int length, const SurfaceOrder& order, int threads) {
  const auto prefixes = shard_prefixes(length);
  std::vector<std::map<long long, long long>> partial(prefixes.size());
  run_sharded(static_cast<int>(prefixes.size()), resolve_threads(threads), [&](int s) {
    auto& local = partial[static_cast<std::size_t>(s)];
    std::function<void(const CyclicWord&, bool)> sink = [&](const CyclicWord& w, bool primitive) {
      if (!primitive) return;
      local[self_intersection(w, order).value]++;
    };
    CanonicalDfs dfs(length, sink);
    dfs.run(prefixes[static_cast<std::size_t>(s)]);
  });
  SiHistogram h{length, order.name(), {}, 0};
  for (const auto& local : partial) {
    for (const auto& [si, n] : local) {
      h.counts[si] += n;
      h.total += n;
    }
  }
  return h;
}

std::vector<WordSi> census_with_si(int length, const SurfaceOrder& order, int threads) {
  const auto prefixes = shard_prefixes(length);
  std::vector<std::vector<WordSi>> partial(prefixes.size());
  run_sharded(static_cast<int>(prefixes.size()), resolve_threads(threads), [&](int s) {
    auto& local = partial[static_cast<std::size_t>(s)];
    std::function<void(const CyclicWord&, bool)> sink = [&](const CyclicWord& w, bool primitive) {
      if (!primitive) return;
      local.push_back({w.text(), self_intersection(w, order).value});
    };
    CanonicalDfs dfs(length, sink);
    dfs.run(prefixes[static_cast<std::size_t>(s)]);
  });
  std::vector<WordSi> out;
  for (auto& local : partial) {
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

PantsExtremes pants_extremes(int length, bool force, int threads) {
  if (length > 15 && !force) {
    throw Error(ErrorCode::UnvalidatedLength,
                "pair-of-pants results are validated for L <= 15 only (use force to extrapolate)");
  }
  const SurfaceOrder& order = validated_pants_order();
  const auto prefixes = shard_prefixes(length);
  struct Local {
    long long prim_max = -1;
    long long prim_min = 1LL << 62;
    std::vector<std::string> prim_max_words;
    long long np_max = -1;
    long long np_max_count = 0;
    long long prim_max_count = 0;
  };
  std::vector<Local> partial(prefixes.size());
  run_sharded(static_cast<int>(prefixes.size()), resolve_threads(threads), [&](int s) {
    Local& local = partial[static_cast<std::size_t>(s)];
    std::function<void(const CyclicWord&, bool)> sink = [&](const CyclicWord& w, bool primitive) {
      const long long v = self_intersection(w, order).value;
      if (primitive) {
        if (v > local.prim_max) {
          local.prim_max = v;
          local.prim_max_words.clear();
          local.prim_max_count = 0;
        }
        if (v == local.prim_max) {
          local.prim_max_words.push_back(w.text());
          local.prim_max_count++;
        }
        local.prim_min = std::min(local.prim_min, v);
      } else {
        if (v > local.np_max) {
          local.np_max = v;
          local.np_max_count = 0;
        }
        if (v == local.np_max) local.np_max_count++;
      }
    };
    CanonicalDfs dfs(length, sink);
    dfs.run(prefixes[static_cast<std::size_t>(s)]);
  });
  long long prim_max = -1, prim_min = 1LL << 62, np_max = -1;
  for (const auto& local : partial) {
    prim_max = std::max(prim_max, local.prim_max);
    prim_min = std::min(prim_min, local.prim_min);
    np_max = std::max(np_max, local.np_max);
  }
  std::vector<std::string> max_words;
  long long prim_max_count = 0, np_max_count = 0;
  for (const auto& local : partial) {
    if (local.prim_max == prim_max) {
      max_words.insert(max_words.end(), local.prim_max_words.begin(), local.prim_max_words.end());
      prim_max_count += local.prim_max_count;
    }
    if (local.np_max == np_max) np_max_count += local.np_max_count;
  }
  std::sort(max_words.begin(), max_words.end());
  // CT-5.3-style count: odd lengths count primitive maximizers; even lengths
  // count all classes at the overall maximum (reached by proper powers).
  long long max_count;
  if (length % 2 == 1) {
    max_count = prim_max_count;
  } else {
    const long long overall = std::max(prim_max, np_max);
    max_count = (prim_max == overall ? prim_max_count : 0) + (np_max == overall ? np_max_count : 0);
  }
  return {length, prim_max, max_count, std::move(max_words), prim_min, np_max};
}

namespace {

std::vector<std::string> odd_pants_maximizers(int length) {
  // r(rs)^{(L-1)/2} with {r,s} = {a,B} or {A,b}
  std::vector<std::string> out;
  const int m = (length - 1) / 2;
  const std::array<std::pair<Letter, Letter>, 4> rs{{{Letter::a, Letter::B},
                                                     {Letter::B, Letter::a},
                                                     {Letter::A, Letter::b},
                                                     {Letter::b, Letter::A}}};
  for (const auto& [r, s] : rs) {
    std::vector<Letter> letters{r};
    for (int t = 0; t < m; ++t) {
      letters.push_back(r);
      letters.push_back(s);
    }
    out.push_back(CyclicWord::from_letters(std::move(letters)).text());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool pants_ring_self_test(const SurfaceOrder& order) {
  for (int L = 2; L <= 7; ++L) {
    long long mx = -1, mn = 1LL << 62;
    std::vector<std::string> at_max;
    enumerate_canonical(L, [&](const CyclicWord& w, bool primitive) {
      if (!primitive) return;
      const long long v = self_intersection(w, order).value;
      if (v > mx) {
        mx = v;
        at_max.clear();
      }
      if (v == mx) at_max.push_back(w.text());
      mn = std::min(mn, v);
    });
    long long want_max;
    const long long n = L;
    if (L % 2 == 1) want_max = (n * n - 1) / 4;
    else if (L == 2) want_max = 1;
    else if (L % 4 == 0) want_max = n * n / 4 - 1;
    else want_max = n * n / 4 - 2;
    const long long want_min = L >= 3 ? L / 2 : 0;
    if (mx != want_max || mn != want_min) return false;
    if (L % 2 == 1) {
      std::sort(at_max.begin(), at_max.end());
      if (at_max != odd_pants_maximizers(L)) return false;
    }
  }
  return true;
}

}  // namespace

const SurfaceOrder& validated_pants_order() {
  static const SurfaceOrder chosen = [] {
    const std::array<std::array<Letter, 4>, 3> candidates{{
        {Letter::a, Letter::A, Letter::b, Letter::B},
        {Letter::a, Letter::b, Letter::B, Letter::A},
        {Letter::a, Letter::b, Letter::A, Letter::B},
    }};
    for (const auto& ring : candidates) {
      SurfaceOrder order = SurfaceOrder::from_ring(ring, "pants");
      if (pants_ring_self_test(order)) return order;
    }
    throw Error(ErrorCode::VerifyFailed,
                "no candidate pants ring reproduces the short-length extremes; "
                "the boundary cyclic order needs manual attention");
  }();
  return chosen;
}

std::vector<SiHistogram> census_table(int max_length, const SurfaceOrder& order, int threads) {
  if (max_length < 1) throw Error(ErrorCode::InvalidArgument, "max length must be positive");
  std::vector<SiHistogram> rows;
  rows.reserve(static_cast<std::size_t>(max_length));
  for (int L = 1; L <= max_length; ++L) rows.push_back(si_histogram(L, order, threads));
  return rows;
}

std::string table_to_csv(const std::vector<SiHistogram>& rows) {
  std::string out = "length,si,count\n";
  for (const auto& row : rows) {
    for (const auto& [si, n] : row.counts) {
      out += std::to_string(row.length);
      out += ",";
      out += std::to_string(si);
      out += ",";
      out += std::to_string(n);
      out += "\n";
    }
  }
  return out;
}

std::string table_to_json(const std::vector<SiHistogram>& rows, const std::string& surface) {
  nlohmann::ordered_json j;
  j["surface"] = surface;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json counts;
    for (const auto& [si, n] : row.counts) counts[std::to_string(si)] = n;
    j["rows"].push_back({{"length", row.length}, {"counts", std::move(counts)}});
  }
  return j.dump();
}

std::vector<SiHistogram> table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::IoError, std::string("bad table JSON: ") + e.what());
  }
  std::vector<SiHistogram> rows;
  const std::string surface = j.value("surface", "");
  for (const auto& row : j.at("rows")) {
    SiHistogram h{row.at("length").get<int>(), surface, {}, 0};
    for (const auto& [key, value] : row.at("counts").items()) {
      h.counts[std::stoll(key)] = value.get<long long>();
      h.total += value.get<long long>();
    }
    rows.push_back(std::move(h));
  }
  return rows;
}

}  // namespace curvesi
