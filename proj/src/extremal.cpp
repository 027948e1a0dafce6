#include "extremal.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace curvesi {

Surface surface_from_name(const std::string& name) {
  if (name == "torus") return Surface::Torus;
  if (name == "pants") return Surface::Pants;
  throw Error(ErrorCode::InvalidArgument, "unknown surface '" + name + "'");
}

const SurfaceOrder& surface_order(Surface s) {
  static const SurfaceOrder torus = SurfaceOrder::torus();
  static const SurfaceOrder pants = SurfaceOrder::pants();
  return s == Surface::Torus ? torus : pants;
}

long long max_si(int L, Surface surface, bool force) {
  if (L < 1) throw Error(ErrorCode::InvalidArgument, "length must be positive");
  const long long n = L;
  if (surface == Surface::Torus) {
    return (L % 2 == 0) ? (n - 2) * (n - 2) / 4 : (n - 1) * (n - 3) / 4;
  }
  if (L > 15 && !force) {
    throw Error(ErrorCode::UnvalidatedLength,
                "pair-of-pants formulas are validated for L <= 15 only (use force to extrapolate)");
  }
  if (L % 2 == 1) return (n * n - 1) / 4;
  if (L == 2) return 1;
  if (L % 4 == 0) return n * n / 4 - 1;
  return n * n / 4 - 2;
}

namespace {

std::vector<Letter> build(std::initializer_list<std::pair<Letter, int>> blocks) {
  std::vector<Letter> out;
  for (const auto& [letter, exponent] : blocks) {
    out.insert(out.end(), static_cast<std::size_t>(exponent), letter);
  }
  return out;
}

const std::array<Letter, 2> kAFamily{Letter::a, Letter::A};
const std::array<Letter, 2> kBFamily{Letter::b, Letter::B};

}  // namespace

std::vector<CyclicWord> maximal_words(int L) {
  if (L < 4) throw Error(ErrorCode::InvalidArgument, "maximal word shapes need L >= 4");
  std::set<CyclicWord> out;
  auto add = [&](std::initializer_list<std::pair<Letter, int>> blocks) {
    out.insert(CyclicWord::from_letters(build(blocks)));
  };
  if (L % 2 == 0) {
    const int half = L / 2;
    for (Letter r : kAFamily) {
      for (Letter s : kBFamily) {
        add({{r, half}, {s, half}});
        for (int i = 1; i < half; ++i) {
          for (int j = 1; j < half; ++j) {
            add({{r, i}, {s, j}, {r, half - i}, {inverse(s), half - j}});
            add({{s, j}, {r, i}, {s, half - j}, {inverse(r), half - i}});
          }
        }
      }
    }
  } else {
    const int big = (L + 1) / 2, small = (L - 1) / 2;
    for (Letter r : kAFamily) {
      for (Letter s : kBFamily) {
        add({{r, big}, {s, small}});
        add({{s, big}, {r, small}});
        for (int sum_r : {big, small}) {
          const int sum_s = L - sum_r;
          for (int i = 1; i < sum_r; ++i) {
            for (int j = 1; j < sum_s; ++j) {
              add({{r, i}, {s, j}, {r, sum_r - i}, {inverse(s), sum_s - j}});
              add({{s, j}, {r, i}, {s, sum_s - j}, {inverse(r), sum_r - i}});
            }
          }
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

long long count_maximal(int L) {
  if (L < 4) throw Error(ErrorCode::InvalidArgument, "counting formulas need L >= 4");
  const long long n = L;
  return (L % 2 == 0) ? (n - 2) * (n - 2) + 4 : 2 * (n - 1) * (n - 3) + 8;
}

std::vector<CyclicWord> submaximal_words(int L) {
  if (L < 4) throw Error(ErrorCode::InvalidArgument, "submaximal word shapes need L >= 4");
  std::set<CyclicWord> out;
  auto add = [&](std::initializer_list<std::pair<Letter, int>> blocks) {
    out.insert(CyclicWord::from_letters(build(blocks)));
  };
  if (L % 2 == 1) {
    // r^i s^j R^k S^l with i+k = (L-1)/2 or (L+1)/2
    for (Letter r : kAFamily) {
      for (Letter s : kBFamily) {
        for (int sum_r : {(L - 1) / 2, (L + 1) / 2}) {
          const int sum_s = L - sum_r;
          for (int i = 1; i < sum_r; ++i) {
            for (int j = 1; j < sum_s; ++j) {
              add({{r, i}, {s, j}, {inverse(r), sum_r - i}, {inverse(s), sum_s - j}});
            }
          }
        }
      }
    }
  } else {
    const int half = L / 2;
    for (Letter r : kAFamily) {
      for (Letter s : kBFamily) {
        // r^{L/2-1} s^{L/2+1}
        add({{r, half - 1}, {s, half + 1}});
        add({{s, half - 1}, {r, half + 1}});
        // r^i s^j R^k S^l, i+k = L/2
        for (int i = 1; i < half; ++i) {
          for (int j = 1; j < half; ++j) {
            add({{r, i}, {s, j}, {inverse(r), half - i}, {inverse(s), half - j}});
          }
        }
        // r^i s^j r^k S^l, i+k = L/2 -+ 1
        for (int sum_r : {half - 1, half + 1}) {
          const int sum_s = L - sum_r;
          for (int i = 1; i < sum_r; ++i) {
            for (int j = 1; j < sum_s; ++j) {
              add({{r, i}, {s, j}, {r, sum_r - i}, {inverse(s), sum_s - j}});
              add({{s, j}, {r, i}, {s, sum_s - j}, {inverse(r), sum_r - i}});
            }
          }
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

long long count_submaximal(int L) {
  if (L < 4) throw Error(ErrorCode::InvalidArgument, "counting formulas need L >= 4");
  const long long n = L;
  return (L % 2 == 1) ? (n - 1) * (n - 3) : 5 * (n - 2) * (n - 2) / 2;
}

int min_length_for_si(long long k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  // smallest m with m^2 >= 4k, then L = m + 2
  long long m = static_cast<long long>(std::sqrt(static_cast<double>(4 * k)));
  while (m * m >= 4 * k) --m;
  while (m * m < 4 * k) ++m;
  return static_cast<int>(m) + 2;
}

namespace {

// Block view rotated so that a designated block comes first.
std::vector<Block> rotate_blocks(const std::vector<Block>& blocks, std::size_t first) {
  std::vector<Block> out;
  out.reserve(blocks.size());
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    out.push_back(blocks[(first + t) % blocks.size()]);
  }
  return out;
}

}  // namespace

ClosedForm closed_form_si(const CyclicWord& w) {
  const auto d = block_decomposition(w);
  const auto unknown = [&]() {
    return Error(ErrorCode::UnknownShape, w.text() + " matches no closed-form shape");
  };
  if (d.h == 1) {
    const long long i = d.blocks[0].exponent, j = d.blocks[1].exponent;
    return {(i - 1) * (j - 1), true};
  }
  if (d.h == 2) {
    // orient so an a-family block comes first
    auto blocks = rotate_blocks(d.blocks, is_a_family(d.blocks[0].letter) ? 0 : 1);
    const Letter r1 = blocks[0].letter, s1 = blocks[1].letter;
    const Letter r2 = blocks[2].letter, s2 = blocks[3].letter;
    const long long i = blocks[0].exponent, j = blocks[1].exponent;
    const long long k = blocks[2].exponent, l = blocks[3].exponent;
    if (r1 == r2 && s1 == s2) {  // r^i s^j r^k s^l
      if (i == k && j == l) {
        return {(i + k - 2) * (j + l - 2) + 1, i == 1 || j == 1};
      }
      return {(i + k - 2) * (j + l - 2) + std::llabs(i - k) + std::llabs(j - l) - 1, true};
    }
    if (r1 == r2 && s1 == inverse(s2)) return {(i + k - 1) * (j + l - 1), true};
    if (r1 == inverse(r2) && s1 == s2) return {(j + l - 1) * (i + k - 1), true};
    if (r1 == inverse(r2) && s1 == inverse(s2)) return {(i + k - 1) * (j + l - 1) - 1, true};
    throw unknown();
  }
  if (d.h == 3 && w.distinct_letter_count() == 3) {
    // r^i s^j r^k s^l r^m S^n with the minority block last
    std::array<int, 4> letter_count{};
    for (const auto& blk : d.blocks) letter_count[static_cast<std::size_t>(blk.letter)]++;
    for (std::size_t t = 0; t < d.blocks.size(); ++t) {
      const Letter x = d.blocks[t].letter;
      if (letter_count[static_cast<std::size_t>(x)] == 1 &&
          letter_count[static_cast<std::size_t>(inverse(x))] == 2) {
        auto blocks = rotate_blocks(d.blocks, (t + 1) % d.blocks.size());
        const long long i = blocks[0].exponent, j = blocks[1].exponent;
        const long long k = blocks[2].exponent, l = blocks[3].exponent;
        const long long m = blocks[4].exponent, n = blocks[5].exponent;
        return {(i + k + m - 1) * (j + l + n - 1) - 2 * (k + std::min(j, l) - 1), true};
      }
    }
    throw unknown();
  }
  throw unknown();
}

long long closed_form_in(const CyclicWord& v, const CyclicWord& w) {
  const auto dv = block_decomposition(v);
  const auto dw = block_decomposition(w);
  const auto unknown = [&]() {
    return Error(ErrorCode::UnknownShape,
                 "(" + v.text() + ", " + w.text() + ") matches no closed-form pair");
  };
  if (dw.h != 1) throw unknown();
  const Letter r = dw.blocks[0].letter;
  const Letter S = dw.blocks[1].letter;
  const long long m = dw.blocks[0].exponent, n = dw.blocks[1].exponent;
  if (dv.h == 1) {
    // IN(r^i s^j, r^m S^n) = in + mj with s = S^{-1}
    if (dv.blocks[0].letter == r && dv.blocks[1].letter == inverse(S)) {
      return dv.blocks[0].exponent * n + m * dv.blocks[1].exponent;
    }
    if (dv.blocks[1].letter == r && dv.blocks[0].letter == inverse(S)) {
      return dv.blocks[1].exponent * n + m * dv.blocks[0].exponent;
    }
    throw unknown();
  }
  if (dv.h == 2) {
    // IN(r^i s^j r^k s^l, r^m S^n) = (i+k)n + m(j+l)
    long long sum_r = 0, sum_s = 0;
    for (const auto& blk : dv.blocks) {
      if (blk.letter == r) sum_r += blk.exponent;
      else if (blk.letter == inverse(S)) sum_s += blk.exponent;
      else throw unknown();
    }
    return sum_r * n + m * sum_s;
  }
  throw unknown();
}

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::General: return "general";
    case BoundKind::BlockPair: return "blockpair";
    case BoundKind::Length: return "length";
  }
  return "?";
}

BoundReport bound_report(const CyclicWord& w) {
  if (!is_primitive(w) && !is_pure_power(w)) {
    throw Error(ErrorCode::NonPrimitiveInput, "bound_report needs a primitive word or pure power");
  }
  const SiResult si = self_intersection(w, surface_order(Surface::Torus));
  const int L = static_cast<int>(w.length());
  const long long length_bound = max_si(L, Surface::Torus);
  if (is_pure_power(w)) {
    // SI(r^L) = L-1 exceeds the length bound for 2 <= L <= 6.
    const bool exceeds = si.value > length_bound;
    return {w, si.value, length_bound, exceeds ? 0 : length_bound - si.value, BoundKind::Length,
            exceeds};
  }
  const long long alpha = w.alpha(), beta = w.beta();
  const long long general = (alpha - 1) * (beta - 1);
  const int h = block_pairs(w);
  long long best = general;
  BoundKind kind = BoundKind::General;
  if (h >= 2 && general - h + 2 <= best) {
    best = general - h + 2;
    kind = BoundKind::BlockPair;
  }
  if (length_bound < best) {
    best = length_bound;
    kind = BoundKind::Length;
  }
  return {w, si.value, best, best - si.value, kind, false};
}

}  // namespace curvesi
