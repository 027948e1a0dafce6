#include "curvesi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "census.hpp"
#include "extremal.hpp"
#include "linking.hpp"
#include "surgery.hpp"
#include "verify.hpp"
#include "word.hpp"

using namespace curvesi;

struct csi_word {
  CyclicWord word;
};

namespace {

thread_local std::string g_last_error;

csi_status status_of(const Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case ErrorCode::EmptyWord: return CSI_ERR_EMPTY_WORD;
    case ErrorCode::IllegalCharacter: return CSI_ERR_ILLEGAL_CHARACTER;
    case ErrorCode::NotCyclicallyReduced: return CSI_ERR_NOT_CYCLICALLY_REDUCED;
    case ErrorCode::LengthMismatch: return CSI_ERR_LENGTH_MISMATCH;
    case ErrorCode::SameOccurrence: return CSI_ERR_SAME_OCCURRENCE;
    case ErrorCode::NonPrimitiveInput: return CSI_ERR_NON_PRIMITIVE;
    case ErrorCode::CapExceeded: return CSI_ERR_CAP_EXCEEDED;
    case ErrorCode::WrongOrientation: return CSI_ERR_WRONG_ORIENTATION;
    case ErrorCode::DegenerateSplit: return CSI_ERR_DEGENERATE_SPLIT;
    case ErrorCode::NotOppositeCorners: return CSI_ERR_NOT_OPPOSITE_CORNERS;
    case ErrorCode::PurePower: return CSI_ERR_PURE_POWER;
    case ErrorCode::UnvalidatedLength: return CSI_ERR_UNVALIDATED_LENGTH;
    case ErrorCode::UnknownShape: return CSI_ERR_UNKNOWN_SHAPE;
    case ErrorCode::InvalidArgument: return CSI_ERR_INVALID_ARGUMENT;
    case ErrorCode::VerifyFailed: return CSI_ERR_VERIFY_FAILED;
    case ErrorCode::IoError: return CSI_ERR_IO;
  }
  return CSI_ERR_INTERNAL;
}

template <typename Fn>
csi_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CSI_OK;
  } catch (const Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CSI_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const SurfaceOrder& order_of(csi_surface surface) {
  if (surface == CSI_SURFACE_PANTS) return validated_pants_order();
  return surface_order(Surface::Torus);
}

OppositeCornerPair pair_at(const CyclicWord& w, int pos1, int pos2) {
  for (const auto& pair : find_opposite_corner_pairs(w)) {
    if ((pair.site1.position == pos1 && pair.site2.position == pos2) ||
        (pair.site1.position == pos2 && pair.site2.position == pos1)) {
      if (pair.site1.position != pos1) {
        return {pair.site2, pair.site1, pair.orientation};
      }
      return pair;
    }
  }
  throw Error(ErrorCode::NotOppositeCorners,
              "positions " + std::to_string(pos1) + "," + std::to_string(pos2) + " of " +
                  w.text() + " are not opposite corners");
}

}  // namespace

extern "C" {

const char* csi_last_error(void) { return g_last_error.c_str(); }

void csi_string_free(char* s) { std::free(s); }

csi_status csi_word_parse(const char* text, csi_word** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "null argument");
    }
    *out = new csi_word{CyclicWord::parse(text)};
  });
}

void csi_word_free(csi_word* w) { delete w; }

csi_status csi_word_text(const csi_word* w, char** out) {
  return guarded([&] {
    if (w == nullptr || out == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(w->word.text());
  });
}

int csi_word_length(const csi_word* w) { return w ? static_cast<int>(w->word.length()) : 0; }
int csi_word_alpha(const csi_word* w) { return w ? w->word.alpha() : 0; }
int csi_word_beta(const csi_word* w) { return w ? w->word.beta() : 0; }
int csi_word_block_pairs(const csi_word* w) { return w ? block_pairs(w->word) : 0; }
int csi_word_is_primitive(const csi_word* w) { return w && is_primitive(w->word) ? 1 : 0; }
int csi_word_is_pure_power(const csi_word* w) { return w && is_pure_power(w->word) ? 1 : 0; }

int csi_word_power_exponent(const csi_word* w, csi_word** root) {
  if (w == nullptr) return 0;
  const auto pd = power_decomposition(w->word);
  if (root != nullptr) *root = new csi_word{pd.root};
  return pd.exponent;
}

csi_status csi_word_invert(const csi_word* w, csi_word** out) {
  return guarded([&] {
    if (w == nullptr || out == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = new csi_word{w->word.inverted()};
  });
}

csi_status csi_self_intersection(const csi_word* w, csi_surface surface, long long* value,
                                 int* exact) {
  return guarded([&] {
    if (w == nullptr || value == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    const SiResult r = self_intersection(w->word, order_of(surface));
    *value = r.value;
    if (exact != nullptr) *exact = r.exact ? 1 : 0;
  });
}

csi_status csi_intersection_number(const csi_word* v, const csi_word* w, csi_surface surface,
                                   long long* value) {
  return guarded([&] {
    if (v == nullptr || w == nullptr || value == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "null argument");
    }
    *value = intersection_number(v->word, w->word, order_of(surface));
  });
}

csi_status csi_multiword_si(const csi_word* const* components, int n, csi_surface surface,
                            long long* value) {
  return guarded([&] {
    if (components == nullptr || value == nullptr || n < 1) {
      throw Error(ErrorCode::InvalidArgument, "null argument");
    }
    MultiWord mw;
    for (int i = 0; i < n; ++i) {
      if (components[i] == nullptr) throw Error(ErrorCode::InvalidArgument, "null component");
      mw.components.push_back(components[i]->word);
    }
    *value = multiword_si(mw, order_of(surface)).value;
  });
}

csi_status csi_corner_pairs(const csi_word* w, char** json) {
  return guarded([&] {
    if (w == nullptr || json == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& pair : find_opposite_corner_pairs(w->word)) {
      j.push_back({{"pos1", pair.site1.position},
                   {"pos2", pair.site2.position},
                   {"orientation",
                    pair.orientation == PairOrientation::Same ? "same" : "reversed"}});
    }
    *json = dup_string(j.dump());
  });
}

csi_status csi_surgery_reversed(const csi_word* w, int pos1, int pos2, csi_word** out) {
  return guarded([&] {
    if (w == nullptr || out == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    const auto pair = pair_at(w->word, pos1, pos2);
    *out = new csi_word{surgery_reversed(w->word, pair)};
  });
}

csi_status csi_surgery_same(const csi_word* w, int pos1, int pos2, csi_word** out1,
                            csi_word** out2) {
  return guarded([&] {
    if (w == nullptr || out1 == nullptr || out2 == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "null argument");
    }
    const auto pair = pair_at(w->word, pos1, pos2);
    MultiWord mw = surgery_same(w->word, pair);
    *out1 = new csi_word{mw.components[0]};
    *out2 = new csi_word{mw.components[1]};
  });
}

csi_status csi_surgery_merge(const csi_word* c1, int pos1, const csi_word* c2, int pos2,
                             csi_word** out) {
  return guarded([&] {
    if (c1 == nullptr || c2 == nullptr || out == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "null argument");
    }
    MultiWord mw{{c1->word, c2->word}};
    *out = new csi_word{surgery_merge(mw, {pos1, CornerKind::Corner},
                                      {pos2, CornerKind::Corner})};
  });
}

csi_status csi_reduce(const csi_word* w, char** json_trace) {
  return guarded([&] {
    if (w == nullptr || json_trace == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "null argument");
    }
    *json_trace = dup_string(trace_to_json(reduce_to_two_blockpairs(w->word)));
  });
}

csi_status csi_max_si(int length, csi_surface surface, int force, long long* value) {
  return guarded([&] {
    if (value == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    *value = max_si(length, surface == CSI_SURFACE_PANTS ? Surface::Pants : Surface::Torus,
                    force != 0);
  });
}

csi_status csi_count_maximal(int length, long long* value) {
  return guarded([&] {
    if (value == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    *value = count_maximal(length);
  });
}

csi_status csi_count_submaximal(int length, long long* value) {
  return guarded([&] {
    if (value == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    *value = count_submaximal(length);
  });
}

csi_status csi_min_length_for_si(long long k, int* length) {
  return guarded([&] {
    if (length == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    *length = min_length_for_si(k);
  });
}

namespace {

csi_status word_lines(const std::vector<CyclicWord>& words, char** lines) {
  std::string out;
  for (const auto& w : words) {
    out += w.text();
    out += "\n";
  }
  *lines = dup_string(out);
  return CSI_OK;
}

}  // namespace

csi_status csi_maximal_words(int length, char** lines) {
  return guarded([&] {
    if (lines == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    word_lines(maximal_words(length), lines);
  });
}

csi_status csi_submaximal_words(int length, char** lines) {
  return guarded([&] {
    if (lines == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    word_lines(submaximal_words(length), lines);
  });
}

csi_status csi_bound_report(const csi_word* w, char** json) {
  return guarded([&] {
    if (w == nullptr || json == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    const BoundReport r = bound_report(w->word);
    nlohmann::ordered_json j{{"word", r.word.text()},
                             {"si", r.si},
                             {"bound", r.bound},
                             {"slack", r.slack},
                             {"kind", bound_kind_name(r.kind)},
                             {"pure_power_exception", r.pure_power_exception}};
    *json = dup_string(j.dump());
  });
}

csi_status csi_enumerate(int length, int primitive_only, char** lines) {
  return guarded([&] {
    if (lines == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    std::string out;
    enumerate_canonical(length, [&](const CyclicWord& w, bool primitive) {
      if (primitive_only != 0 && !primitive) return;
      out += w.text();
      out += "\n";
    });
    *lines = dup_string(out);
  });
}

csi_status csi_table(int max_length, csi_surface surface, int format, int threads, char** out) {
  return guarded([&] {
    if (out == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    const SurfaceOrder& order = order_of(surface);
    const auto rows = census_table(max_length, order, threads);
    *out = dup_string(format == 1 ? table_to_json(rows, order.name()) : table_to_csv(rows));
  });
}

csi_status csi_histogram(int length, csi_surface surface, int format, int threads, char** out) {
  return guarded([&] {
    if (out == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    const SurfaceOrder& order = order_of(surface);
    const std::vector<SiHistogram> rows{si_histogram(length, order, threads)};
    *out = dup_string(format == 1 ? table_to_json(rows, order.name()) : table_to_csv(rows));
  });
}

csi_status csi_pants_extremes(int length, int force, int threads, char** json) {
  return guarded([&] {
    if (json == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    const PantsExtremes ex = pants_extremes(length, force != 0, threads);
    nlohmann::ordered_json j{{"length", ex.length},
                             {"max_si", ex.max_si},
                             {"max_count", ex.max_count},
                             {"max_words", ex.max_words},
                             {"min_si", ex.min_si},
                             {"nonprimitive_bound_max", ex.nonprimitive_bound_max}};
    *json = dup_string(j.dump());
  });
}

csi_status csi_verify_suite(const char* name, int threads, char** report) {
  try {
    if (name == nullptr) throw Error(ErrorCode::InvalidArgument, "null suite name");
    const VerifyReport r = run_suite(name, threads);
    if (report != nullptr) {
      std::string text;
      for (const auto& line : r.lines) {
        text += line;
        text += "\n";
      }
      *report = dup_string(text);
    }
    g_last_error.clear();
    if (!r.passed) {
      g_last_error = "suite " + r.suite + " failed";
      return CSI_ERR_VERIFY_FAILED;
    }
    return CSI_OK;
  } catch (const Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CSI_ERR_INTERNAL;
  }
}

}  // extern "C"
