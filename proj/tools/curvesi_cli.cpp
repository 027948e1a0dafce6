// curvesi command-line frontend. Talks to the engine exclusively through the
// C API in curvesi.h. Exit codes: 0 success, 1 verification failure,
// 2 usage or input errors.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvesi.h"

namespace {

struct WordHandle {
  csi_word* w = nullptr;
  ~WordHandle() { csi_word_free(w); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { csi_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

[[noreturn]] void fail(csi_status status) {
  std::fprintf(stderr, "error: %s\n", csi_last_error());
  std::exit(status == CSI_ERR_VERIFY_FAILED ? 1 : 2);
}

void require(csi_status status) {
  if (status != CSI_OK) fail(status);
}

csi_word* parse_word(const std::string& text) {
  csi_word* w = nullptr;
  require(csi_word_parse(text.c_str(), &w));
  return w;
}

struct Options {
  csi_surface surface = CSI_SURFACE_TORUS;
  std::string format = "plain";
  int threads = 0;
  bool force = false;
};

int run_si(const Options& opt, const std::string& text) {
  WordHandle w{parse_word(text)};
  long long value = 0;
  int exact = 0;
  require(csi_self_intersection(w.w, opt.surface, &value, &exact));
  // An exact value is known for squared one-block-pair words with a unit
  // exponent even though the generic result is only an upper bound.
  long long pinned = -1;
  if (!exact) {
    WordHandle root;
    const int k = csi_word_power_exponent(w.w, &root.w);
    if (k == 2 && csi_word_block_pairs(root.w) == 1 &&
        (csi_word_alpha(root.w) == 1 || csi_word_beta(root.w) == 1)) {
      pinned = 1;
    }
  }
  if (opt.format == "json") {
    StringHandle t;
    require(csi_word_text(w.w, &t.s));
    std::string out = "{\"word\":\"" + t.str() + "\",\"value\":" + std::to_string(value) +
                      ",\"exact\":" + (exact ? "true" : "false");
    if (pinned >= 0) out += ",\"exact_note\":" + std::to_string(pinned);
    out += "}";
    std::printf("%s\n", out.c_str());
  } else {
    if (exact) {
      std::printf("%lld\n", value);
    } else if (pinned >= 0) {
      std::printf("≤ %lld (bound; nonprimitive); =%lld exactly\n", value, pinned);
    } else {
      std::printf("≤ %lld (bound; nonprimitive)\n", value);
    }
  }
  return 0;
}

int run_in(const Options& opt, const std::string& t1, const std::string& t2) {
  WordHandle v{parse_word(t1)}, w{parse_word(t2)};
  long long value = 0;
  require(csi_intersection_number(v.w, w.w, opt.surface, &value));
  std::printf("%lld\n", value);
  return 0;
}

int run_surgery(const Options& opt, const std::string& text, const std::string& pair_arg,
                bool list_pairs) {
  WordHandle w{parse_word(text)};
  StringHandle pairs;
  require(csi_corner_pairs(w.w, &pairs.s));
  if (list_pairs) {
    std::printf("%s\n", pairs.s);
    return 0;
  }
  int pos1 = -1, pos2 = -1;
  std::string orientation;
  if (!pair_arg.empty()) {
    if (std::sscanf(pair_arg.c_str(), "%d,%d", &pos1, &pos2) != 2) {
      std::fprintf(stderr, "error: --pair expects i,j\n");
      return 2;
    }
    // orientation comes from the engine below
  } else {
    // least eligible pair
    if (std::sscanf(pairs.s, "[{\"pos1\":%d,\"pos2\":%d", &pos1, &pos2) != 2) {
      std::fprintf(stderr, "error: %s has no opposite corner pair\n", text.c_str());
      return 2;
    }
  }
  WordHandle out1, out2;
  csi_status status = csi_surgery_reversed(w.w, pos1, pos2, &out1.w);
  if (status == CSI_ERR_WRONG_ORIENTATION) {
    status = csi_surgery_same(w.w, pos1, pos2, &out1.w, &out2.w);
  }
  require(status);
  StringHandle t1, t2;
  require(csi_word_text(out1.w, &t1.s));
  if (out2.w != nullptr) require(csi_word_text(out2.w, &t2.s));
  if (opt.format == "json") {
    std::string out = "{\"input\":\"" + text + "\",\"pair\":[" + std::to_string(pos1) + "," +
                      std::to_string(pos2) + "],\"result\":[\"" + t1.str() + "\"";
    if (out2.w != nullptr) out += ",\"" + t2.str() + "\"";
    out += "]}";
    std::printf("%s\n", out.c_str());
  } else {
    std::printf("%s\n", t1.s);
    if (out2.w != nullptr) std::printf("%s\n", t2.s);
  }
  return 0;
}

int run_reduce(const Options& opt, const std::string& text) {
  WordHandle w{parse_word(text)};
  StringHandle trace;
  require(csi_reduce(w.w, &trace.s));
  if (opt.format == "json") {
    std::printf("%s\n", trace.s);
    return 0;
  }
  // plain: one line per step, parsed from the JSON payload
  std::string json = trace.str();
  std::size_t at = 0;
  auto field = [&](const char* key) -> std::string {
    const std::string tag = std::string("\"") + key + "\":\"";
    const std::size_t begin = json.find(tag, at);
    if (begin == std::string::npos) return "";
    const std::size_t from = begin + tag.size();
    const std::size_t end = json.find('"', from);
    at = end;
    return json.substr(from, end - from);
  };
  while (true) {
    const std::string rule = field("rule");
    if (rule.empty()) break;
    const std::string before = field("before");
    const std::string after = field("after");
    std::printf("%s: %s -> %s\n", rule.c_str(), before.c_str(), after.c_str());
  }
  at = 0;
  std::printf("final: %s\n", field("final").c_str());
  const std::size_t gain = json.find("\"guaranteed_gain\":");
  std::printf("guaranteed_gain: %s\n",
              json.substr(gain + 18, json.find('}', gain) - gain - 18).c_str());
  return 0;
}

int run_enumerate(const Options& opt, int length, bool histogram, bool primitive) {
  if (histogram) {
    StringHandle out;
    require(csi_histogram(length, opt.surface, opt.format == "json" ? 1 : 0, opt.threads,
                          &out.s));
    std::printf("%s", out.s);
    if (opt.format == "json") std::printf("\n");
    return 0;
  }
  StringHandle lines;
  require(csi_enumerate(length, primitive ? 1 : 0, &lines.s));
  std::printf("%s", lines.s);
  return 0;
}

int run_table(const Options& opt, int max_length) {
  StringHandle out;
  require(csi_table(max_length, opt.surface, opt.format == "json" ? 1 : 0, opt.threads, &out.s));
  std::printf("%s", out.s);
  if (opt.format == "json") std::printf("\n");
  return 0;
}

int run_verify(const Options& opt, const std::string& suite) {
  StringHandle report;
  const csi_status status = csi_verify_suite(suite.c_str(), opt.threads, &report.s);
  if (report.s != nullptr) std::printf("%s", report.s);
  if (status == CSI_OK) return 0;
  if (status == CSI_ERR_VERIFY_FAILED) return 1;
  fail(status);
}

int run_bound(const Options& opt, const std::string& text) {
  (void)opt;
  WordHandle w{parse_word(text)};
  StringHandle json;
  require(csi_bound_report(w.w, &json.s));
  std::printf("%s\n", json.s);
  return 0;
}

int run_pants_extremes(const Options& opt, int length) {
  StringHandle json;
  require(csi_pants_extremes(length, opt.force ? 1 : 0, opt.threads, &json.s));
  std::printf("%s\n", json.s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact self-intersection numbers of curves on the punctured torus"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--surface", opt.surface, "torus or pants")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, csi_surface>{{"torus", CSI_SURFACE_TORUS},
                                             {"pants", CSI_SURFACE_PANTS}}));
  app.add_option("--format", opt.format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--threads", opt.threads,
                 "worker threads (default: CURVESI_THREADS or hardware)");
  app.add_flag("--force", opt.force, "allow pants lengths beyond the validated range");

  std::string word_text, word2_text, pair_arg, suite = "all";
  int length = 1;
  long long si_target = 1;
  bool histogram = false, primitive = false, list_pairs = false;

  auto* si_cmd = app.add_subcommand("si", "self-intersection number of a word");
  si_cmd->add_option("word", word_text)->required();

  auto* in_cmd = app.add_subcommand("in", "intersection number of two primitive words");
  in_cmd->add_option("word1", word_text)->required();
  in_cmd->add_option("word2", word2_text)->required();

  auto* surgery_cmd = app.add_subcommand("surgery", "cross-corner surgery at an opposite pair");
  surgery_cmd->add_option("word", word_text)->required();
  surgery_cmd->add_option("--pair", pair_arg, "corner positions i,j (default: least pair)");
  surgery_cmd->add_flag("--list", list_pairs, "list the opposite corner pairs as JSON");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce to at most two block-pairs");
  reduce_cmd->add_option("word", word_text)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "canonical words of one length");
  enum_cmd->add_option("--length", length, "word length")->required();
  enum_cmd->add_flag("--histogram", histogram, "print the SI histogram instead of words");
  enum_cmd->add_flag("--primitive", primitive, "primitive classes only");

  auto* table_cmd = app.add_subcommand("table", "SI census table for lengths 1..max");
  table_cmd->add_option("--max", length, "largest length")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite,
                         "appendix-oracle, surgery-invariants, table1, extremal, pants, "
                         "pants-extended, symmetry, growth, min-length or all");

  auto* bound_cmd = app.add_subcommand("bound", "exact SI with the tightest upper bound");
  bound_cmd->add_option("word", word_text)->required();

  auto* maximal_cmd = app.add_subcommand("maximal", "torus words of maximal SI for a length");
  maximal_cmd->add_option("--length", length)->required();

  auto* submax_cmd = app.add_subcommand("submaximal", "torus words one below the maximal SI");
  submax_cmd->add_option("--length", length)->required();

  auto* maxsi_cmd = app.add_subcommand("max-si", "maximal SI over primitive classes");
  maxsi_cmd->add_option("--length", length)->required();

  auto* minlen_cmd = app.add_subcommand("min-length", "least length reaching a given SI");
  minlen_cmd->add_option("--si", si_target)->required();

  auto* pants_cmd = app.add_subcommand("pants-extremes", "pair-of-pants extremes for a length");
  pants_cmd->add_option("--length", length)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (si_cmd->parsed()) return run_si(opt, word_text);
    if (in_cmd->parsed()) return run_in(opt, word_text, word2_text);
    if (surgery_cmd->parsed()) return run_surgery(opt, word_text, pair_arg, list_pairs);
    if (reduce_cmd->parsed()) return run_reduce(opt, word_text);
    if (enum_cmd->parsed()) return run_enumerate(opt, length, histogram, primitive);
    if (table_cmd->parsed()) return run_table(opt, length);
    if (verify_cmd->parsed()) return run_verify(opt, suite);
    if (bound_cmd->parsed()) return run_bound(opt, word_text);
    if (maximal_cmd->parsed()) {
      StringHandle lines;
      require(csi_maximal_words(length, &lines.s));
      std::printf("%s", lines.s);
      return 0;
    }
    if (submax_cmd->parsed()) {
      StringHandle lines;
      require(csi_submaximal_words(length, &lines.s));
      std::printf("%s", lines.s);
      return 0;
    }
    if (maxsi_cmd->parsed()) {
      long long value = 0;
      require(csi_max_si(length, opt.surface, opt.force ? 1 : 0, &value));
      std::printf("%lld\n", value);
      return 0;
    }
    if (minlen_cmd->parsed()) {
      int min_length = 0;
      require(csi_min_length_for_si(si_target, &min_length));
      std::printf("%d\n", min_length);
      return 0;
    }
    if (pants_cmd->parsed()) return run_pants_extremes(opt, length);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
