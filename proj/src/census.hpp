#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "extremal.hpp"
#include "linking.hpp"
#include "word.hpp"

namespace curvesi {

/// Distinct-class SI distribution for one length.
struct SiHistogram {
  int length;
  std::string surface;
  std::map<long long, long long> counts;  // SI value -> number of primitive classes
  long long total;
};

/// Visit every canonical cyclically reduced word of length L exactly once, in
/// lexicographic order. The callback receives the word and its primitivity.
void enumerate_canonical(int length, const std::function<void(const CyclicWord&, bool primitive)>& sink);

/// Canonical words of length L (primitive classes only when requested).
std::vector<CyclicWord> enumerate_words(int length, bool primitive_only);

/// Number of worker threads: explicit > 0 wins, else CURVESI_THREADS, else hardware.
int resolve_threads(int requested);

SiHistogram si_histogram(int length, const SurfaceOrder& order, int threads = 0);

struct WordSi {
  std::string word;
  long long si;
};

/// Canonical primitive words of length L with exact SI, lexicographically ordered.
std::vector<WordSi> census_with_si(int length, const SurfaceOrder& order, int threads = 0);

struct PantsExtremes {
  int length;
  long long max_si;          // over primitive classes
  long long max_count;       // odd L: primitive classes at max; even L: all classes
                             // at the overall (bound-valued) maximum
  std::vector<std::string> max_words;  // primitive classes attaining max_si
  long long min_si;          // over primitive classes
  long long nonprimitive_bound_max;    // largest Thm-3.4(2) value over proper powers
};

PantsExtremes pants_extremes(int length, bool force = false, int threads = 0);

/// The pants ring, validated on startup against the short odd lengths; falls
/// back to the other ring classes if the default fails. Throws VerifyFailed
/// when no candidate works.
const SurfaceOrder& validated_pants_order();

/// Table of SI histograms for lengths 1..max_length.
std::vector<SiHistogram> census_table(int max_length, const SurfaceOrder& order, int threads = 0);

std::string table_to_csv(const std::vector<SiHistogram>& rows);
std::string table_to_json(const std::vector<SiHistogram>& rows, const std::string& surface);

/// Parse the JSON table format back (round-trip check and tooling).
std::vector<SiHistogram> table_from_json(const std::string& text);

}  // namespace curvesi
