/* curvesi - self-intersection numbers of free homotopy classes of curves on
 * the punctured torus and the pair of pants, computed exactly from reduced
 * cyclic words over {a, b, A, B}.
 *
 * C API: opaque handles, integer status codes, malloc'd strings released with
 * csi_string_free. All functions are thread-safe; handles are immutable after
 * creation and may be shared across threads.
 */
#ifndef CURVESI_H
#define CURVESI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csi_status {
  CSI_OK = 0,
  CSI_ERR_EMPTY_WORD = 1,
  CSI_ERR_ILLEGAL_CHARACTER = 2,
  CSI_ERR_NOT_CYCLICALLY_REDUCED = 3,
  CSI_ERR_LENGTH_MISMATCH = 4,
  CSI_ERR_SAME_OCCURRENCE = 5,
  CSI_ERR_NON_PRIMITIVE = 6,
  CSI_ERR_CAP_EXCEEDED = 7,
  CSI_ERR_WRONG_ORIENTATION = 8,
  CSI_ERR_DEGENERATE_SPLIT = 9,
  CSI_ERR_NOT_OPPOSITE_CORNERS = 10,
  CSI_ERR_PURE_POWER = 11,
  CSI_ERR_UNVALIDATED_LENGTH = 12,
  CSI_ERR_UNKNOWN_SHAPE = 13,
  CSI_ERR_INVALID_ARGUMENT = 14,
  CSI_ERR_VERIFY_FAILED = 15,
  CSI_ERR_IO = 16,
  CSI_ERR_INTERNAL = 99
} csi_status;

typedef enum csi_surface { CSI_SURFACE_TORUS = 0, CSI_SURFACE_PANTS = 1 } csi_surface;

/* Opaque canonical cyclic word. */
typedef struct csi_word csi_word;

/* Message for the most recent failing call on this thread ("" if none). */
const char* csi_last_error(void);

/* Release a string returned by any csi_* function. */
void csi_string_free(char* s);

/* ---- words ---- */

/* Parse a cyclically reduced spelling; *out owns the canonical form. */
csi_status csi_word_parse(const char* text, csi_word** out);
void csi_word_free(csi_word* w);

/* Canonical spelling; caller frees with csi_string_free. */
csi_status csi_word_text(const csi_word* w, char** out);

int csi_word_length(const csi_word* w);
int csi_word_alpha(const csi_word* w);
int csi_word_beta(const csi_word* w);
int csi_word_block_pairs(const csi_word* w);
int csi_word_is_primitive(const csi_word* w);
int csi_word_is_pure_power(const csi_word* w);
/* Maximal k with w = root^k; *root (optional) receives the primitive root. */
int csi_word_power_exponent(const csi_word* w, csi_word** root);
csi_status csi_word_invert(const csi_word* w, csi_word** out);

/* ---- linking ---- */

/* Exact SI for primitive words and pure powers (*exact = 1); the (k-1) +
 * linked-pair upper bound otherwise (*exact = 0). */
csi_status csi_self_intersection(const csi_word* w, csi_surface surface, long long* value,
                                 int* exact);

/* Minimal intersection number of two primitive classes. */
csi_status csi_intersection_number(const csi_word* v, const csi_word* w, csi_surface surface,
                                   long long* value);

/* SI of a system of one or two primitive/pure-power components. */
csi_status csi_multiword_si(const csi_word* const* components, int n, csi_surface surface,
                            long long* value);

/* ---- surgery ---- */

/* JSON array [{"pos1":i,"pos2":j,"orientation":"same"|"reversed"}, ...]. */
csi_status csi_corner_pairs(const csi_word* w, char** json);

csi_status csi_surgery_reversed(const csi_word* w, int pos1, int pos2, csi_word** out);
csi_status csi_surgery_same(const csi_word* w, int pos1, int pos2, csi_word** out1,
                            csi_word** out2);
csi_status csi_surgery_merge(const csi_word* c1, int pos1, const csi_word* c2, int pos2,
                             csi_word** out);

/* Reduction to at most two block-pairs; JSON
 * {"steps":[{"rule","before","after"},...],"final":...,"guaranteed_gain":n}. */
csi_status csi_reduce(const csi_word* w, char** json_trace);

/* ---- extremal formulas ---- */

csi_status csi_max_si(int length, csi_surface surface, int force, long long* value);
csi_status csi_count_maximal(int length, long long* value);
csi_status csi_count_submaximal(int length, long long* value);
csi_status csi_min_length_for_si(long long k, int* length);

/* Newline-separated canonical spellings of the torus extremal words. */
csi_status csi_maximal_words(int length, char** lines);
csi_status csi_submaximal_words(int length, char** lines);

/* Exact SI plus closed-form upper bound; JSON
 * {"word","si","bound","slack","kind","pure_power_exception"}. */
csi_status csi_bound_report(const csi_word* w, char** json);

/* ---- census ---- */

/* Newline-separated canonical words of one length (primitive classes only
 * when primitive_only is nonzero), lexicographically ordered. */
csi_status csi_enumerate(int length, int primitive_only, char** lines);

/* SI histograms for lengths 1..max_length. format: 0 = CSV "length,si,count",
 * 1 = JSON {"surface","rows":[{"length","counts"}]}. threads <= 0 picks
 * CURVESI_THREADS or the hardware count. */
csi_status csi_table(int max_length, csi_surface surface, int format, int threads, char** out);

/* Histogram of one length in the same formats. */
csi_status csi_histogram(int length, csi_surface surface, int format, int threads, char** out);

/* Pair-of-pants extremes; JSON {"length","max_si","max_count","max_words",
 * "min_si","nonprimitive_bound_max"}. */
csi_status csi_pants_extremes(int length, int force, int threads, char** json);

/* ---- verification ---- */

/* Suites: appendix-oracle, surgery-invariants, table1, extremal, pants,
 * pants-extended, symmetry, growth, min-length, all. *report receives the
 * per-check lines; returns CSI_OK on pass, CSI_ERR_VERIFY_FAILED on failure. */
csi_status csi_verify_suite(const char* name, int threads, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CURVESI_H */
