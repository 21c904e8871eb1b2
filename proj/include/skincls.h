/* skincls — pixel-based skin-colour classification toolkit.
 *
 * C API over the C++ core. All handles are opaque; every function that can
 * fail returns an skc_status, with a human-readable message available from
 * skc_last_error() on the same thread. Handles are created by skc_*_build/
 * load functions and released with the matching skc_*_free.
 */
#ifndef SKINCLS_H
#define SKINCLS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SKC_API __declspec(dllexport)
#else
#define SKC_API __attribute__((visibility("default")))
#endif

typedef enum skc_status {
    SKC_OK = 0,
    SKC_ERR_INPUT = 1,            /* missing/unreadable/unwritable file */
    SKC_ERR_FORMAT = 2,           /* undecodable or malformed data */
    SKC_ERR_ANNOTATION = 3,       /* non-canonical mask pixel in strict mode */
    SKC_ERR_LAYOUT = 4,           /* dataset root missing images/ or masks/ */
    SKC_ERR_EMPTY_DATASET = 5,    /* no image/mask pairs */
    SKC_ERR_DEGENERATE_CLASS = 6, /* a rate is undefined (empty label class) */
    SKC_ERR_PARAM = 7,            /* bad argument value */
    SKC_ERR_INTERNAL = 8
} skc_status;

/* Rule identifiers; values match the rule-id byte of the SKLUT001 format. */
typedef enum skc_rule {
    SKC_RULE_KOVAC = 0,
    SKC_RULE_KOVAC_REWRITTEN = 1,
    SKC_RULE_SALEH = 2,
    SKC_RULE_SWIFT = 3,
    SKC_RULE_RGB_RATIO = 4
} skc_rule;

typedef enum skc_mask_mode {
    SKC_MASK_STRICT = 0,
    SKC_MASK_LENIENT = 1
} skc_mask_mode;

typedef enum skc_feature {
    SKC_FEATURE_RG_RATIO = 0, /* (R-G)/(R+G) */
    SKC_FEATURE_B_RATIO = 1   /* B/(R+G) */
} skc_feature;

typedef enum skc_class_filter {
    SKC_CLASS_SKIN = 0,
    SKC_CLASS_NON_SKIN = 1,
    SKC_CLASS_ALL = 2
} skc_class_filter;

typedef enum skc_report_format {
    SKC_FORMAT_TEXT = 0,
    SKC_FORMAT_CSV = 1
} skc_report_format;

/* Message describing the most recent failure on the calling thread. */
SKC_API const char* skc_last_error(void);

/* Frees strings returned through char** out-parameters. */
SKC_API void skc_string_free(char* s);

/* ---- rules ------------------------------------------------------------- */

/* Accepts "kovac", "kovac-rewritten", "saleh", "swift", "rgb-ratio";
 * returns -1 for anything else. */
SKC_API int skc_rule_from_name(const char* name);
SKC_API const char* skc_rule_name(skc_rule rule);

/* 1 = skin, 0 = non-skin, -1 = invalid rule. */
SKC_API int skc_classify(skc_rule rule, uint8_t r, uint8_t g, uint8_t b);

typedef struct skc_channel_ranges {
    int empty; /* 1 when the rule accepts no pixel at all */
    int r_min, r_max;
    int g_min, g_max;
    int b_min, b_max;
} skc_channel_ranges;

/* Exhaustive per-channel min/max over all skin-classified pixels. */
SKC_API skc_status skc_rule_channel_ranges(skc_rule rule,
                                           skc_channel_ranges* out);

/* ---- lookup table ------------------------------------------------------ */

typedef struct skc_lut skc_lut;

SKC_API skc_status skc_lut_build(skc_rule rule, skc_lut** out);
SKC_API skc_status skc_lut_load(const char* path, skc_lut** out);
SKC_API skc_status skc_lut_save(const skc_lut* lut, const char* path);
SKC_API int skc_lut_rule(const skc_lut* lut);
SKC_API int skc_lut_classify(const skc_lut* lut, uint8_t r, uint8_t g,
                             uint8_t b);
SKC_API uint64_t skc_lut_skin_count(const skc_lut* lut);
SKC_API void skc_lut_free(skc_lut* lut);

/* ---- images ------------------------------------------------------------ */

typedef struct skc_image skc_image;

SKC_API skc_status skc_image_load(const char* path, skc_image** out);
SKC_API int skc_image_width(const skc_image* image);
SKC_API int skc_image_height(const skc_image* image);
SKC_API skc_status skc_image_save_png(const skc_image* image, const char* path);
SKC_API void skc_image_free(skc_image* image);

/* Classifies every pixel; the result is a white/black mask image. Pass a
 * LUT built for the same rule to classify through it, or NULL for direct
 * evaluation — the two produce identical masks. */
SKC_API skc_status skc_render_mask(skc_rule rule, const skc_image* image,
                                   const skc_lut* lut_or_null, skc_image** out);

/* ---- labeled records --------------------------------------------------- */

typedef struct skc_records skc_records;

/* Flattens every image/mask pair under root (root/images/ + root/masks/,
 * matched by filename stem) into (R,G,B,label) records in stem order.
 * When warnings_out is non-NULL it receives a newline-separated list of
 * stems present on only one side (empty string when none); free it with
 * skc_string_free. */
SKC_API skc_status skc_records_from_dataset(const char* root,
                                            skc_mask_mode mode,
                                            char** warnings_out,
                                            skc_records** out);
SKC_API skc_status skc_records_load_csv(const char* path, skc_records** out);
SKC_API skc_status skc_records_save_csv(const skc_records* records,
                                        const char* path);
SKC_API uint64_t skc_records_count(const skc_records* records);
SKC_API void skc_records_free(skc_records* records);

/* ---- evaluation -------------------------------------------------------- */

typedef struct skc_eval_result {
    uint64_t n_pos; /* records labeled skin */
    uint64_t n_neg; /* records labeled non-skin */
    uint64_t i_pos; /* skin records detected as skin */
    uint64_t i_neg; /* non-skin records detected as skin */
} skc_eval_result;

SKC_API skc_status skc_evaluate_records(skc_rule rule,
                                        const skc_records* records,
                                        skc_eval_result* out);
SKC_API skc_status skc_evaluate_dataset(skc_rule rule, const char* root,
                                        skc_mask_mode mode,
                                        skc_eval_result* out);

/* Renders 100*num/den rounded half-up to two decimals ("88.39") into buf
 * (at least 24 bytes). Rates are kept as integer counts until this call. */
SKC_API skc_status skc_percent(uint64_t num, uint64_t den, char* buf,
                               size_t buf_size);

/* Full comparison grid: one row per rule, TP/FP percentage pairs per named
 * dataset plus an unweighted AVERAGE pair. A failed cell is reported and
 * excluded from that rule's average. */
SKC_API skc_status skc_compare(const skc_rule* rules, size_t n_rules,
                               const char* const* dataset_names,
                               const char* const* dataset_roots,
                               size_t n_datasets, skc_mask_mode mode,
                               skc_report_format format, char** report_out);

/* ---- feature histograms ------------------------------------------------ */

typedef struct skc_histogram skc_histogram;

SKC_API skc_status skc_histogram_build(const skc_records* records,
                                       skc_feature feature, uint64_t bins,
                                       double lo, double hi,
                                       skc_class_filter filter,
                                       skc_histogram** out);
SKC_API uint64_t skc_histogram_bins(const skc_histogram* hist);
SKC_API uint64_t skc_histogram_count(const skc_histogram* hist, uint64_t bin);
SKC_API uint64_t skc_histogram_undefined(const skc_histogram* hist);
SKC_API uint64_t skc_histogram_underflow(const skc_histogram* hist);
SKC_API uint64_t skc_histogram_overflow(const skc_histogram* hist);
SKC_API skc_status skc_histogram_save_csv(const skc_histogram* hist,
                                          const char* path);
SKC_API void skc_histogram_free(skc_histogram* hist);

typedef struct skc_threshold {
    double lo;
    double hi;
    double coverage; /* achieved fraction of in-range mass */
} skc_threshold;

SKC_API skc_status skc_histogram_suggest(const skc_histogram* hist,
                                         double coverage, skc_threshold* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SKINCLS_H */
