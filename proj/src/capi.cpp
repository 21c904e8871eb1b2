#include "skincls.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/dataset.hpp"
#include "core/error.hpp"
#include "core/evaluate.hpp"
#include "core/features.hpp"
#include "core/image.hpp"
#include "core/lut.hpp"
#include "core/rules.hpp"

using namespace skincls;

struct skc_lut {
    RuleLut lut;
};

struct skc_image {
    ImageBuffer image;
};

struct skc_records {
    std::vector<LabeledRecord> records;
};

struct skc_histogram {
    FeatureHistogram hist;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Runs fn, translating the core's exception taxonomy into status codes.
template <typename Fn>
skc_status wrap(Fn&& fn) {
    try {
        fn();
        return SKC_OK;
    } catch (const InputError& e) {
        set_error(e.what());
        return SKC_ERR_INPUT;
    } catch (const FormatError& e) {
        set_error(e.what());
        return SKC_ERR_FORMAT;
    } catch (const AnnotationError& e) {
        set_error(e.what());
        return SKC_ERR_ANNOTATION;
    } catch (const LayoutError& e) {
        set_error(e.what());
        return SKC_ERR_LAYOUT;
    } catch (const EmptyDatasetError& e) {
        set_error(e.what());
        return SKC_ERR_EMPTY_DATASET;
    } catch (const DegenerateClassError& e) {
        set_error(e.what());
        return SKC_ERR_DEGENERATE_CLASS;
    } catch (const ParameterError& e) {
        set_error(e.what());
        return SKC_ERR_PARAM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SKC_ERR_INTERNAL;
    }
}

bool valid_rule(int rule) {
    return rule >= SKC_RULE_KOVAC && rule <= SKC_RULE_RGB_RATIO;
}

skc_status require_rule(int rule) {
    if (!valid_rule(rule)) {
        set_error("invalid rule id " + std::to_string(rule));
        return SKC_ERR_PARAM;
    }
    return SKC_OK;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* skc_last_error(void) { return g_last_error.c_str(); }

void skc_string_free(char* s) { delete[] s; }

int skc_rule_from_name(const char* name) {
    if (!name) return -1;
    const auto rule = rule_from_name(name);
    return rule ? int(*rule) : -1;
}

const char* skc_rule_name(skc_rule rule) {
    if (!valid_rule(rule)) return nullptr;
    return rule_name(RuleKind(rule)).data();
}

int skc_classify(skc_rule rule, uint8_t r, uint8_t g, uint8_t b) {
    if (!valid_rule(rule)) return -1;
    return classify(RuleKind(rule), RgbPixel{r, g, b}) == SkinLabel::skin ? 1 : 0;
}

skc_status skc_rule_channel_ranges(skc_rule rule, skc_channel_ranges* out) {
    if (skc_status st = require_rule(rule); st != SKC_OK) return st;
    return wrap([&] {
        const ChannelRanges cr = channel_ranges(RuleKind(rule));
        out->empty = cr.empty ? 1 : 0;
        out->r_min = cr.r_min;
        out->r_max = cr.r_max;
        out->g_min = cr.g_min;
        out->g_max = cr.g_max;
        out->b_min = cr.b_min;
        out->b_max = cr.b_max;
    });
}

skc_status skc_lut_build(skc_rule rule, skc_lut** out) {
    if (skc_status st = require_rule(rule); st != SKC_OK) return st;
    return wrap([&] { *out = new skc_lut{RuleLut::build(RuleKind(rule))}; });
}

skc_status skc_lut_load(const char* path, skc_lut** out) {
    return wrap([&] { *out = new skc_lut{RuleLut::load(path)}; });
}

skc_status skc_lut_save(const skc_lut* lut, const char* path) {
    return wrap([&] { lut->lut.save(path); });
}

int skc_lut_rule(const skc_lut* lut) { return int(lut->lut.rule()); }

int skc_lut_classify(const skc_lut* lut, uint8_t r, uint8_t g, uint8_t b) {
    return lut->lut.classify(RgbPixel{r, g, b}) == SkinLabel::skin ? 1 : 0;
}

uint64_t skc_lut_skin_count(const skc_lut* lut) { return lut->lut.skin_count(); }

void skc_lut_free(skc_lut* lut) { delete lut; }

skc_status skc_image_load(const char* path, skc_image** out) {
    return wrap([&] { *out = new skc_image{load_image(path)}; });
}

int skc_image_width(const skc_image* image) { return image->image.width; }

int skc_image_height(const skc_image* image) { return image->image.height; }

skc_status skc_image_save_png(const skc_image* image, const char* path) {
    return wrap([&] { save_png(image->image, path); });
}

void skc_image_free(skc_image* image) { delete image; }

skc_status skc_render_mask(skc_rule rule, const skc_image* image,
                           const skc_lut* lut_or_null, skc_image** out) {
    if (skc_status st = require_rule(rule); st != SKC_OK) return st;
    if (lut_or_null && lut_or_null->lut.rule() != RuleKind(rule)) {
        set_error("LUT rule does not match requested rule");
        return SKC_ERR_PARAM;
    }
    return wrap([&] {
        *out = new skc_image{lut_or_null
                                 ? render_mask(lut_or_null->lut, image->image)
                                 : render_mask(RuleKind(rule), image->image)};
    });
}

skc_status skc_records_from_dataset(const char* root, skc_mask_mode mode,
                                    char** warnings_out, skc_records** out) {
    return wrap([&] {
        const PairingResult pairing = pair_dataset(root);
        const MaskMode mask_mode =
            mode == SKC_MASK_LENIENT ? MaskMode::lenient : MaskMode::strict;
        auto handle = std::make_unique<skc_records>();
        for (const DatasetPair& pair : pairing.pairs) {
            const ImageBuffer image = load_image(pair.image_path);
            const MaskImage mask = load_mask(pair.mask_path, mask_mode);
            auto part = transform_records(image, mask);
            handle->records.insert(handle->records.end(), part.begin(),
                                   part.end());
        }
        if (warnings_out) {
            std::string joined;
            for (const std::string& stem : pairing.unmatched) {
                if (!joined.empty()) joined += '\n';
                joined += "unmatched stem: " + stem;
            }
            *warnings_out = dup_string(joined);
        }
        *out = handle.release();
    });
}

skc_status skc_records_load_csv(const char* path, skc_records** out) {
    return wrap([&] { *out = new skc_records{read_records_csv(path)}; });
}

skc_status skc_records_save_csv(const skc_records* records, const char* path) {
    return wrap([&] { write_records_csv(records->records, path); });
}

uint64_t skc_records_count(const skc_records* records) {
    return records->records.size();
}

void skc_records_free(skc_records* records) { delete records; }

skc_status skc_evaluate_records(skc_rule rule, const skc_records* records,
                                skc_eval_result* out) {
    if (skc_status st = require_rule(rule); st != SKC_OK) return st;
    return wrap([&] {
        const EvalResult r = evaluate_records(RuleKind(rule), records->records);
        *out = {r.n_pos, r.n_neg, r.i_pos, r.i_neg};
        // Surface the degenerate-class condition eagerly; counts stay valid.
        if (r.n_pos == 0 || r.n_neg == 0)
            throw DegenerateClassError(
                r.n_pos == 0 ? "no skin-labeled records; TP rate undefined"
                             : "no non-skin-labeled records; FP rate undefined");
    });
}

skc_status skc_evaluate_dataset(skc_rule rule, const char* root,
                                skc_mask_mode mode, skc_eval_result* out) {
    if (skc_status st = require_rule(rule); st != SKC_OK) return st;
    return wrap([&] {
        const EvalResult r = evaluate_dataset(
            RuleKind(rule), root,
            mode == SKC_MASK_LENIENT ? MaskMode::lenient : MaskMode::strict);
        *out = {r.n_pos, r.n_neg, r.i_pos, r.i_neg};
        if (r.n_pos == 0 || r.n_neg == 0)
            throw DegenerateClassError(
                r.n_pos == 0 ? "no skin-labeled records; TP rate undefined"
                             : "no non-skin-labeled records; FP rate undefined");
    });
}

skc_status skc_percent(uint64_t num, uint64_t den, char* buf, size_t buf_size) {
    return wrap([&] {
        if (den == 0) throw DegenerateClassError("percentage of empty class");
        const std::string s = Ratio::of(int64_t(num), int64_t(den)).percent();
        if (s.size() + 1 > buf_size)
            throw ParameterError("percent buffer too small");
        std::memcpy(buf, s.c_str(), s.size() + 1);
    });
}

skc_status skc_compare(const skc_rule* rules, size_t n_rules,
                       const char* const* dataset_names,
                       const char* const* dataset_roots, size_t n_datasets,
                       skc_mask_mode mode, skc_report_format format,
                       char** report_out) {
    for (size_t i = 0; i < n_rules; ++i)
        if (skc_status st = require_rule(rules[i]); st != SKC_OK) return st;
    return wrap([&] {
        std::vector<RuleKind> rule_list;
        for (size_t i = 0; i < n_rules; ++i)
            rule_list.push_back(RuleKind(rules[i]));
        std::vector<std::pair<std::string, std::filesystem::path>> datasets;
        for (size_t i = 0; i < n_datasets; ++i)
            datasets.emplace_back(dataset_names[i], dataset_roots[i]);
        const ReportTable table = compare(
            rule_list, datasets,
            mode == SKC_MASK_LENIENT ? MaskMode::lenient : MaskMode::strict);
        *report_out = dup_string(format == SKC_FORMAT_CSV ? table.render_csv()
                                                          : table.render_text());
    });
}

skc_status skc_histogram_build(const skc_records* records, skc_feature feature,
                               uint64_t bins, double lo, double hi,
                               skc_class_filter filter, skc_histogram** out) {
    if (feature != SKC_FEATURE_RG_RATIO && feature != SKC_FEATURE_B_RATIO) {
        set_error("invalid feature id");
        return SKC_ERR_PARAM;
    }
    return wrap([&] {
        ClassFilter cf = ClassFilter::all;
        if (filter == SKC_CLASS_SKIN) cf = ClassFilter::skin;
        if (filter == SKC_CLASS_NON_SKIN) cf = ClassFilter::non_skin;
        *out = new skc_histogram{build_histogram(
            records->records,
            feature == SKC_FEATURE_B_RATIO ? FeatureKind::b_ratio
                                           : FeatureKind::rg_ratio,
            size_t(bins), lo, hi, cf)};
    });
}

uint64_t skc_histogram_bins(const skc_histogram* hist) {
    return hist->hist.counts.size();
}

uint64_t skc_histogram_count(const skc_histogram* hist, uint64_t bin) {
    return bin < hist->hist.counts.size() ? hist->hist.counts[bin] : 0;
}

uint64_t skc_histogram_undefined(const skc_histogram* hist) {
    return hist->hist.undefined_count;
}

uint64_t skc_histogram_underflow(const skc_histogram* hist) {
    return hist->hist.underflow;
}

uint64_t skc_histogram_overflow(const skc_histogram* hist) {
    return hist->hist.overflow;
}

skc_status skc_histogram_save_csv(const skc_histogram* hist, const char* path) {
    return wrap([&] { write_histogram_csv(hist->hist, path); });
}

void skc_histogram_free(skc_histogram* hist) { delete hist; }

skc_status skc_histogram_suggest(const skc_histogram* hist, double coverage,
                                 skc_threshold* out) {
    return wrap([&] {
        const ThresholdSuggestion s = suggest_thresholds(hist->hist, coverage);
        out->lo = s.lo;
        out->hi = s.hi;
        out->coverage = s.coverage;
    });
}

}  // extern "C"
