// skincls command-line front end. Talks to the core exclusively through the
// C API in skincls.h. Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skincls.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

int fail_data(const std::string& context) {
    std::fprintf(stderr, "error: %s: %s\n", context.c_str(), skc_last_error());
    return kExitData;
}

int parse_rule(const std::string& name) {
    const int rule = skc_rule_from_name(name.c_str());
    if (rule < 0)
        std::fprintf(stderr, "error: unknown rule '%s' (--rule)\n", name.c_str());
    return rule;
}

skc_mask_mode parse_mask_mode(const std::string& mode) {
    return mode == "lenient" ? SKC_MASK_LENIENT : SKC_MASK_STRICT;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        const size_t end = s.find(sep, start);
        out.push_back(s.substr(start, end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

struct CliOptions {
    std::string rule;
    std::string input;
    std::string output;
    std::string dataset;
    std::string records;
    std::string rules_csv;
    std::string datasets_csv;
    std::string mask_mode = "strict";
    std::string format = "text";
    std::string feature = "rg-ratio";
    std::string class_filter = "all";
    uint64_t bins = 256;
    // Defaults depend on the feature: [-1,1] for rg-ratio, [0,2] for b-ratio.
    double lo = 0.0;
    double hi = 0.0;
    bool lo_set = false;
    bool hi_set = false;
    bool use_lut = false;
};

int run_classify(const CliOptions& opt) {
    const int rule = parse_rule(opt.rule);
    if (rule < 0) return kExitUsage;

    skc_image* image = nullptr;
    if (skc_image_load(opt.input.c_str(), &image) != SKC_OK)
        return fail_data(opt.input);
    std::unique_ptr<skc_image, decltype(&skc_image_free)> image_guard(
        image, skc_image_free);

    skc_lut* lut = nullptr;
    if (opt.use_lut && skc_lut_build(skc_rule(rule), &lut) != SKC_OK)
        return fail_data("building LUT");
    std::unique_ptr<skc_lut, decltype(&skc_lut_free)> lut_guard(lut,
                                                                skc_lut_free);

    skc_image* mask = nullptr;
    if (skc_render_mask(skc_rule(rule), image, lut, &mask) != SKC_OK)
        return fail_data("rendering mask");
    std::unique_ptr<skc_image, decltype(&skc_image_free)> mask_guard(
        mask, skc_image_free);

    if (skc_image_save_png(mask, opt.output.c_str()) != SKC_OK)
        return fail_data(opt.output);
    return kExitOk;
}

void print_eval(const std::string& rule, const std::string& dataset,
                const skc_eval_result& r, bool csv) {
    char tp[24], fp[24];
    skc_percent(r.i_pos, r.n_pos, tp, sizeof tp);
    skc_percent(r.i_neg, r.n_neg, fp, sizeof fp);
    if (csv) {
        std::printf("rule,dataset,tp_pct,fp_pct,n_pos,n_neg,i_pos,i_neg\n");
        std::printf("%s,%s,%s,%s,%llu,%llu,%llu,%llu\n", rule.c_str(),
                    dataset.c_str(), tp, fp, (unsigned long long)r.n_pos,
                    (unsigned long long)r.n_neg, (unsigned long long)r.i_pos,
                    (unsigned long long)r.i_neg);
    } else {
        std::printf("rule: %s\ndataset: %s\n", rule.c_str(), dataset.c_str());
        std::printf("TP: %s%% (%llu/%llu)\n", tp, (unsigned long long)r.i_pos,
                    (unsigned long long)r.n_pos);
        std::printf("FP: %s%% (%llu/%llu)\n", fp, (unsigned long long)r.i_neg,
                    (unsigned long long)r.n_neg);
    }
}

int run_evaluate(const CliOptions& opt) {
    const int rule = parse_rule(opt.rule);
    if (rule < 0) return kExitUsage;
    skc_eval_result result{};
    if (skc_evaluate_dataset(skc_rule(rule), opt.dataset.c_str(),
                             parse_mask_mode(opt.mask_mode), &result) != SKC_OK)
        return fail_data(opt.dataset);
    print_eval(opt.rule, opt.dataset, result, opt.format == "csv");
    return kExitOk;
}

int run_compare(const CliOptions& opt) {
    std::vector<skc_rule> rules;
    for (const std::string& name : split(opt.rules_csv, ',')) {
        const int rule = parse_rule(name);
        if (rule < 0) return kExitUsage;
        rules.push_back(skc_rule(rule));
    }
    std::vector<std::string> names, roots;
    for (const std::string& item : split(opt.datasets_csv, ',')) {
        const size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            std::fprintf(stderr,
                         "error: --datasets entries must be NAME=DIR, got '%s'\n",
                         item.c_str());
            return kExitUsage;
        }
        names.push_back(item.substr(0, eq));
        roots.push_back(item.substr(eq + 1));
    }
    std::vector<const char*> name_ptrs, root_ptrs;
    for (const std::string& s : names) name_ptrs.push_back(s.c_str());
    for (const std::string& s : roots) root_ptrs.push_back(s.c_str());

    char* report = nullptr;
    if (skc_compare(rules.data(), rules.size(), name_ptrs.data(),
                    root_ptrs.data(), roots.size(),
                    parse_mask_mode(opt.mask_mode),
                    opt.format == "csv" ? SKC_FORMAT_CSV : SKC_FORMAT_TEXT,
                    &report) != SKC_OK)
        return fail_data("compare");
    std::fputs(report, stdout);
    skc_string_free(report);
    return kExitOk;
}

int run_transform(const CliOptions& opt) {
    char* warnings = nullptr;
    skc_records* records = nullptr;
    if (skc_records_from_dataset(opt.dataset.c_str(),
                                 parse_mask_mode(opt.mask_mode), &warnings,
                                 &records) != SKC_OK)
        return fail_data(opt.dataset);
    if (warnings && warnings[0] != '\0')
        std::fprintf(stderr, "warning: %s\n", warnings);
    skc_string_free(warnings);
    std::unique_ptr<skc_records, decltype(&skc_records_free)> guard(
        records, skc_records_free);
    if (skc_records_save_csv(records, opt.output.c_str()) != SKC_OK)
        return fail_data(opt.output);
    std::printf("wrote %llu records to %s\n",
                (unsigned long long)skc_records_count(records),
                opt.output.c_str());
    return kExitOk;
}

int run_histogram(const CliOptions& opt) {
    skc_feature feature;
    if (opt.feature == "rg-ratio") {
        feature = SKC_FEATURE_RG_RATIO;
    } else if (opt.feature == "b-ratio") {
        feature = SKC_FEATURE_B_RATIO;
    } else {
        std::fprintf(stderr, "error: --feature must be rg-ratio or b-ratio\n");
        return kExitUsage;
    }
    skc_class_filter filter;
    if (opt.class_filter == "skin") {
        filter = SKC_CLASS_SKIN;
    } else if (opt.class_filter == "non-skin") {
        filter = SKC_CLASS_NON_SKIN;
    } else if (opt.class_filter == "all") {
        filter = SKC_CLASS_ALL;
    } else {
        std::fprintf(stderr, "error: --class must be skin, non-skin or all\n");
        return kExitUsage;
    }

    const double lo =
        opt.lo_set ? opt.lo : (feature == SKC_FEATURE_B_RATIO ? 0.0 : -1.0);
    const double hi =
        opt.hi_set ? opt.hi : (feature == SKC_FEATURE_B_RATIO ? 2.0 : 1.0);

    skc_records* records = nullptr;
    if (skc_records_load_csv(opt.records.c_str(), &records) != SKC_OK)
        return fail_data(opt.records);
    std::unique_ptr<skc_records, decltype(&skc_records_free)> records_guard(
        records, skc_records_free);

    skc_histogram* hist = nullptr;
    if (skc_histogram_build(records, feature, opt.bins, lo, hi, filter,
                            &hist) != SKC_OK)
        return fail_data("building histogram");
    std::unique_ptr<skc_histogram, decltype(&skc_histogram_free)> hist_guard(
        hist, skc_histogram_free);

    if (skc_histogram_save_csv(hist, opt.output.c_str()) != SKC_OK)
        return fail_data(opt.output);
    return kExitOk;
}

int run_ranges(const CliOptions& opt) {
    const int rule = parse_rule(opt.rule);
    if (rule < 0) return kExitUsage;
    skc_channel_ranges ranges{};
    if (skc_rule_channel_ranges(skc_rule(rule), &ranges) != SKC_OK)
        return fail_data("computing ranges");
    if (ranges.empty) {
        std::printf("no pixel classifies as skin\n");
    } else {
        std::printf("R:[%d,%d] G:[%d,%d] B:[%d,%d]\n", ranges.r_min,
                    ranges.r_max, ranges.g_min, ranges.g_max, ranges.b_min,
                    ranges.b_max);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pixel-based skin-colour classification toolkit"};
    app.require_subcommand(1);
    CliOptions opt;

    auto* classify = app.add_subcommand("classify", "Render a skin mask PNG");
    classify->add_option("--rule", opt.rule)->required();
    classify->add_option("--input", opt.input)->required();
    classify->add_option("--output", opt.output)->required();
    classify->add_flag("--lut", opt.use_lut, "Classify through a lookup table");

    auto* evaluate = app.add_subcommand("evaluate", "TP/FP rates on a dataset");
    evaluate->add_option("--rule", opt.rule)->required();
    evaluate->add_option("--dataset", opt.dataset)->required();
    evaluate->add_option("--mask-mode", opt.mask_mode)
        ->check(CLI::IsMember({"strict", "lenient"}));
    evaluate->add_option("--format", opt.format)
        ->check(CLI::IsMember({"text", "csv"}));

    auto* compare = app.add_subcommand("compare", "Rule-by-dataset report");
    compare->add_option("--rules", opt.rules_csv, "Comma-separated rule names")
        ->required();
    compare
        ->add_option("--datasets", opt.datasets_csv,
                     "Comma-separated NAME=DIR entries")
        ->required();
    compare->add_option("--mask-mode", opt.mask_mode)
        ->check(CLI::IsMember({"strict", "lenient"}));
    compare->add_option("--format", opt.format)
        ->check(CLI::IsMember({"text", "csv"}));

    auto* transform =
        app.add_subcommand("transform", "Flatten a dataset to records CSV");
    transform->add_option("--dataset", opt.dataset)->required();
    transform->add_option("--output", opt.output)->required();
    transform->add_option("--mask-mode", opt.mask_mode)
        ->check(CLI::IsMember({"strict", "lenient"}));

    auto* histogram =
        app.add_subcommand("histogram", "Ratio-feature histogram CSV");
    histogram->add_option("--records", opt.records)->required();
    histogram->add_option("--feature", opt.feature)
        ->check(CLI::IsMember({"rg-ratio", "b-ratio"}));
    histogram->add_option("--bins", opt.bins)->check(CLI::PositiveNumber);
    histogram->add_option("--lo", opt.lo)
        ->each([&opt](const std::string&) { opt.lo_set = true; });
    histogram->add_option("--hi", opt.hi)
        ->each([&opt](const std::string&) { opt.hi_set = true; });
    histogram->add_option("--class", opt.class_filter)
        ->check(CLI::IsMember({"skin", "non-skin", "all"}));
    histogram->add_option("--output", opt.output)->required();

    auto* ranges =
        app.add_subcommand("ranges", "Per-channel skin ranges of a rule");
    ranges->add_option("--rule", opt.rule)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (classify->parsed()) return run_classify(opt);
    if (evaluate->parsed()) return run_evaluate(opt);
    if (compare->parsed()) return run_compare(opt);
    if (transform->parsed()) return run_transform(opt);
    if (histogram->parsed()) return run_histogram(opt);
    if (ranges->parsed()) return run_ranges(opt);
    return kExitUsage;
}
