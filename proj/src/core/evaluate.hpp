#ifndef SKINCLS_CORE_EVALUATE_HPP
#define SKINCLS_CORE_EVALUATE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "rules.hpp"

namespace skincls {

// Exact non-negative fraction; rates stay rational until rendering so that
// averaging never compounds rounding.
struct Ratio {
    int64_t num = 0;
    int64_t den = 1;

    static Ratio of(int64_t num, int64_t den);
    double to_double() const { return double(num) / double(den); }

    // Percentage rounded half-up to two decimals, e.g. "88.39".
    std::string percent() const;
};

// Unweighted arithmetic mean, kept exact.
Ratio mean(const std::vector<Ratio>& values);

// Confusion counts per the TP/FP measurement loop: a record the rule calls
// skin increments i_pos when its label is 1, i_neg otherwise.
struct EvalResult {
    uint64_t n_pos = 0;  // records labeled skin
    uint64_t n_neg = 0;  // records labeled non-skin
    uint64_t i_pos = 0;  // skin records detected as skin
    uint64_t i_neg = 0;  // non-skin records detected as skin

    Ratio tp_rate() const;  // throws DegenerateClassError when n_pos == 0
    Ratio fp_rate() const;  // throws DegenerateClassError when n_neg == 0
};

EvalResult evaluate_records(RuleKind rule,
                            const std::vector<LabeledRecord>& records);

EvalResult evaluate_dataset(RuleKind rule, const std::filesystem::path& root,
                            MaskMode mode);

struct ReportCell {
    std::optional<EvalResult> result;  // nullopt when the cell failed
    std::string error;                 // failure reason, when any
};

struct ReportTable {
    std::vector<RuleKind> rules;
    std::vector<std::string> dataset_names;
    // cells[rule_index][dataset_index]
    std::vector<std::vector<ReportCell>> cells;

    // Per-rule unweighted means over succeeded cells; nullopt when none did.
    std::optional<Ratio> average_tp(size_t rule_index) const;
    std::optional<Ratio> average_fp(size_t rule_index) const;

    std::string render_text() const;
    std::string render_csv() const;
};

ReportTable compare(const std::vector<RuleKind>& rules,
                    const std::vector<std::pair<std::string, std::filesystem::path>>& datasets,
                    MaskMode mode);

}  // namespace skincls

#endif
