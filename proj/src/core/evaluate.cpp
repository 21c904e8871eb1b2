#include "evaluate.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace skincls {

namespace {

using int128 = __int128;

int128 gcd128(int128 a, int128 b) {
    while (b != 0) {
        const int128 t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

Ratio reduce_to_ratio(int128 num, int128 den) {
    const int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    constexpr int128 kMax = INT64_MAX;
    if (num > kMax || den > kMax) {
        // Out of exact range; scale down to a 15-digit approximation.
        const long double v = (long double)num / (long double)den;
        return Ratio{int64_t(v * 1e15L + 0.5L), int64_t(1e15)};
    }
    return Ratio{int64_t(num), int64_t(den)};
}

}  // namespace

Ratio Ratio::of(int64_t num, int64_t den) {
    if (den <= 0 || num < 0)
        throw ParameterError("ratio requires num >= 0 and den > 0");
    const int64_t g = std::gcd(num, den);
    return Ratio{num / g, den / g};
}

std::string Ratio::percent() const {
    // Half-up rounding of 100*num/den at two decimals, in integer arithmetic.
    const int128 centi = (int128(num) * 10000 * 2 + den) / (int128(den) * 2);
    std::ostringstream out;
    out << int64_t(centi / 100) << '.' << std::setw(2) << std::setfill('0')
        << int64_t(centi % 100);
    return out.str();
}

Ratio mean(const std::vector<Ratio>& values) {
    if (values.empty()) throw ParameterError("mean of empty list");
    int128 num = 0, den = 1;
    for (const Ratio& v : values) {
        // num/den += v.num/v.den
        num = num * v.den + int128(v.num) * den;
        den *= v.den;
        const int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    den *= int128(values.size());
    return reduce_to_ratio(num, den);
}

Ratio EvalResult::tp_rate() const {
    if (n_pos == 0)
        throw DegenerateClassError("no skin-labeled records; TP rate undefined");
    return Ratio::of(int64_t(i_pos), int64_t(n_pos));
}

Ratio EvalResult::fp_rate() const {
    if (n_neg == 0)
        throw DegenerateClassError("no non-skin-labeled records; FP rate undefined");
    return Ratio::of(int64_t(i_neg), int64_t(n_neg));
}

EvalResult evaluate_records(RuleKind rule,
                            const std::vector<LabeledRecord>& records) {
    if (records.empty()) throw InputError("no records to evaluate");
    EvalResult result;
    for (const LabeledRecord& rec : records) {
        const bool is_skin_label = rec.label == SkinLabel::skin;
        if (is_skin_label)
            ++result.n_pos;
        else
            ++result.n_neg;
        if (classify(rule, rec.pixel()) == SkinLabel::skin) {
            if (is_skin_label)
                ++result.i_pos;
            else
                ++result.i_neg;
        }
    }
    return result;
}

EvalResult evaluate_dataset(RuleKind rule, const std::filesystem::path& root,
                            MaskMode mode) {
    const PairingResult pairing = pair_dataset(root);
    EvalResult total;
    for (const DatasetPair& pair : pairing.pairs) {
        const ImageBuffer image = load_image(pair.image_path);
        const MaskImage mask = load_mask(pair.mask_path, mode);
        const EvalResult part =
            evaluate_records(rule, transform_records(image, mask));
        total.n_pos += part.n_pos;
        total.n_neg += part.n_neg;
        total.i_pos += part.i_pos;
        total.i_neg += part.i_neg;
    }
    return total;
}

std::optional<Ratio> ReportTable::average_tp(size_t rule_index) const {
    std::vector<Ratio> rates;
    for (const ReportCell& cell : cells[rule_index])
        if (cell.result && cell.result->n_pos > 0)
            rates.push_back(cell.result->tp_rate());
    if (rates.empty()) return std::nullopt;
    return mean(rates);
}

std::optional<Ratio> ReportTable::average_fp(size_t rule_index) const {
    std::vector<Ratio> rates;
    for (const ReportCell& cell : cells[rule_index])
        if (cell.result && cell.result->n_neg > 0)
            rates.push_back(cell.result->fp_rate());
    if (rates.empty()) return std::nullopt;
    return mean(rates);
}

namespace {

std::string cell_pct(const ReportCell& cell, bool tp) {
    if (!cell.result) return "--";
    const EvalResult& r = *cell.result;
    if (tp) return r.n_pos > 0 ? r.tp_rate().percent() : "--";
    return r.n_neg > 0 ? r.fp_rate().percent() : "--";
}

std::string opt_pct(const std::optional<Ratio>& r) {
    return r ? r->percent() : "--";
}

}  // namespace

std::string ReportTable::render_text() const {
    constexpr int kRuleWidth = 16;
    constexpr int kColWidth = 9;
    std::ostringstream out;
    out << std::left << std::setw(kRuleWidth) << "Rule" << std::right;
    for (const std::string& name : dataset_names)
        out << std::setw(kColWidth) << (name + " TP") << std::setw(kColWidth)
            << (name + " FP");
    out << std::setw(kColWidth) << "AVG TP" << std::setw(kColWidth) << "AVG FP"
        << '\n';
    for (size_t ri = 0; ri < rules.size(); ++ri) {
        out << std::left << std::setw(kRuleWidth) << rule_name(rules[ri])
            << std::right;
        for (size_t di = 0; di < dataset_names.size(); ++di) {
            out << std::setw(kColWidth) << cell_pct(cells[ri][di], true)
                << std::setw(kColWidth) << cell_pct(cells[ri][di], false);
        }
        out << std::setw(kColWidth) << opt_pct(average_tp(ri))
            << std::setw(kColWidth) << opt_pct(average_fp(ri)) << '\n';
    }
    for (size_t ri = 0; ri < rules.size(); ++ri) {
        for (size_t di = 0; di < dataset_names.size(); ++di) {
            if (!cells[ri][di].result)
                out << "# warning: " << rule_name(rules[ri]) << '/'
                    << dataset_names[di]
                    << " failed and was excluded from the average: "
                    << cells[ri][di].error << '\n';
        }
    }
    return out.str();
}

std::string ReportTable::render_csv() const {
    std::ostringstream out;
    out << "rule,dataset,tp_pct,fp_pct,n_pos,n_neg,i_pos,i_neg\n";
    for (size_t ri = 0; ri < rules.size(); ++ri) {
        uint64_t sum_n_pos = 0, sum_n_neg = 0, sum_i_pos = 0, sum_i_neg = 0;
        for (size_t di = 0; di < dataset_names.size(); ++di) {
            const ReportCell& cell = cells[ri][di];
            out << rule_name(rules[ri]) << ',' << dataset_names[di] << ','
                << cell_pct(cell, true) << ',' << cell_pct(cell, false) << ',';
            if (cell.result) {
                const EvalResult& r = *cell.result;
                out << r.n_pos << ',' << r.n_neg << ',' << r.i_pos << ','
                    << r.i_neg << '\n';
                sum_n_pos += r.n_pos;
                sum_n_neg += r.n_neg;
                sum_i_pos += r.i_pos;
                sum_i_neg += r.i_neg;
            } else {
                out << ",,,\n";
            }
        }
        out << rule_name(rules[ri]) << ",AVERAGE," << opt_pct(average_tp(ri))
            << ',' << opt_pct(average_fp(ri)) << ',' << sum_n_pos << ','
            << sum_n_neg << ',' << sum_i_pos << ',' << sum_i_neg << '\n';
    }
    return out.str();
}

ReportTable compare(
    const std::vector<RuleKind>& rules,
    const std::vector<std::pair<std::string, std::filesystem::path>>& datasets,
    MaskMode mode) {
    if (rules.empty()) throw ParameterError("compare requires at least one rule");
    if (datasets.empty())
        throw ParameterError("compare requires at least one dataset");

    ReportTable table;
    table.rules = rules;
    for (const auto& [name, root] : datasets) table.dataset_names.push_back(name);

    // Records are loaded once per dataset and reused across rules.
    table.cells.assign(rules.size(), std::vector<ReportCell>(datasets.size()));
    for (size_t di = 0; di < datasets.size(); ++di) {
        std::vector<LabeledRecord> records;
        std::string load_error;
        try {
            const PairingResult pairing = pair_dataset(datasets[di].second);
            for (const DatasetPair& pair : pairing.pairs) {
                const ImageBuffer image = load_image(pair.image_path);
                const MaskImage mask = load_mask(pair.mask_path, mode);
                auto part = transform_records(image, mask);
                records.insert(records.end(), part.begin(), part.end());
            }
        } catch (const std::exception& e) {
            load_error = e.what();
        }
        for (size_t ri = 0; ri < rules.size(); ++ri) {
            ReportCell& cell = table.cells[ri][di];
            if (!load_error.empty()) {
                cell.error = load_error;
                continue;
            }
            try {
                cell.result = evaluate_records(rules[ri], records);
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
        }
    }
    return table;
}

}  // namespace skincls
