#include "features.hpp"

#include <cmath>
#include <fstream>

#include "error.hpp"

namespace skincls {

std::optional<FeaturePair> compute_features(RgbPixel p) {
    const int sum = int(p.r) + int(p.g);
    if (sum == 0) return std::nullopt;
    return FeaturePair{double(int(p.r) - int(p.g)) / sum, double(p.b) / sum};
}

FeatureHistogram build_histogram(const std::vector<LabeledRecord>& records,
                                 FeatureKind feature, size_t bins, double lo,
                                 double hi, ClassFilter filter) {
    if (bins == 0) throw ParameterError("histogram needs at least one bin");
    if (!(lo < hi)) throw ParameterError("histogram range requires lo < hi");

    FeatureHistogram hist;
    hist.feature = feature;
    hist.lo = lo;
    hist.hi = hi;
    hist.counts.assign(bins, 0);

    const double width = (hi - lo) / double(bins);
    for (const LabeledRecord& rec : records) {
        if (filter == ClassFilter::skin && rec.label != SkinLabel::skin) continue;
        if (filter == ClassFilter::non_skin && rec.label != SkinLabel::non_skin)
            continue;
        const auto features = compute_features(rec.pixel());
        if (!features) {
            ++hist.undefined_count;
            continue;
        }
        const double v = feature == FeatureKind::rg_ratio ? features->rg_ratio
                                                          : features->b_ratio;
        if (v < lo) {
            ++hist.underflow;
        } else if (v == hi) {
            ++hist.counts.back();
        } else if (v > hi) {
            ++hist.overflow;
        } else {
            const size_t bin =
                std::min(bins - 1, size_t(std::floor((v - lo) / width)));
            ++hist.counts[bin];
        }
    }
    return hist;
}

void write_histogram_csv(const FeatureHistogram& hist,
                         const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write histogram CSV: " + path.string());
    out << "bin_lo,bin_hi,count\n";
    const double width = hist.bin_width();
    for (size_t i = 0; i < hist.counts.size(); ++i) {
        out << hist.lo + width * double(i) << ','
            << hist.lo + width * double(i + 1) << ',' << hist.counts[i] << '\n';
    }
    out << "# undefined=" << hist.undefined_count << '\n';
    out << "# underflow=" << hist.underflow << '\n';
    out << "# overflow=" << hist.overflow << '\n';
    if (!out) throw InputError("short write on histogram CSV: " + path.string());
}

ThresholdSuggestion suggest_thresholds(const FeatureHistogram& hist,
                                       double coverage) {
    if (!(coverage > 0.0 && coverage <= 1.0))
        throw ParameterError("coverage must be in (0, 1]");
    uint64_t total = 0;
    for (uint64_t c : hist.counts) total += c;
    if (total == 0) throw ParameterError("histogram has no in-range mass");

    const size_t bins = hist.counts.size();
    // Prefix sums so each candidate interval is O(1).
    std::vector<uint64_t> prefix(bins + 1, 0);
    for (size_t i = 0; i < bins; ++i) prefix[i + 1] = prefix[i] + hist.counts[i];

    for (size_t span = 1; span <= bins; ++span) {
        for (size_t start = 0; start + span <= bins; ++start) {
            const uint64_t mass = prefix[start + span] - prefix[start];
            if (double(mass) >= coverage * double(total)) {
                const double width = hist.bin_width();
                return ThresholdSuggestion{hist.feature,
                                           hist.lo + width * double(start),
                                           hist.lo + width * double(start + span),
                                           double(mass) / double(total)};
            }
        }
    }
    // coverage <= 1 makes the full span always sufficient.
    return ThresholdSuggestion{hist.feature, hist.lo, hist.hi, 1.0};
}

}  // namespace skincls
