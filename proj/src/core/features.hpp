#ifndef SKINCLS_CORE_FEATURES_HPP
#define SKINCLS_CORE_FEATURES_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "dataset.hpp"
#include "rules.hpp"

namespace skincls {

enum class FeatureKind : uint8_t {
    rg_ratio = 0,  // (R-G)/(R+G)
    b_ratio = 1,   // B/(R+G)
};

struct FeaturePair {
    double rg_ratio;
    double b_ratio;
};

// Both ratio features; nullopt when R+G == 0.
std::optional<FeaturePair> compute_features(RgbPixel p);

enum class ClassFilter : uint8_t { skin, non_skin, all };

struct FeatureHistogram {
    FeatureKind feature = FeatureKind::rg_ratio;
    double lo = 0.0;
    double hi = 1.0;
    std::vector<uint64_t> counts;
    uint64_t undefined_count = 0;  // records with R+G == 0
    uint64_t underflow = 0;        // values < lo
    uint64_t overflow = 0;         // values >= hi (hi itself goes to the last bin)

    double bin_width() const { return (hi - lo) / double(counts.size()); }
};

// Uniform bins over [lo, hi); a value exactly equal to hi lands in the last
// bin. Records failing the class filter are skipped entirely.
FeatureHistogram build_histogram(const std::vector<LabeledRecord>& records,
                                 FeatureKind feature, size_t bins, double lo,
                                 double hi, ClassFilter filter);

void write_histogram_csv(const FeatureHistogram& hist,
                         const std::filesystem::path& path);

struct ThresholdSuggestion {
    FeatureKind feature;
    double lo;
    double hi;
    double coverage;  // fraction of in-range mass inside [lo, hi)
};

// Narrowest contiguous bin interval holding at least the requested fraction
// of the in-range mass; ties go to the interval with the smaller lo.
ThresholdSuggestion suggest_thresholds(const FeatureHistogram& hist,
                                       double coverage);

}  // namespace skincls

#endif
