#ifndef SKINCLS_CORE_DATASET_HPP
#define SKINCLS_CORE_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "image.hpp"
#include "rules.hpp"

namespace skincls {

// One (R,G,B,label) row; the unit of evaluation.
struct LabeledRecord {
    uint8_t r = 0;
    uint8_t g = 0;
    uint8_t b = 0;
    SkinLabel label = SkinLabel::non_skin;

    RgbPixel pixel() const { return RgbPixel{r, g, b}; }
    bool operator==(const LabeledRecord&) const = default;
};

struct DatasetPair {
    std::string stem;
    std::filesystem::path image_path;
    std::filesystem::path mask_path;
};

struct PairingResult {
    std::vector<DatasetPair> pairs;           // sorted by stem
    std::vector<std::string> unmatched;       // stems present on one side only
};

// Expects root/images/*.{png,jpg,jpeg} and root/masks/*.png, matched by stem.
PairingResult pair_dataset(const std::filesystem::path& root);

// One record per pixel, row-major; label taken from the mask.
std::vector<LabeledRecord> transform_records(const ImageBuffer& image,
                                             const MaskImage& mask);

// CSV with header "R,G,B,label", LF endings, no quoting.
void write_records_csv(const std::vector<LabeledRecord>& records,
                       const std::filesystem::path& path);
std::vector<LabeledRecord> read_records_csv(const std::filesystem::path& path);

}  // namespace skincls

#endif
