#ifndef SKINCLS_CORE_IMAGE_HPP
#define SKINCLS_CORE_IMAGE_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "rules.hpp"

namespace skincls {

// Row-major 8-bit RGB buffer, top-left origin.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<RgbPixel> pixels;

    RgbPixel at(int x, int y) const { return pixels[size_t(y) * width + x]; }
};

struct MaskImage {
    int width = 0;
    int height = 0;
    std::vector<SkinLabel> labels;
    // Pixels that were neither [255 255 255] nor [0 0 0]; only populated in
    // lenient mode (strict mode errors out instead).
    uint64_t non_canonical = 0;
};

enum class MaskMode { strict, lenient };

// Decodes PNG or JPEG to 8-bit RGB; alpha is dropped, anything that is not
// 8 bits per channel is a FormatError.
ImageBuffer load_image(const std::filesystem::path& path);

// [255 255 255] -> skin, [0 0 0] -> non-skin. Strict mode rejects any other
// pixel value (AnnotationError names the first offending coordinate); lenient
// mode takes a pixel as skin iff all channels > 127 and counts the offenders.
MaskImage load_mask(const std::filesystem::path& path, MaskMode mode);

void save_png(const ImageBuffer& image, const std::filesystem::path& path);

// Per-pixel classification of an image; white = skin, black = non-skin.
ImageBuffer render_mask(RuleKind rule, const ImageBuffer& image);

class RuleLut;
ImageBuffer render_mask(const RuleLut& lut, const ImageBuffer& image);

}  // namespace skincls

#endif
