#include "image.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "error.hpp"
#include "lut.hpp"

namespace skincls {

namespace {

cv::Mat read_unchanged(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw InputError("no such file: " + path.string());
    cv::Mat mat = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
    if (mat.empty())
        throw FormatError("cannot decode image: " + path.string());
    if (mat.depth() != CV_8U)
        throw FormatError("not 8 bits per channel: " + path.string());
    if (mat.rows < 1 || mat.cols < 1)
        throw FormatError("empty image: " + path.string());
    return mat;
}

// Normalizes gray/BGRA/BGR input to 3-channel BGR.
cv::Mat to_bgr(const cv::Mat& mat, const std::filesystem::path& path) {
    cv::Mat bgr;
    switch (mat.channels()) {
        case 1: cv::cvtColor(mat, bgr, cv::COLOR_GRAY2BGR); break;
        case 3: bgr = mat; break;
        case 4: cv::cvtColor(mat, bgr, cv::COLOR_BGRA2BGR); break;
        default:
            throw FormatError("unsupported channel count: " + path.string());
    }
    return bgr;
}

}  // namespace

ImageBuffer load_image(const std::filesystem::path& path) {
    const cv::Mat bgr = to_bgr(read_unchanged(path), path);
    ImageBuffer out;
    out.width = bgr.cols;
    out.height = bgr.rows;
    out.pixels.reserve(size_t(bgr.cols) * bgr.rows);
    for (int y = 0; y < bgr.rows; ++y) {
        const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
        for (int x = 0; x < bgr.cols; ++x)
            out.pixels.push_back(RgbPixel{row[x][2], row[x][1], row[x][0]});
    }
    return out;
}

MaskImage load_mask(const std::filesystem::path& path, MaskMode mode) {
    const cv::Mat bgr = to_bgr(read_unchanged(path), path);
    MaskImage out;
    out.width = bgr.cols;
    out.height = bgr.rows;
    out.labels.reserve(size_t(bgr.cols) * bgr.rows);
    for (int y = 0; y < bgr.rows; ++y) {
        const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
        for (int x = 0; x < bgr.cols; ++x) {
            const cv::Vec3b px = row[x];
            const bool white = px[0] == 255 && px[1] == 255 && px[2] == 255;
            const bool black = px[0] == 0 && px[1] == 0 && px[2] == 0;
            if (white) {
                out.labels.push_back(SkinLabel::skin);
            } else if (black) {
                out.labels.push_back(SkinLabel::non_skin);
            } else if (mode == MaskMode::strict) {
                throw AnnotationError("non-canonical mask pixel at (" +
                                      std::to_string(x) + "," + std::to_string(y) +
                                      ") in " + path.string());
            } else {
                ++out.non_canonical;
                const bool skin = px[0] > 127 && px[1] > 127 && px[2] > 127;
                out.labels.push_back(skin ? SkinLabel::skin : SkinLabel::non_skin);
            }
        }
    }
    return out;
}

void save_png(const ImageBuffer& image, const std::filesystem::path& path) {
    cv::Mat bgr(image.height, image.width, CV_8UC3);
    for (int y = 0; y < image.height; ++y) {
        cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
        for (int x = 0; x < image.width; ++x) {
            const RgbPixel p = image.at(x, y);
            row[x] = cv::Vec3b(p.b, p.g, p.r);
        }
    }
    if (!cv::imwrite(path.string(), bgr))
        throw InputError("cannot write PNG: " + path.string());
}

namespace {

template <typename Classifier>
ImageBuffer render_with(Classifier&& classify_px, const ImageBuffer& image) {
    ImageBuffer out;
    out.width = image.width;
    out.height = image.height;
    out.pixels.reserve(image.pixels.size());
    for (RgbPixel p : image.pixels) {
        const bool skin = classify_px(p) == SkinLabel::skin;
        const uint8_t v = skin ? 255 : 0;
        out.pixels.push_back(RgbPixel{v, v, v});
    }
    return out;
}

}  // namespace

ImageBuffer render_mask(RuleKind rule, const ImageBuffer& image) {
    return render_with([rule](RgbPixel p) { return classify(rule, p); }, image);
}

ImageBuffer render_mask(const RuleLut& lut, const ImageBuffer& image) {
    return render_with([&lut](RgbPixel p) { return lut.classify(p); }, image);
}

}  // namespace skincls
