#include "dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include "error.hpp"

namespace skincls {

namespace fs = std::filesystem;

namespace {

bool has_extension(const fs::path& p, std::initializer_list<const char*> exts) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return std::any_of(exts.begin(), exts.end(),
                       [&ext](const char* e) { return ext == e; });
}

std::map<std::string, fs::path> index_by_stem(
    const fs::path& dir, std::initializer_list<const char*> exts) {
    std::map<std::string, fs::path> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && has_extension(entry.path(), exts))
            out[entry.path().stem().string()] = entry.path();
    }
    return out;
}

}  // namespace

PairingResult pair_dataset(const fs::path& root) {
    const fs::path images_dir = root / "images";
    const fs::path masks_dir = root / "masks";
    if (!fs::is_directory(images_dir))
        throw LayoutError("missing images/ directory under " + root.string());
    if (!fs::is_directory(masks_dir))
        throw LayoutError("missing masks/ directory under " + root.string());

    const auto images = index_by_stem(images_dir, {".png", ".jpg", ".jpeg"});
    const auto masks = index_by_stem(masks_dir, {".png"});

    PairingResult result;
    for (const auto& [stem, image_path] : images) {
        auto it = masks.find(stem);
        if (it != masks.end())
            result.pairs.push_back({stem, image_path, it->second});
        else
            result.unmatched.push_back(stem);
    }
    for (const auto& [stem, mask_path] : masks) {
        if (!images.count(stem)) result.unmatched.push_back(stem);
    }
    std::sort(result.unmatched.begin(), result.unmatched.end());

    if (result.pairs.empty())
        throw EmptyDatasetError("no image/mask pairs under " + root.string());
    return result;  // pairs already stem-sorted via the map
}

std::vector<LabeledRecord> transform_records(const ImageBuffer& image,
                                             const MaskImage& mask) {
    if (image.width != mask.width || image.height != mask.height)
        throw FormatError("image/mask dimension mismatch: " +
                          std::to_string(image.width) + "x" +
                          std::to_string(image.height) + " vs " +
                          std::to_string(mask.width) + "x" +
                          std::to_string(mask.height));
    std::vector<LabeledRecord> records;
    records.reserve(image.pixels.size());
    for (size_t i = 0; i < image.pixels.size(); ++i) {
        const RgbPixel p = image.pixels[i];
        records.push_back({p.r, p.g, p.b, mask.labels[i]});
    }
    return records;
}

void write_records_csv(const std::vector<LabeledRecord>& records,
                       const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write CSV: " + path.string());
    out << "R,G,B,label\n";
    for (const LabeledRecord& rec : records) {
        out << int(rec.r) << ',' << int(rec.g) << ',' << int(rec.b) << ','
            << (rec.label == SkinLabel::skin ? 1 : 0) << '\n';
    }
    if (!out) throw InputError("short write on CSV: " + path.string());
}

namespace {

int parse_field(std::string_view field, int max, const fs::path& path,
                size_t line_no) {
    int value = -1;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || value < 0 ||
        value > max)
        throw FormatError("bad field '" + std::string(field) + "' at line " +
                          std::to_string(line_no) + " of " + path.string());
    return value;
}

}  // namespace

std::vector<LabeledRecord> read_records_csv(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open CSV: " + path.string());

    std::vector<LabeledRecord> records;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != "R,G,B,label")
                throw FormatError("bad header at line 1 of " + path.string());
            continue;
        }
        if (line.empty()) continue;

        std::string_view rest(line);
        std::array<std::string_view, 4> fields;
        for (size_t i = 0; i < 4; ++i) {
            const size_t comma = rest.find(',');
            if ((i < 3) != (comma != std::string_view::npos))
                throw FormatError("expected 4 fields at line " +
                                  std::to_string(line_no) + " of " + path.string());
            fields[i] = rest.substr(0, comma);
            if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
        }
        LabeledRecord rec;
        rec.r = uint8_t(parse_field(fields[0], 255, path, line_no));
        rec.g = uint8_t(parse_field(fields[1], 255, path, line_no));
        rec.b = uint8_t(parse_field(fields[2], 255, path, line_no));
        rec.label = parse_field(fields[3], 1, path, line_no) ? SkinLabel::skin
                                                             : SkinLabel::non_skin;
        records.push_back(rec);
    }
    return records;
}

}  // namespace skincls
