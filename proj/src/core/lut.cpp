#include "lut.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <thread>

#include "error.hpp"

namespace skincls {

namespace {

constexpr size_t kTableBytes = (1u << 24) / 8;
constexpr char kMagic[8] = {'S', 'K', 'L', 'U', 'T', '0', '0', '1'};

void fill_range(RuleKind rule, std::vector<uint8_t>& bits, size_t byte_begin,
                size_t byte_end) {
    for (size_t byte = byte_begin; byte < byte_end; ++byte) {
        uint8_t packed = 0;
        const uint32_t base = uint32_t(byte) * 8;
        for (uint32_t bit = 0; bit < 8; ++bit) {
            if (classify(rule, pixel_from_index(base + bit)) == SkinLabel::skin)
                packed |= uint8_t(1u << bit);
        }
        bits[byte] = packed;
    }
}

}  // namespace

RuleLut::RuleLut(RuleKind rule, std::vector<uint8_t> bits)
    : rule_(rule), bits_(std::move(bits)) {}

RuleLut RuleLut::build(RuleKind rule) {
    std::vector<uint8_t> bits(kTableBytes, 0);
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1) {
        fill_range(rule, bits, 0, kTableBytes);
    } else {
        // Workers own disjoint byte ranges, so the result is identical to the
        // sequential sweep regardless of scheduling.
        std::vector<std::thread> pool;
        const size_t chunk = (kTableBytes + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const size_t begin = std::min(kTableBytes, w * chunk);
            const size_t end = std::min(kTableBytes, begin + chunk);
            if (begin < end)
                pool.emplace_back(fill_range, rule, std::ref(bits), begin, end);
        }
        for (auto& t : pool) t.join();
    }
    return RuleLut(rule, std::move(bits));
}

RuleLut RuleLut::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open LUT file: " + path.string());
    char magic[8];
    uint8_t rule_id = 0;
    std::vector<uint8_t> bits(kTableBytes);
    in.read(magic, sizeof magic);
    in.read(reinterpret_cast<char*>(&rule_id), 1);
    in.read(reinterpret_cast<char*>(bits.data()), kTableBytes);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
        throw FormatError("not a SKLUT001 file: " + path.string());
    if (rule_id > uint8_t(RuleKind::rgb_ratio))
        throw FormatError("unknown rule id in LUT file: " + path.string());
    return RuleLut(RuleKind(rule_id), std::move(bits));
}

void RuleLut::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write LUT file: " + path.string());
    out.write(kMagic, sizeof kMagic);
    const uint8_t rule_id = uint8_t(rule_);
    out.write(reinterpret_cast<const char*>(&rule_id), 1);
    out.write(reinterpret_cast<const char*>(bits_.data()), std::streamsize(bits_.size()));
    if (!out) throw InputError("short write on LUT file: " + path.string());
}

uint64_t RuleLut::skin_count() const {
    uint64_t total = 0;
    for (uint8_t byte : bits_) total += std::popcount(byte);
    return total;
}

}  // namespace skincls
