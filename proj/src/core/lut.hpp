#ifndef SKINCLS_CORE_LUT_HPP
#define SKINCLS_CORE_LUT_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "rules.hpp"

namespace skincls {

// One bit per 24-bit colour, index R*65536 + G*256 + B, bits packed
// little-endian within each byte. Immutable after construction; safe for
// shared concurrent reads.
class RuleLut {
public:
    static RuleLut build(RuleKind rule);

    // File format: magic "SKLUT001", one rule-id byte, then the 2 MiB bit table.
    static RuleLut load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    RuleKind rule() const { return rule_; }

    SkinLabel classify(RgbPixel p) const {
        const uint32_t idx = pixel_index(p);
        const uint8_t byte = bits_[idx >> 3];
        return (byte >> (idx & 7)) & 1 ? SkinLabel::skin : SkinLabel::non_skin;
    }

    uint64_t skin_count() const;

private:
    RuleLut(RuleKind rule, std::vector<uint8_t> bits);

    RuleKind rule_;
    std::vector<uint8_t> bits_;  // 2^24 / 8 bytes
};

}  // namespace skincls

#endif
