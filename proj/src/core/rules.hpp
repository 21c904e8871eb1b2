#ifndef SKINCLS_CORE_RULES_HPP
#define SKINCLS_CORE_RULES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace skincls {

struct RgbPixel {
    uint8_t r = 0;
    uint8_t g = 0;
    uint8_t b = 0;

    bool operator==(const RgbPixel&) const = default;
};

enum class SkinLabel : uint8_t { non_skin = 0, skin = 1 };

enum class RuleKind : uint8_t {
    kovac = 0,
    kovac_rewritten = 1,
    saleh = 2,
    swift = 3,
    rgb_ratio = 4,
};

inline constexpr std::array<RuleKind, 5> kAllRules = {
    RuleKind::kovac, RuleKind::kovac_rewritten, RuleKind::saleh,
    RuleKind::swift, RuleKind::rgb_ratio};

// Lowercase CLI/file names: "kovac", "kovac-rewritten", "saleh", "swift", "rgb-ratio".
std::string_view rule_name(RuleKind rule);
std::optional<RuleKind> rule_from_name(std::string_view name);

// Skin iff R>95, G>40, B>20, max-min>15, |R-G|>15, R>G, R>B.
SkinLabel classify_kovac(RgbPixel p);

// Same region stated via R-min(G,B)>15 and R-G>15; kept separate so the
// equivalence is testable over the whole domain.
SkinLabel classify_kovac_rewritten(RgbPixel p);

// Skin iff 20 < R-G < 80; B ignored.
SkinLabel classify_saleh(RgbPixel p);

// Exclusion list read disjunctively: not skin if B>R, G<B, G>R, 4B<R or B>200.
SkinLabel classify_swift(RgbPixel p);

// Skin iff 0 <= (R-G)/(R+G) <= 0.5 and B/(R+G) <= 0.5, evaluated exactly as
// G <= R <= 3G and 2B <= R+G. R+G == 0 is non-skin.
SkinLabel classify_rgb_ratio(RgbPixel p);

SkinLabel classify(RuleKind rule, RgbPixel p);

// Per-channel extremes over every pixel the rule accepts, by full 2^24 sweep.
struct ChannelRanges {
    bool empty = true;
    uint8_t r_min = 0, r_max = 0;
    uint8_t g_min = 0, g_max = 0;
    uint8_t b_min = 0, b_max = 0;
};

ChannelRanges channel_ranges(RuleKind rule);

inline constexpr uint32_t pixel_index(RgbPixel p) {
    return (uint32_t(p.r) << 16) | (uint32_t(p.g) << 8) | uint32_t(p.b);
}

inline constexpr RgbPixel pixel_from_index(uint32_t idx) {
    return RgbPixel{uint8_t(idx >> 16), uint8_t(idx >> 8), uint8_t(idx)};
}

}  // namespace skincls

#endif
