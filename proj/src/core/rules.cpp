#include "rules.hpp"

#include <algorithm>

namespace skincls {

std::string_view rule_name(RuleKind rule) {
    switch (rule) {
        case RuleKind::kovac: return "kovac";
        case RuleKind::kovac_rewritten: return "kovac-rewritten";
        case RuleKind::saleh: return "saleh";
        case RuleKind::swift: return "swift";
        case RuleKind::rgb_ratio: return "rgb-ratio";
    }
    return "?";
}

std::optional<RuleKind> rule_from_name(std::string_view name) {
    for (RuleKind rule : kAllRules) {
        if (name == rule_name(rule)) return rule;
    }
    return std::nullopt;
}

SkinLabel classify_kovac(RgbPixel p) {
    const int r = p.r, g = p.g, b = p.b;
    const bool skin = r > 95 && g > 40 && b > 20 &&
                      std::max({r, g, b}) - std::min({r, g, b}) > 15 &&
                      std::abs(r - g) > 15 &&
                      r > g && r > b;
    return skin ? SkinLabel::skin : SkinLabel::non_skin;
}

SkinLabel classify_kovac_rewritten(RgbPixel p) {
    const int r = p.r, g = p.g, b = p.b;
    const bool skin = r > 95 && g > 40 && b > 20 &&
                      r > g && r > b &&
                      r - std::min(g, b) > 15 &&
                      r - g > 15;
    return skin ? SkinLabel::skin : SkinLabel::non_skin;
}

SkinLabel classify_saleh(RgbPixel p) {
    const int diff = int(p.r) - int(p.g);
    return (diff > 20 && diff < 80) ? SkinLabel::skin : SkinLabel::non_skin;
}

SkinLabel classify_swift(RgbPixel p) {
    const int r = p.r, g = p.g, b = p.b;
    // 4*b >= r keeps the quarter-R bound exact without integer division.
    const bool skin = b <= r && g >= b && g <= r && 4 * b >= r && b <= 200;
    return skin ? SkinLabel::skin : SkinLabel::non_skin;
}

SkinLabel classify_rgb_ratio(RgbPixel p) {
    const int r = p.r, g = p.g, b = p.b;
    if (r + g == 0) return SkinLabel::non_skin;
    const bool skin = g <= r && r <= 3 * g && 2 * b <= r + g;
    return skin ? SkinLabel::skin : SkinLabel::non_skin;
}

SkinLabel classify(RuleKind rule, RgbPixel p) {
    switch (rule) {
        case RuleKind::kovac: return classify_kovac(p);
        case RuleKind::kovac_rewritten: return classify_kovac_rewritten(p);
        case RuleKind::saleh: return classify_saleh(p);
        case RuleKind::swift: return classify_swift(p);
        case RuleKind::rgb_ratio: return classify_rgb_ratio(p);
    }
    return SkinLabel::non_skin;
}

ChannelRanges channel_ranges(RuleKind rule) {
    ChannelRanges out;
    for (uint32_t idx = 0; idx < (1u << 24); ++idx) {
        const RgbPixel p = pixel_from_index(idx);
        if (classify(rule, p) != SkinLabel::skin) continue;
        if (out.empty) {
            out.empty = false;
            out.r_min = out.r_max = p.r;
            out.g_min = out.g_max = p.g;
            out.b_min = out.b_max = p.b;
        } else {
            out.r_min = std::min(out.r_min, p.r);
            out.r_max = std::max(out.r_max, p.r);
            out.g_min = std::min(out.g_min, p.g);
            out.g_max = std::max(out.g_max, p.g);
            out.b_min = std::min(out.b_min, p.b);
            out.b_max = std::max(out.b_max, p.b);
        }
    }
    return out;
}

}  // namespace skincls
