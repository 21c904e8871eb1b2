#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "core/error.hpp"
#include "core/evaluate.hpp"
#include "core/image.hpp"

using namespace skincls;
namespace fs = std::filesystem;

namespace {

LabeledRecord rec(int r, int g, int b, int label) {
    return {uint8_t(r), uint8_t(g), uint8_t(b),
            label ? SkinLabel::skin : SkinLabel::non_skin};
}

// 4 skin-labeled records of which rgb-ratio detects 3, and 4 non-skin-labeled
// of which it detects 1.
std::vector<LabeledRecord> confusion_fixture() {
    return {
        rec(150, 100, 50, 1),  // detected
        rec(200, 150, 100, 1), // detected
        rec(120, 90, 40, 1),   // detected
        rec(0, 0, 255, 1),     // missed (R+G = 0)
        rec(150, 100, 50, 0),  // false positive
        rec(100, 150, 50, 0),
        rec(0, 0, 7, 0),
        rec(10, 200, 10, 0),
    };
}

}  // namespace

TEST_CASE("ratio percent renders half-up at two decimals") {
    CHECK(Ratio::of(9046, 10000).percent() == "90.46");
    CHECK(Ratio::of(3, 4).percent() == "75.00");
    CHECK(Ratio::of(1, 3).percent() == "33.33");
    CHECK(Ratio::of(2, 3).percent() == "66.67");
    CHECK(Ratio::of(1, 1).percent() == "100.00");
    CHECK(Ratio::of(0, 5).percent() == "0.00");
    CHECK(Ratio::of(1, 800).percent() == "0.13");   // 0.125% rounds up
    CHECK(Ratio::of(1, 1600).percent() == "0.06");  // 0.0625% rounds up
}

TEST_CASE("eq 9 confusion fixture") {
    const EvalResult result =
        evaluate_records(RuleKind::rgb_ratio, confusion_fixture());
    CHECK(result.n_pos == 4);
    CHECK(result.n_neg == 4);
    CHECK(result.i_pos == 3);
    CHECK(result.i_neg == 1);
    CHECK(result.tp_rate().to_double() == 0.75);
    CHECK(result.fp_rate().to_double() == 0.25);
}

TEST_CASE("perfect classifier and silent classifier") {
    // Labels equal to the rule's own output => TP 1, FP 0.
    std::vector<LabeledRecord> records;
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> channel(0, 255);
    for (int i = 0; i < 5000; ++i) {
        const RgbPixel p{uint8_t(channel(rng)), uint8_t(channel(rng)),
                         uint8_t(channel(rng))};
        records.push_back({p.r, p.g, p.b, classify(RuleKind::kovac, p)});
    }
    const EvalResult result = evaluate_records(RuleKind::kovac, records);
    CHECK(result.i_pos == result.n_pos);
    CHECK(result.i_neg == 0);

    // A rule that detects nothing on these inputs: saleh over gray pixels.
    std::vector<LabeledRecord> gray = {rec(50, 50, 50, 1), rec(80, 80, 80, 0)};
    const EvalResult silent = evaluate_records(RuleKind::saleh, gray);
    CHECK(silent.i_pos == 0);
    CHECK(silent.i_neg == 0);
    CHECK(silent.tp_rate().to_double() == 0.0);
    CHECK(silent.fp_rate().to_double() == 0.0);
}

TEST_CASE("degenerate classes and empty input") {
    CHECK_THROWS_AS(evaluate_records(RuleKind::kovac, {}), InputError);
    const EvalResult all_skin =
        evaluate_records(RuleKind::kovac, {rec(1, 2, 3, 1)});
    CHECK_THROWS_AS(all_skin.fp_rate(), DegenerateClassError);
    CHECK(all_skin.tp_rate().to_double() == 0.0);
    const EvalResult all_non =
        evaluate_records(RuleKind::kovac, {rec(1, 2, 3, 0)});
    CHECK_THROWS_AS(all_non.tp_rate(), DegenerateClassError);
}

TEST_CASE("permutation invariance and additivity") {
    std::vector<LabeledRecord> records = confusion_fixture();
    const EvalResult base = evaluate_records(RuleKind::rgb_ratio, records);

    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(records.begin(), records.end(), rng);
        const EvalResult shuffled = evaluate_records(RuleKind::rgb_ratio, records);
        CHECK(shuffled.i_pos == base.i_pos);
        CHECK(shuffled.i_neg == base.i_neg);
        CHECK(shuffled.n_pos == base.n_pos);
        CHECK(shuffled.n_neg == base.n_neg);
    }

    // Counts over a concatenation equal the per-part sums.
    const std::vector<LabeledRecord> first(records.begin(), records.begin() + 3);
    const std::vector<LabeledRecord> second(records.begin() + 3, records.end());
    const EvalResult a = evaluate_records(RuleKind::rgb_ratio, first);
    const EvalResult b = evaluate_records(RuleKind::rgb_ratio, second);
    CHECK(a.i_pos + b.i_pos == base.i_pos);
    CHECK(a.i_neg + b.i_neg == base.i_neg);
    CHECK(a.n_pos + b.n_pos == base.n_pos);
    CHECK(a.n_neg + b.n_neg == base.n_neg);
}

TEST_CASE("flipping every label swaps the detection classes") {
    std::vector<LabeledRecord> records = confusion_fixture();
    const EvalResult base = evaluate_records(RuleKind::rgb_ratio, records);
    for (LabeledRecord& r : records)
        r.label = r.label == SkinLabel::skin ? SkinLabel::non_skin : SkinLabel::skin;
    const EvalResult flipped = evaluate_records(RuleKind::rgb_ratio, records);
    CHECK(flipped.i_pos == base.i_neg);
    CHECK(flipped.i_neg == base.i_pos);
    CHECK(flipped.n_pos == base.n_neg);
    CHECK(flipped.n_neg == base.n_pos);
}

TEST_CASE("unweighted averaging reproduces the published comparison rows") {
    const auto pct = [](int64_t v) { return Ratio::of(v, 10000); };
    CHECK(mean({pct(9046), pct(8146), pct(9325)}).percent() == "88.39");
    CHECK(mean({pct(1053), pct(1676), pct(2419)}).percent() == "17.16");
    CHECK(mean({pct(9617), pct(9122), pct(9733)}).percent() == "94.91");
    CHECK(mean({pct(2627), pct(3784), pct(3509)}).percent() == "33.07");
    // A single dataset averages to itself.
    CHECK(mean({pct(9046)}).percent() == "90.46");
}

TEST_CASE("evaluate_dataset and compare over synthetic fixtures") {
    const fs::path root = fs::temp_directory_path() / "skincls_test_evalds";
    fs::remove_all(root);
    fs::create_directories(root / "images");
    fs::create_directories(root / "masks");

    // One 1x2 image: a skin pixel under both kovac and rgb-ratio, and a
    // non-skin pixel under both.
    ImageBuffer image{2, 1, {RgbPixel{150, 100, 50}, RgbPixel{10, 10, 200}}};
    save_png(image, root / "images/a.png");
    ImageBuffer mask{2, 1, {RgbPixel{255, 255, 255}, RgbPixel{0, 0, 0}}};
    save_png(mask, root / "masks/a.png");

    for (RuleKind rule : {RuleKind::rgb_ratio, RuleKind::kovac}) {
        const EvalResult result = evaluate_dataset(rule, root, MaskMode::strict);
        CHECK(result.tp_rate().to_double() == 1.0);
        CHECK(result.fp_rate().to_double() == 0.0);
    }

    const ReportTable table =
        compare({RuleKind::kovac, RuleKind::rgb_ratio}, {{"synth", root}},
                MaskMode::strict);
    REQUIRE(table.cells.size() == 2);
    REQUIRE(table.cells[0].size() == 1);
    CHECK(table.average_tp(0)->percent() == "100.00");
    CHECK(table.average_fp(1)->percent() == "0.00");

    const std::string text = table.render_text();
    CHECK(text.find("kovac") != std::string::npos);
    CHECK(text.find("rgb-ratio") != std::string::npos);
    CHECK(text.find("100.00") != std::string::npos);

    const std::string csv = table.render_csv();
    CHECK(csv.find("rule,dataset,tp_pct,fp_pct,n_pos,n_neg,i_pos,i_neg") == 0);
    CHECK(csv.find("kovac,synth,100.00,0.00,1,1,1,0") != std::string::npos);
    CHECK(csv.find("kovac,AVERAGE,100.00,0.00,1,1,1,0") != std::string::npos);

    // A failing dataset is excluded from the average with a warning.
    const ReportTable mixed = compare(
        {RuleKind::kovac}, {{"synth", root}, {"missing", root / "nope"}},
        MaskMode::strict);
    CHECK(mixed.cells[0][1].result == std::nullopt);
    CHECK(mixed.average_tp(0)->percent() == "100.00");
    CHECK(mixed.render_text().find("warning") != std::string::npos);

    fs::remove_all(root);
}
