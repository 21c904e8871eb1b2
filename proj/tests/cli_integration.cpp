// End-to-end checks of the installed CLI. argv[1] is the path to the
// skincls binary; commands run through the shell with output captured to
// files under a scratch directory.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "core/image.hpp"
#include "core/rules.hpp"

using namespace skincls;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_tmp;
int g_failures = 0;

void expect(bool ok, const std::string& what) {
    std::printf("%s: %s\n", ok ? "ok" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const fs::path out_file = g_tmp / "cmd_output.txt";
    const std::string cmd =
        g_cli + " " + args + " > " + out_file.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_file, std::ios::binary);
    result.out.assign(std::istreambuf_iterator<char>(in),
                      std::istreambuf_iterator<char>());
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

void make_dataset(const fs::path& root) {
    fs::create_directories(root / "images");
    fs::create_directories(root / "masks");
    ImageBuffer a{2, 1, {RgbPixel{150, 100, 50}, RgbPixel{10, 10, 200}}};
    save_png(a, root / "images/a.png");
    save_png(render_mask(RuleKind::rgb_ratio, a), root / "masks/a.png");
    ImageBuffer b{1, 2, {RgbPixel{224, 180, 150}, RgbPixel{0, 0, 255}}};
    save_png(b, root / "images/b.png");
    save_png(render_mask(RuleKind::rgb_ratio, b), root / "masks/b.png");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_integration <path-to-skincls>\n");
        return 2;
    }
    g_cli = argv[1];
    g_tmp = fs::temp_directory_path() / "skincls_cli_test";
    fs::remove_all(g_tmp);
    fs::create_directories(g_tmp);
    const fs::path ds = g_tmp / "dataset";
    make_dataset(ds);

    // ranges
    {
        const RunResult r = run("ranges --rule kovac");
        expect(r.exit_code == 0, "ranges exits 0");
        expect(r.out == "R:[96,255] G:[41,239] B:[21,254]\n",
               "ranges prints the kovac bounds, got: " + r.out);
    }

    // classify, with and without --lut
    {
        ImageBuffer one{1, 1, {RgbPixel{150, 100, 50}}};
        save_png(one, g_tmp / "one.png");
        const RunResult direct =
            run("classify --rule rgb-ratio --input " + (g_tmp / "one.png").string() +
                " --output " + (g_tmp / "mask_direct.png").string());
        expect(direct.exit_code == 0, "classify exits 0");
        const MaskImage mask =
            load_mask(g_tmp / "mask_direct.png", MaskMode::strict);
        expect(mask.labels == std::vector<SkinLabel>{SkinLabel::skin},
               "classify wrote a white 1x1 mask");

        const RunResult via_lut =
            run("classify --rule rgb-ratio --lut --input " +
                (g_tmp / "one.png").string() + " --output " +
                (g_tmp / "mask_lut.png").string());
        expect(via_lut.exit_code == 0, "classify --lut exits 0");
        expect(slurp(g_tmp / "mask_direct.png") == slurp(g_tmp / "mask_lut.png"),
               "masks with and without --lut are byte-identical");
    }

    // evaluate: text and CSV carry the same counts
    {
        const RunResult text =
            run("evaluate --rule rgb-ratio --dataset " + ds.string());
        expect(text.exit_code == 0, "evaluate exits 0");
        expect(text.out.find("TP: 100.00%") != std::string::npos &&
                   text.out.find("FP: 0.00%") != std::string::npos,
               "evaluate text reports TP 100.00 / FP 0.00, got: " + text.out);

        const RunResult csv = run("evaluate --rule rgb-ratio --format csv --dataset " +
                                  ds.string());
        expect(csv.exit_code == 0, "evaluate --format csv exits 0");
        expect(csv.out.find("100.00,0.00,2,2,2,0") != std::string::npos,
               "evaluate CSV carries identical counts, got: " + csv.out);

        const RunResult missing =
            run("evaluate --rule kovac --dataset /nonexistent");
        expect(missing.exit_code == 2, "evaluate on missing dataset exits 2");
        expect(missing.out.find("images/") != std::string::npos,
               "layout error names the missing directory, got: " + missing.out);
    }

    // compare
    {
        const RunResult r = run("compare --rules kovac,rgb-ratio --datasets synth=" +
                                ds.string() + " --format csv");
        expect(r.exit_code == 0, "compare exits 0");
        expect(r.out.find("rgb-ratio,synth,100.00,0.00") != std::string::npos,
               "compare CSV has the rgb-ratio row, got: " + r.out);
        expect(r.out.find("kovac,AVERAGE") != std::string::npos,
               "compare CSV has AVERAGE rows");
    }

    // transform + histogram
    {
        const fs::path rec = g_tmp / "records.csv";
        const RunResult t =
            run("transform --dataset " + ds.string() + " --output " + rec.string());
        expect(t.exit_code == 0, "transform exits 0");
        const std::string body = slurp(rec);
        expect(body.rfind("R,G,B,label\n", 0) == 0, "records CSV has the header");
        expect(body.find("150,100,50,1") != std::string::npos,
               "records CSV contains the skin pixel row");

        const fs::path hist = g_tmp / "hist.csv";
        const RunResult h = run("histogram --records " + rec.string() +
                                " --feature rg-ratio --bins 8 --lo 0 --hi 0.5 "
                                "--class skin --output " +
                                hist.string());
        expect(h.exit_code == 0, "histogram exits 0");
        const std::string hist_body = slurp(hist);
        expect(hist_body.rfind("bin_lo,bin_hi,count\n", 0) == 0 &&
                   hist_body.find("# undefined=") != std::string::npos,
               "histogram CSV has bins and auxiliary counts");
    }

    // usage errors
    {
        expect(run("frobnicate").exit_code == 1, "unknown subcommand exits 1");
        expect(run("ranges --rule kovacs").exit_code == 1,
               "unknown rule exits 1");
        expect(run("evaluate --rule kovac").exit_code == 1,
               "missing required flag exits 1");
    }

    fs::remove_all(g_tmp);
    std::printf("%d failure%s\n", g_failures, g_failures == 1 ? "" : "s");
    return g_failures == 0 ? 0 : 1;
}
