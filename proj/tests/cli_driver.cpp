// End-to-end checks against the installed binary. Takes the binary path as
// argv[1], exercises exit codes, JSON validity, determinism and atlas output.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p) return r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, p)) r.out.append(buf, got);
    int status = pclose(p);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " <path-to-springer-kit>\n";
        return 2;
    }
    const std::string exe = std::string("\"") + argv[1] + "\"";

    auto r = run(exe + " --help");
    expect(r.code == 0, "--help exits 0");
    expect(contains(r.out, "shape") && contains(r.out, "atlas"), "--help lists subcommands");

    r = run(exe);
    expect(r.code == 1, "missing subcommand exits 1");

    r = run(exe + " --version");
    expect(r.code == 0 && contains(r.out, "springer-kit 0.1.0"), "--version prints the stamp");

    r = run(exe + " shape 2,2,1,1");
    expect(r.code == 0, "shape text report exits 0");
    expect(contains(r.out, "springer-kit 0.1.0"), "banner carries the version stamp");
    expect(contains(r.out, "components 9"), "shape report counts 9 components");
    expect(contains(r.out, "has singular component: yes"), "shape report flags singularity");

    r = run(exe + " --no-banner shape 2,2,1,1");
    expect(r.code == 0 && !contains(r.out, "springer-kit"), "--no-banner drops the stamp");

    r = run(exe + " shape 1,2");
    expect(r.code == 1, "non-partition input exits 1");
    r = run(exe + " shape 2,x");
    expect(r.code == 1, "malformed part exits 1");

    auto j1 = run(exe + " shape 2,2,1,1 --json");
    auto j2 = run(exe + " shape 2,2,1,1 --json --jobs 4");
    expect(j1.code == 0, "shape --json exits 0");
    expect(j1.out == j2.out, "json output is byte-identical across reruns and job counts");
    json atlas;
    bool parsed = true;
    try {
        atlas = json::parse(j1.out);
    } catch (const json::exception&) {
        parsed = false;
    }
    expect(parsed, "shape --json parses");
    if (parsed) {
        expect(atlas["summary"]["components"] == 9, "json summary counts components");
        expect(atlas["tool_version"] == "0.1.0", "json carries tool_version");
        expect(atlas["reports"].size() == 9, "json lists one report per component");
    }

    r = run(exe + " composition 2,3,1,2");
    expect(r.code == 0, "composition report exits 0");
    expect(contains(r.out, "1 2 5 / 3 4 / 6 8 / 7"), "composition report shows the tableau");
    expect(contains(r.out, "verdict: singular"), "composition report shows the verdict");
    expect(contains(r.out, "(2,3,2)"), "composition report names the forbidden pattern");

    r = run(exe + " composition 8,7,6,5,4,3,2,1");
    expect(r.code == 0, "large composition stays within the fast path");

    r = run(exe + " pattern '1 2 5 | 3 8 | 6 7 | 4' --json");
    expect(r.code == 0, "pattern --json exits 0");
    try {
        auto o = json::parse(r.out);
        expect(o["stab_dim"] == 20 && o["dense"] == false, "pattern orbit numbers");
        expect(o["crossings"].is_array() && o.contains("crossing_free"), "pattern diagnostics");
    } catch (const json::exception&) {
        expect(false, "pattern --json parses");
    }

    r = run(exe + " pattern '1 3 | 3'");
    expect(r.code == 1, "overlapping blocks exit 1");

    r = run(exe + " pattern '1 4 | 2 5 | 3 6' --render ascii");
    expect(r.code == 0 && contains(r.out, "1   2   3   4   5   6"),
           "ascii render prints the baseline");

    fs::path svg_file = fs::path("cli_driver_out.svg");
    fs::remove(svg_file);
    r = run(exe + " pattern '1 4 | 2 5 | 3 6' --render svg --out " + svg_file.string());
    expect(r.code == 0 && fs::exists(svg_file), "svg render writes the requested file");
    {
        std::ifstream f(svg_file);
        std::stringstream ss;
        ss << f.rdbuf();
        expect(contains(ss.str(), "<svg") && contains(ss.str(), "</svg>"),
               "svg file is well formed");
    }

    r = run("SPRINGER_KIT_MAX_N=5 " + exe + " shape 2,2,1,1");
    expect(r.code == 2, "enumeration past the configured ceiling exits 2");

    fs::path dir = fs::path("cli_driver_atlas");
    fs::remove_all(dir);
    r = run(exe + " atlas --max-n 12 --out-dir " + dir.string());
    expect(r.code == 2, "atlas --max-n beyond 10 exits 2");

    r = run(exe + " atlas --max-n 0 --out-dir " + dir.string());
    expect(r.code == 0, "atlas --max-n 0 exits 0");
    {
        int entries = 0;
        for (const auto& e : fs::directory_iterator(dir)) {
            ++entries;
            expect(e.path().filename() == "atlas_index.json", "empty atlas writes index only");
        }
        expect(entries == 1, "empty atlas directory holds one file");
    }
    fs::remove_all(dir);

    r = run(exe + " atlas --max-n 4 --out-dir " + dir.string());
    expect(r.code == 0, "atlas --max-n 4 exits 0");
    expect(contains(r.out, "wrote 11 shape files"), "atlas reports 11 shape files");
    int shape_files = 0;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().filename().string().rfind("atlas_", 0) == 0 &&
            e.path().filename() != "atlas_index.json")
            ++shape_files;
    expect(shape_files == 11, "atlas directory holds one file per shape");
    expect(fs::exists(dir / "atlas_3-1.json"), "atlas file names join parts with dashes");
    try {
        std::ifstream f(dir / "atlas_index.json");
        auto idx = json::parse(f);
        expect(idx["max_n"] == 4 && idx["shapes"].size() == 11, "atlas index lists every shape");
    } catch (const json::exception&) {
        expect(false, "atlas index parses");
    }

    r = run(exe + " verify --suite all --max-n 3");
    expect(r.code == 0, "verify --suite all --max-n 3 exits 0");
    expect(contains(r.out, "verification passed"), "verify prints the summary line");
    expect(contains(r.out, "[pass]"), "verify prints per-check lines");

    r = run(exe + " verify --suite nonsense --max-n 3");
    expect(r.code == 1, "unknown suite exits 1");

    std::cout << (failures == 0 ? "cli driver passed\n" : "cli driver FAILED\n");
    return failures == 0 ? 0 : 1;
}
