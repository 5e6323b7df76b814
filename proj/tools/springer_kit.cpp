#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "springer/bounds.hpp"
#include "springer/classify.hpp"
#include "springer/errors.hpp"
#include "springer/link_pattern.hpp"
#include "springer/oracle.hpp"
#include "springer/orbit.hpp"
#include "springer/partition.hpp"
#include "springer/render.hpp"
#include "springer/report_json.hpp"
#include "springer/tableau.hpp"
#include "springer/verify.hpp"

namespace {

using namespace springer;
namespace fs = std::filesystem;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_bound = 2;
constexpr int exit_verify = 3;

void banner(bool suppress) {
    if (!suppress) std::cout << "springer-kit " << tool_version << "\n";
}

std::string describe_classes(const ComponentReport& r) {
    std::string out;
    auto add = [&](bool flag, const char* tag) {
        if (!flag) return;
        if (!out.empty()) out += ", ";
        out += tag;
    };
    add(r.bala_carter, "BC");
    add(r.richardson, "R");
    add(r.generalized_bc, "genBC");
    add(r.generalized_richardson, "genR");
    return out.empty() ? "-" : out;
}

void print_singular(const SingularityReport& s) {
    std::cout << "verdict: " << verdict_name(s.verdict) << " (" << s.reason << ")";
    if (s.witness) {
        std::cout << " witness (";
        for (size_t i = 0; i < s.witness->forbidden.size(); ++i)
            std::cout << (i ? "," : "") << s.witness->forbidden[i];
        std::cout << ") at positions ";
        for (size_t i = 0; i < s.witness->indices.size(); ++i)
            std::cout << (i ? "," : "") << s.witness->indices[i];
    }
    std::cout << "\n";
}

int cmd_shape(const std::string& arg, bool json_out, int jobs, bool no_banner) {
    Partition la = Partition::parse(arg);
    ShapeAtlas atlas = classify_shape(la, jobs);
    if (json_out) {
        std::cout << to_json(atlas).dump(2) << "\n";
        return exit_ok;
    }
    banner(no_banner);
    std::cout << "shape " << la.str() << "  n=" << la.n() << "\n"
              << "conjugate " << la.conjugate().str() << "\n"
              << "fiber dim " << springer_fiber_dim(la) << ", centralizer dim "
              << stabilizer_dim(la) << "\n"
              << "components " << atlas.summary.components << ": BC " << atlas.summary.bala_carter
              << ", R " << atlas.summary.richardson << ", genBC " << atlas.summary.generalized_bc
              << ", genR " << atlas.summary.generalized_richardson << "\n"
              << "singular " << atlas.summary.singular << ", smooth " << atlas.summary.smooth
              << ", unknown " << atlas.summary.unknown << "\n"
              << "has singular component: " << (atlas.summary.exists_singular ? "yes" : "no")
              << "\n"
              << "all components smooth: " << (all_components_smooth(la) ? "yes" : "no") << "\n";
    for (const auto& r : atlas.reports)
        std::cout << "  [" << describe_classes(r) << "] " << r.tableau.str() << "  "
                  << verdict_name(r.singular.verdict) << "\n";
    return exit_ok;
}

int cmd_composition(const std::string& arg, bool json_out, bool no_banner) {
    Composition pi = Composition::parse(arg);
    StandardTableau t = tableau_from_composition(pi);
    StandardTableau dual = tableau_from_cocomposition(pi);
    SingularityReport sing = bc_is_singular(pi);
    std::vector<int> base = fiber_bundle_base(dual);
    if (json_out) {
        nlohmann::json out{{"composition", pi.parts()},
                           {"tableau", to_json(t)},
                           {"singular", to_json(sing)},
                           {"dual_tableau", to_json(dual)},
                           {"dual_bundle_base", base},
                           {"dim", springer_fiber_dim(pi.sorted())}};
        std::cout << out.dump(2) << "\n";
        return exit_ok;
    }
    banner(no_banner);
    std::cout << "composition " << pi.str() << " of shape " << pi.sorted().str() << "\n"
              << "component tableau: " << t.str() << "\n";
    print_singular(sing);
    std::cout << "dual tableau: " << dual.str() << "\n" << "dual bundle base: ";
    for (size_t i = 0; i < base.size(); ++i) std::cout << (i ? "," : "") << base[i];
    if (base.empty()) std::cout << "(point)";
    std::cout << "\n";
    return exit_ok;
}

int cmd_pattern(const std::string& arg, const std::string& render, const std::string& out_file,
                bool json_out, bool no_banner) {
    LinkPattern pi = LinkPattern::parse(arg);
    OrbitAnalysis orbit = analyze_orbit(pi);
    if (json_out) {
        nlohmann::json out = to_json(orbit);
        out["tableau"] = to_json(tableau_of_pattern(pi));
        out["crossings"] = crossings(pi);
        out["nesting_violations"] = nesting_violations(pi);
        out["standard"] = is_standard(pi);
        out["crossing_free"] = in_pi1(pi);
        std::cout << out.dump(2) << "\n";
        return exit_ok;
    }
    banner(no_banner);
    std::cout << "pattern " << pi.str() << "  n=" << pi.n() << "  shape "
              << pi.jordan_type().str() << "\n";
    auto cr = crossings(pi);
    auto nest = nesting_violations(pi);
    std::cout << "crossings:";
    for (auto [i, j] : cr) std::cout << " (" << i << "," << j << ")";
    if (cr.empty()) std::cout << " none";
    std::cout << "\nnesting violations:";
    for (auto [j, k] : nest) std::cout << " (" << j << "," << k << ")";
    if (nest.empty()) std::cout << " none";
    std::cout << "\ninterval pattern: " << (is_standard(pi) ? "yes" : "no")
              << "\ncrossing-free class: " << (in_pi1(pi) ? "yes" : "no") << "\n"
              << "tableau: " << tableau_of_pattern(pi).str() << "\n"
              << "flag stabilizer dim " << orbit.stab_dim << ", orbit dim " << orbit.orbit_dim
              << ", fiber dim " << orbit.springer_dim << ", dense: "
              << (orbit.dense ? "yes" : "no") << "\n";
    if (!render.empty()) {
        std::string art = render == "svg" ? render_svg(pi) : render_ascii(pi);
        if (!out_file.empty()) {
            std::ofstream f(out_file, std::ios::binary);
            if (!f) throw parse_error("cannot write '" + out_file + "'");
            f << art;
        } else {
            std::cout << art;
        }
    }
    return exit_ok;
}

int cmd_atlas(int max_n, const std::string& out_dir, int jobs, bool no_banner) {
    if (max_n < 0 || max_n > 10)
        throw bound_error("atlas: --max-n must be between 0 and 10");
    fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw parse_error("atlas: cannot create directory '" + out_dir + "'");

    banner(no_banner);
    nlohmann::json index;
    index["tool_version"] = tool_version;
    index["max_n"] = max_n;
    nlohmann::json shapes = nlohmann::json::array();
    int files = 0;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& la : partitions_of(n)) {
            ShapeAtlas atlas = classify_shape(la, jobs, std::max(max_n, bounds().tableau_enum));
            std::string name = "atlas_";
            for (size_t i = 0; i < la.parts().size(); ++i) {
                if (i) name += '-';
                name += std::to_string(la.parts()[i]);
            }
            name += ".json";
            std::ofstream f(dir / name, std::ios::binary);
            if (!f) throw parse_error("atlas: cannot write '" + (dir / name).string() + "'");
            f << to_json(atlas).dump(2) << "\n";
            ++files;
            shapes.push_back(nlohmann::json{{"shape", la.parts()},
                                            {"n", n},
                                            {"file", name},
                                            {"components", atlas.summary.components},
                                            {"singular", atlas.summary.singular}});
        }
    }
    index["shapes"] = shapes;
    std::ofstream f(dir / "atlas_index.json", std::ios::binary);
    if (!f) throw parse_error("atlas: cannot write index");
    f << index.dump(2) << "\n";
    std::cout << "wrote " << files << " shape files and atlas_index.json to " << out_dir << "\n";
    return exit_ok;
}

int cmd_verify(const std::string& suite, int max_n, int jobs, bool no_banner) {
    banner(no_banner);
    auto results = run_suite(suite, max_n, jobs);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << format_result(r) << "\n";
        ok = ok && r.pass;
    }
    std::cout << (ok ? "verification passed" : "verification FAILED") << "\n";
    return ok ? exit_ok : exit_verify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of components of type-A springer fibers"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string("springer-kit ") + tool_version);
    bool no_banner = false;
    app.add_flag("--no-banner", no_banner, "omit the version stamp line");

    std::string shape_arg;
    bool shape_json = false;
    int shape_jobs = 1;
    auto* shape = app.add_subcommand("shape", "classify every component of a jordan type");
    shape->add_option("partition", shape_arg, "partition, e.g. 2,2,1,1")->required();
    shape->add_flag("--json", shape_json, "emit the atlas record as JSON");
    shape->add_option("--jobs", shape_jobs, "parallel workers")->check(CLI::PositiveNumber);

    std::string comp_arg;
    bool comp_json = false;
    auto* comp = app.add_subcommand("composition", "analyze one interval component");
    comp->add_option("composition", comp_arg, "composition, e.g. 2,3,1,2")->required();
    comp->add_flag("--json", comp_json, "emit JSON");

    std::string pat_arg, pat_render, pat_out;
    bool pat_json = false;
    auto* pat = app.add_subcommand("pattern", "analyze one link pattern");
    pat->add_option("pattern", pat_arg, "blocks, e.g. '1 2 5 | 3 8 | 6 7 | 4'")->required();
    pat->add_option("--render", pat_render, "arc diagram format")
        ->check(CLI::IsMember({"ascii", "svg"}));
    pat->add_option("--out", pat_out, "write the diagram to a file");
    pat->add_flag("--json", pat_json, "emit JSON");

    int atlas_max = 6, atlas_jobs = 1;
    std::string atlas_dir;
    auto* atlas = app.add_subcommand("atlas", "classify all shapes up to a size");
    atlas->add_option("--max-n", atlas_max, "largest n (0 to 10)")->required();
    atlas->add_option("--out-dir", atlas_dir, "output directory")->required();
    atlas->add_option("--jobs", atlas_jobs, "parallel workers")->check(CLI::PositiveNumber);

    std::string verify_suite = "all";
    int verify_max = 6, verify_jobs = 1;
    auto* verify = app.add_subcommand("verify", "re-run the exhaustive property sweeps");
    verify->add_option("--suite", verify_suite, "dims|orbits|duality|evacuation|all")
        ->check(CLI::IsMember({"dims", "orbits", "duality", "evacuation", "all"}));
    verify->add_option("--max-n", verify_max, "sweep ceiling")->check(CLI::PositiveNumber);
    verify->add_option("--jobs", verify_jobs, "parallel workers")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (shape->parsed()) return cmd_shape(shape_arg, shape_json, shape_jobs, no_banner);
        if (comp->parsed()) return cmd_composition(comp_arg, comp_json, no_banner);
        if (pat->parsed())
            return cmd_pattern(pat_arg, pat_render, pat_out, pat_json, no_banner);
        if (atlas->parsed()) return cmd_atlas(atlas_max, atlas_dir, atlas_jobs, no_banner);
        if (verify->parsed()) return cmd_verify(verify_suite, verify_max, verify_jobs, no_banner);
        return exit_usage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    } catch (const bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bound;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
