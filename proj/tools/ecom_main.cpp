#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ecom/cli/commands.hpp"
#include "ecom/grpcoh/resolution.hpp"

namespace {

std::filesystem::path default_cache_dir() {
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "ecom";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "ecom";
    return std::filesystem::temp_directory_path() / "ecom-cache";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace ecom::cli;

    CLI::App app{"Cohomology of E_com U(3): exact linear algebra, group cohomology, spectral sequences, homotopy limits"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<unsigned> prime;
    std::optional<int> max_degree;
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    bool timings = true;
    app.add_option("--prime", prime, "prime p")->check(CLI::IsMember({2u, 3u}));
    app.add_option("--max-degree", max_degree, "highest degree reported");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", cache_dir, "resolution cache directory (ECOM_CACHE_DIR overrides)");
    app.add_flag("--no-cache", no_cache, "do not read or write the resolution cache");
    app.add_flag("!--no-timings", timings, "omit stage timings");

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    std::string matrix;
    snf->add_option("matrix", matrix, "JSON rows, e.g. [[2,4],[6,8]]")->required();

    auto* grp = app.add_subcommand("grpcoh", "H^*(G; M) through a free resolution");
    std::string group = "S3", module = "Z";
    grp->add_option("group", group, "group (S3)");
    grp->add_option("module", module, "module: Z, S, M, M⊗M (or MxM), M_S")->required();

    auto* flag = app.add_subcommand("flag", "H^*(Fl_n) as graded Σn-module");
    std::size_t n = 3;
    bool square = false;
    flag->add_option("n", n, "n")->check(CLI::Range(1, 5));
    flag->add_flag("--square", square, "also decompose H^*(Fl_n x Fl_n)");

    auto* serre = app.add_subcommand("serre", "Serre spectral sequence of a fibration config");
    std::string config;
    std::optional<int> top_dimension;
    serre->add_option("config", config, "bundled name (flbar3, fl3xfl3) or path to JSON")->required();
    serre->add_option("--top-dimension", top_dimension, "override the top dimension");

    auto* u3t2 = app.add_subcommand("u3t2", "H^*(U(3)/T(2); F_p) through the Koszul model");

    auto* holim = app.add_subcommand("holim", "higher limits of a poset diagram");
    std::string diagram;
    RobustnessOptions rob;
    bool no_robustness = false;
    holim->add_option("diagram", diagram, "path or bundled name (u3_p2, u3_p3)")->required();
    holim->add_flag("--no-robustness", no_robustness, "skip the rank-profile robustness check");
    holim->add_option("--budget", rob.budget, "exhaustive enumeration bound");
    holim->add_option("--samples", rob.samples, "random-walk steps when the bound is exceeded");
    holim->add_option("--seed", rob.seed, "random-walk seed");

    auto* ecomu3 = app.add_subcommand("ecom-u3", "H^*(E_com U(3); F_p) through the Bousfield-Kan spectral sequence");
    auto* rational = app.add_subcommand("rational-ring", "H^*(E_com U(3); Q) as a presented ring");

    CLI11_PARSE(app, argc, argv);

    if (no_cache) {
        ecom::grpcoh::set_resolution_cache_dir(std::nullopt);
    } else {
        std::filesystem::path dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
        if (const char* env = std::getenv("ECOM_CACHE_DIR"); env && *env) dir = env;
        ecom::grpcoh::set_resolution_cache_dir(dir);
    }

    Report report("none");
    if (snf->parsed()) {
        report = guarded("snf", [&] { return cmd_snf(matrix); });
    } else if (grp->parsed()) {
        report = guarded("grpcoh",
                         [&] { return cmd_group_cohomology(group, module, static_cast<std::size_t>(max_degree.value_or(12)),
                                                           prime.value_or(0)); });
    } else if (flag->parsed()) {
        report = guarded("flag", [&] { return cmd_flag(n, square); });
    } else if (serre->parsed()) {
        report = guarded("serre", [&] { return cmd_serre(config, prime, top_dimension); });
    } else if (u3t2->parsed()) {
        report = guarded("u3t2", [&] { return cmd_u3t2(prime.value_or(2)); });
    } else if (holim->parsed()) {
        rob.enabled = !no_robustness;
        report = guarded("holim", [&] { return cmd_holim(diagram, max_degree, rob); });
    } else if (ecomu3->parsed()) {
        report = guarded("ecom-u3", [&] { return cmd_ecom_u3(prime.value_or(2)); });
    } else if (rational->parsed()) {
        report = guarded("rational-ring", [] { return cmd_rational_ring(); });
    }

    if (format == "json")
        std::cout << report.to_json(timings).dump(2) << "\n";
    else
        std::cout << report.to_text(timings);
    return report.exit_code();
}
