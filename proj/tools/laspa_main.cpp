// Command-line front end for the certified rootfinder.
//
// Coefficient lists are ASCENDING: constant term first, leading last,
// so "24,-50,35,-10,1" is 24 - 50z + 35z^2 - 10z^3 + z^4.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "laspa/cli.hpp"

namespace {

void add_input_flags(CLI::App& sub, std::string& coeffs, std::string& roots) {
    sub.add_option("--coeffs", coeffs,
                   "Comma-separated coefficients, ASCENDING (constant term first)");
    sub.add_option("--roots", roots,
                   "Comma-separated roots; builds the monic polynomial with these roots");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified polynomial rootfinding: guaranteed-convergence disks, "
                 "power-sum seeding, Laguerre iteration, basin rendering.\n"
                 "Complex numbers are written like 1.5, 2+3i, or 0-1i."};
    app.require_subcommand(1);

    laspa::SolveCommand solve_cmd;
    double solve_tol = 0.0;
    int solve_max_iter = 0;
    int solve_order = 0;
    CLI::App* solve = app.add_subcommand("solve", "Find all roots, certified where possible");
    add_input_flags(*solve, solve_cmd.coeffs, solve_cmd.roots);
    CLI::Option* tol_opt = solve->add_option("--tol", solve_tol, "Relative residual tolerance");
    CLI::Option* iter_opt = solve->add_option("--max-iter", solve_max_iter,
                                              "Iteration budget per root");
    CLI::Option* order_opt = solve->add_option("--order", solve_order,
                                               "Power-sum order for seeding");

    laspa::RadiusCommand radius_cmd;
    CLI::App* radius = app.add_subcommand(
        "radius", "Per-root guaranteed-convergence radii and the a priori bound");
    add_input_flags(*radius, radius_cmd.coeffs, radius_cmd.roots);

    laspa::RenderCommand render_cmd;
    CLI::App* render = app.add_subcommand("render", "Render basins of attraction to a PPM image");
    render->add_option("--roots", render_cmd.roots, "Comma-separated roots (at least 2)")
        ->required();
    render->add_option("--center", render_cmd.center, "Square center (default 0+0i)");
    render->add_option("--side", render_cmd.side, "Square side length (default 4)");
    render->add_option("--px", render_cmd.px, "Image width/height in pixels (default 256)");
    render->add_option("--max-iter", render_cmd.max_iter, "Iteration cap per pixel (default 64)");
    render->add_option("--out", render_cmd.out_path, "Output PPM path")->required();
    render->add_option("--stats", render_cmd.stats_path,
                       "Optional sidecar histogram (root_index count / none count)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    laspa::Command cmd;
    if (solve->parsed()) {
        if (*tol_opt)
            solve_cmd.tol = solve_tol;
        if (*iter_opt)
            solve_cmd.max_iter = solve_max_iter;
        if (*order_opt)
            solve_cmd.order = solve_order;
        cmd = solve_cmd;
    } else if (radius->parsed()) {
        cmd = radius_cmd;
    } else {
        cmd = render_cmd;
    }
    return laspa::run_command(cmd, std::cout, std::cerr);
}
