#pragma once

#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "laspa/basins.hpp"
#include "laspa/errors.hpp"
#include "laspa/laguerre.hpp"
#include "laspa/polynomial.hpp"
#include "laspa/roots_iteration.hpp"
#include "laspa/solver.hpp"
#include "laspa/text.hpp"

namespace laspa {

/// Coefficient lists on the command line are ASCENDING: constant term
/// first, leading coefficient last ("24,-50,35,-10,1" is 24 - 50z + ... + z^4).
struct SolveCommand {
    std::string coeffs; // exactly one of coeffs/roots is non-empty
    std::string roots;  // roots build the monic polynomial with those roots
    std::optional<double> tol;
    std::optional<int> max_iter;
    std::optional<int> order;
};

struct RadiusCommand {
    std::string coeffs;
    std::string roots;
};

struct RenderCommand {
    std::string roots;
    std::string center = "0+0i";
    double side = 4.0;
    int px = 256;
    int max_iter = 64;
    std::string out_path;
    std::string stats_path; // optional sidecar histogram
};

using Command = std::variant<SolveCommand, RadiusCommand, RenderCommand>;

namespace detail {

inline Polynomial input_polynomial(const std::string& coeffs, const std::string& roots) {
    if (coeffs.empty() == roots.empty())
        throw ParseError(1, "", "give exactly one of --coeffs or --roots");
    if (!coeffs.empty())
        return Polynomial(parse_complex_list(coeffs));
    return from_roots(parse_complex_list(roots));
}

inline Complex single_complex(const std::string& text) {
    const std::vector<Complex> values = parse_complex_list(text);
    if (values.size() != 1)
        throw ParseError(1, text, "expected a single complex number");
    return values.front();
}

inline int run_command_impl(const SolveCommand& cmd, std::ostream& out, std::ostream& err) {
    const Polynomial p = input_polynomial(cmd.coeffs, cmd.roots);
    SolveConfig cfg;
    if (cmd.tol)
        cfg.iteration.residual_tol = *cmd.tol;
    if (cmd.max_iter)
        cfg.iteration.max_iters = *cmd.max_iter;
    if (cmd.order)
        cfg.spa.order = *cmd.order;
    auto print = [&](const std::vector<RootEstimate>& roots) {
        for (const RootEstimate& r : roots)
            out << format_double(std::real(r.value)) << " " << format_double(std::imag(r.value))
                << " " << format_double(r.residual) << " " << (r.certified ? "true" : "false")
                << "\n";
    };
    try {
        print(find_all_roots(p, cfg));
    } catch (const SeedingFailedWithPartial& failure) {
        print(failure.partial);
        err << failure.what() << "\n";
        return 1;
    }
    return 0;
}

inline int run_command_impl(const RadiusCommand& cmd, std::ostream& out, std::ostream& err) {
    const Polynomial p = input_polynomial(cmd.coeffs, cmd.roots);
    if (p.degree() < 4) {
        err << "degree must exceed 3\n";
        return 1;
    }
    std::string lines;
    for (const RootEstimate& r : find_all_roots(p)) {
        const ConvergenceDisk disk = convergence_radius(p, r.value);
        lines += format_double(std::real(r.value)) + " " + format_double(std::imag(r.value)) +
                 " " + format_double(disk.radius) + "\n";
    }
    out << lines << "apriori " << format_double(a_priori_radius_bound(p)) << "\n";
    return 0;
}

inline int run_command_impl(const RenderCommand& cmd, std::ostream& out, std::ostream& err) {
    const RootSet rs(parse_complex_list(cmd.roots));
    const RasterConfig cfg{single_complex(cmd.center), cmd.side, cmd.px, cmd.max_iter};
    std::vector<ConvergenceDisk> disks;
    if (rs.degree() >= 4) {
        const Polynomial p = from_roots(rs.roots());
        try {
            for (const Complex& root : rs.roots())
                disks.push_back(convergence_radius(p, root));
        } catch (const NotASimpleRoot&) {
            disks.clear(); // near-multiple roots: fall back to proximity stopping
        }
    }
    const BasinImage img = render_basins(rs, disks, cfg);
    std::ofstream file(cmd.out_path, std::ios::binary);
    file << write_ppm(img, rs.degree());
    if (!file.flush()) {
        err << "cannot write " << cmd.out_path << "\n";
        return 1;
    }
    if (!cmd.stats_path.empty()) {
        std::ofstream stats(cmd.stats_path);
        stats << basin_stats(img, rs.degree());
        if (!stats.flush()) {
            err << "cannot write " << cmd.stats_path << "\n";
            return 1;
        }
    }
    out << "wrote " << cmd.out_path << " " << cmd.px << "x" << cmd.px << "\n";
    return 0;
}

} // namespace detail

/// Execute a parsed command. Malformed input text exits 2; numeric
/// failures exit 1 (with partial results printed when available);
/// success exits 0. All diagnostics go to `err` as a single line.
inline int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        return std::visit(
            [&](const auto& c) { return detail::run_command_impl(c, out, err); }, cmd);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
}

} // namespace laspa
