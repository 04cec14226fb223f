#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "laspa/laguerre.hpp"
#include "laspa/roots_iteration.hpp"

namespace laspa {

/// Square region of the complex plane sampled at px * px pixel centers.
struct RasterConfig {
    Complex center;
    double side;
    int px;
    int max_iters = 64;
};

/// Outcome for one starting point: which root's stopping region was entered
/// (nullopt = never stopped) and after how many steps.
struct BasinPixel {
    std::optional<int> root_index;
    int iters;
};

struct BasinImage {
    RasterConfig config;
    std::vector<BasinPixel> pixels; // row-major; row 0 = top (max imaginary)
};

/// Row-major pixel centers: row 0 carries the maximal imaginary part,
/// column 0 the minimal real part, samples at cell centers.
inline std::vector<Complex> pixel_grid(const RasterConfig& cfg) {
    if (!(cfg.side > 0.0) || cfg.px < 1 || cfg.max_iters < 1)
        throw std::invalid_argument("pixel_grid: need side > 0, px >= 1, max_iters >= 1");
    std::vector<Complex> grid;
    grid.reserve(static_cast<std::size_t>(cfg.px) * static_cast<std::size_t>(cfg.px));
    const double step = cfg.side / static_cast<double>(cfg.px);
    for (int i = 0; i < cfg.px; ++i) {
        const double im =
            std::imag(cfg.center) + cfg.side / 2.0 - (static_cast<double>(i) + 0.5) * step;
        for (int j = 0; j < cfg.px; ++j) {
            const double re =
                std::real(cfg.center) - cfg.side / 2.0 + (static_cast<double>(j) + 0.5) * step;
            grid.emplace_back(re, im);
        }
    }
    return grid;
}

/// Iterate the root-form Laguerre step from z0 and report the first stopping
/// region entered. Membership is tested for z0 itself (iteration 0) and
/// after every step, against the disks in index order; without disks
/// (degree < 4 regime) proximity |z - rho_k| < 1e-9 max(1, |rho_k|) stops
/// instead. Landing exactly on a root counts as hitting it; a singular step
/// means the pixel never stops.
inline BasinPixel iterate_pixel(const RootSet& rs, std::span<const ConvergenceDisk> disks,
                                Complex z0, int max_iters) {
    const std::vector<Complex>& roots = rs.roots();
    auto hit = [&](Complex z) -> std::optional<int> {
        if (!disks.empty()) {
            for (std::size_t k = 0; k < disks.size(); ++k)
                if (disks[k].contains(z))
                    return static_cast<int>(k);
            return std::nullopt;
        }
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (std::abs(z - roots[k]) < 1e-9 * std::max(1.0, std::abs(roots[k])))
                return static_cast<int>(k);
        return std::nullopt;
    };
    Complex z = z0;
    for (int i = 0; i <= max_iters; ++i) {
        if (std::optional<int> k = hit(z))
            return {k, i};
        if (i == max_iters)
            break;
        try {
            z = laguerre_step_from_roots(rs, z);
        } catch (const PoleAtRoot&) {
            std::size_t nearest = 0;
            for (std::size_t k = 1; k < roots.size(); ++k)
                if (std::abs(z - roots[k]) < std::abs(z - roots[nearest]))
                    nearest = k;
            return {static_cast<int>(nearest), i};
        } catch (const SingularStep&) {
            return {std::nullopt, max_iters};
        }
    }
    return {std::nullopt, max_iters};
}

/// Color for one pixel: unconverged is black; otherwise hue encodes the
/// root index (360 k / n degrees), brightness the speed (value 1 at 0
/// iterations down to 0.35 at max_iters), saturation fixed at 0.9,
/// converted by the standard HSV sector formula with floor to bytes.
inline std::array<unsigned char, 3> colorize(const BasinPixel& pixel, int n, int max_iters) {
    if (!pixel.root_index)
        return {0, 0, 0};
    const double hue = 360.0 * static_cast<double>(*pixel.root_index) / static_cast<double>(n);
    const double sat = 0.9;
    const double value =
        0.35 + 0.65 * (1.0 - static_cast<double>(pixel.iters) / static_cast<double>(max_iters));
    const double c = value * sat;
    const double hp = hue / 60.0;
    const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    const double m = value - c;
    double r = 0.0, g = 0.0, b = 0.0;
    switch (static_cast<int>(hp)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
    }
    auto byte = [&](double channel) {
        return static_cast<unsigned char>(std::floor((channel + m) * 255.0));
    };
    return {byte(r), byte(g), byte(b)};
}

/// Render every pixel of the configured square. Pixels are independent;
/// work is split across threads by row ranges, each result written to its
/// own index, so the image is bit-identical for any thread count.
/// threads = 0 picks the hardware concurrency; threads = 1 runs serially.
inline BasinImage render_basins(const RootSet& rs, std::span<const ConvergenceDisk> disks,
                                const RasterConfig& cfg, unsigned threads = 0) {
    const std::vector<Complex> grid = pixel_grid(cfg);
    BasinImage img{cfg, std::vector<BasinPixel>(grid.size())};
    auto rows = [&](int row_begin, int row_end) {
        for (int i = row_begin; i < row_end; ++i)
            for (int j = 0; j < cfg.px; ++j) {
                const std::size_t idx = static_cast<std::size_t>(i) *
                                            static_cast<std::size_t>(cfg.px) +
                                        static_cast<std::size_t>(j);
                img.pixels[idx] = iterate_pixel(rs, disks, grid[idx], cfg.max_iters);
            }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, static_cast<unsigned>(cfg.px));
    if (threads <= 1) {
        rows(0, cfg.px);
        return img;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const int per = (cfg.px + static_cast<int>(threads) - 1) / static_cast<int>(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const int begin = static_cast<int>(t) * per;
        const int end = std::min(cfg.px, begin + per);
        if (begin < end)
            pool.emplace_back(rows, begin, end);
    }
    for (std::thread& t : pool)
        t.join();
    return img;
}

/// Binary PPM (P6) bytes: "P6\n{px} {px}\n255\n" then row-major RGB triples.
inline std::string write_ppm(const BasinImage& img, int n) {
    std::string out = "P6\n" + std::to_string(img.config.px) + " " +
                      std::to_string(img.config.px) + "\n255\n";
    out.reserve(out.size() + 3 * img.pixels.size());
    for (const BasinPixel& px : img.pixels) {
        const std::array<unsigned char, 3> rgb = colorize(px, n, img.config.max_iters);
        out.push_back(static_cast<char>(rgb[0]));
        out.push_back(static_cast<char>(rgb[1]));
        out.push_back(static_cast<char>(rgb[2]));
    }
    return out;
}

/// Histogram sidecar: one "root_index count" line per root, then the
/// unconverged tally as "none count".
inline std::string basin_stats(const BasinImage& img, int n) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(n), 0);
    std::size_t none = 0;
    for (const BasinPixel& px : img.pixels) {
        if (px.root_index)
            ++counts[static_cast<std::size_t>(*px.root_index)];
        else
            ++none;
    }
    std::string out;
    for (int k = 0; k < n; ++k)
        out += std::to_string(k) + " " + std::to_string(counts[static_cast<std::size_t>(k)]) + "\n";
    out += "none " + std::to_string(none) + "\n";
    return out;
}

} // namespace laspa
