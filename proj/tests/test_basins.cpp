#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laspa/basins.hpp"
#include "laspa/laguerre.hpp"
#include "support.hpp"

using laspa::BasinImage;
using laspa::BasinPixel;
using laspa::Complex;
using laspa::RasterConfig;
using laspa::RootSet;

namespace {

double dist(Complex a, Complex b) { return std::abs(a - b); }

const RootSet pair_roots({1.0, -1.0});
const RootSet unit_roots({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});

std::vector<laspa::ConvergenceDisk> unit_disks() {
    const laspa::Polynomial p({-1, 0, 0, 0, 1});
    std::vector<laspa::ConvergenceDisk> disks;
    for (const Complex& r : unit_roots.roots())
        disks.push_back(laspa::convergence_radius(p, r));
    return disks;
}

} // namespace

TEST_CASE("pixel centers cover the square row-major from the top", "[basins]") {
    const std::vector<Complex> grid = laspa::pixel_grid({{0, 0}, 4.0, 2, 64});
    REQUIRE(grid.size() == 4);
    CHECK(grid[0] == Complex(-1, 1));
    CHECK(grid[1] == Complex(1, 1));
    CHECK(grid[2] == Complex(-1, -1));
    CHECK(grid[3] == Complex(1, -1));

    const std::vector<Complex> unit = laspa::pixel_grid({{0, 0}, 2.0, 1, 64});
    REQUIRE(unit.size() == 1);
    CHECK(unit[0] == Complex(0, 0));

    const std::vector<Complex> offset = laspa::pixel_grid({{3, 4}, 2.0, 2, 64});
    REQUIRE(offset.size() == 4);
    CHECK(offset[0] == Complex(2.5, 4.5));
    CHECK(offset[1] == Complex(3.5, 4.5));
    CHECK(offset[2] == Complex(2.5, 3.5));
    CHECK(offset[3] == Complex(3.5, 3.5));

    CHECK_THROWS_AS(laspa::pixel_grid({{0, 0}, -1.0, 2, 64}), std::invalid_argument);
    CHECK_THROWS_AS(laspa::pixel_grid({{0, 0}, 4.0, 0, 64}), std::invalid_argument);
}

TEST_CASE("pixel iteration stops by proximity without disks", "[basins]") {
    const BasinPixel lands = laspa::iterate_pixel(pair_roots, {}, {1.0, 1.0}, 64);
    REQUIRE(lands.root_index.has_value());
    CHECK(*lands.root_index == 0);
    CHECK(lands.iters == 1);

    const BasinPixel start_on_root = laspa::iterate_pixel(pair_roots, {}, {1.0, 0.0}, 64);
    REQUIRE(start_on_root.root_index.has_value());
    CHECK(*start_on_root.root_index == 0);
    CHECK(start_on_root.iters == 0);

    // On the perpendicular bisector the candidates tie; the + candidate
    // swings the start toward -1, and for two roots the step is exact, so
    // one step lands within proximity range of the root.
    const BasinPixel bisector = laspa::iterate_pixel(pair_roots, {}, {0.0, 0.3}, 64);
    REQUIRE(bisector.root_index.has_value());
    CHECK(*bisector.root_index == 1);
    CHECK(bisector.iters == 1);
}

TEST_CASE("pixel iteration stops by disk membership with disks", "[basins]") {
    const std::vector<laspa::ConvergenceDisk> disks = unit_disks();

    const BasinPixel inside = laspa::iterate_pixel(unit_roots, disks, {1.005, 0.0}, 64);
    REQUIRE(inside.root_index.has_value());
    CHECK(*inside.root_index == 0);
    CHECK(inside.iters == 0);

    const BasinPixel near = laspa::iterate_pixel(unit_roots, disks, {0.9, 0.0}, 64);
    REQUIRE(near.root_index.has_value());
    CHECK(*near.root_index == 0);
    CHECK(near.iters >= 1);
    CHECK(near.iters <= 4);

    // The symmetric center is a singular point of the step: never stops.
    const BasinPixel singular = laspa::iterate_pixel(unit_roots, disks, {0.0, 0.0}, 64);
    CHECK_FALSE(singular.root_index.has_value());
    CHECK(singular.iters == 64);
}

TEST_CASE("converged pixels really end inside the reported disk", "[basins]") {
    const std::vector<laspa::ConvergenceDisk> disks = unit_disks();
    const RasterConfig cfg{{0, 0}, 4.0, 16, 64};
    const std::vector<Complex> grid = laspa::pixel_grid(cfg);
    const BasinImage img = laspa::render_basins(unit_roots, disks, cfg, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const BasinPixel& px = img.pixels[i];
        if (!px.root_index)
            continue;
        Complex z = grid[i];
        for (int s = 0; s < px.iters; ++s)
            z = laspa::laguerre_step_from_roots(unit_roots, z);
        CHECK(disks[static_cast<std::size_t>(*px.root_index)].contains(z));
    }
}

TEST_CASE("colors encode root index and iteration count", "[basins]") {
    const std::array<unsigned char, 3> none = laspa::colorize({std::nullopt, 64}, 2, 64);
    CHECK(none == std::array<unsigned char, 3>{0, 0, 0});

    const std::array<unsigned char, 3> fast = laspa::colorize({0, 1}, 2, 64);
    CHECK(fast == std::array<unsigned char, 3>{252, 25, 25});

    const std::array<unsigned char, 3> slow = laspa::colorize({0, 64}, 2, 64);
    CHECK(slow == std::array<unsigned char, 3>{89, 8, 8});

    const std::array<unsigned char, 3> other = laspa::colorize({1, 1}, 2, 64);
    CHECK(other == std::array<unsigned char, 3>{25, 252, 252});
}

TEST_CASE("tiny renders match the hand-checked grids", "[basins]") {
    const BasinImage two = laspa::render_basins(pair_roots, {}, {{0, 0}, 4.0, 2, 64}, 1);
    REQUIRE(two.pixels.size() == 4);
    // Left column starts nearer -1, right column nearer 1; each lands in
    // one step. (Top/bottom rows mirror.)
    const std::vector<std::pair<int, int>> expected{{1, 1}, {0, 1}, {1, 1}, {0, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(two.pixels[i].root_index.has_value());
        CHECK(*two.pixels[i].root_index == expected[i].first);
        CHECK(two.pixels[i].iters == expected[i].second);
    }

    const BasinImage tie = laspa::render_basins(pair_roots, {}, {{0, 0}, 1.0, 1, 64}, 1);
    REQUIRE(tie.pixels.size() == 1);
    REQUIRE(tie.pixels[0].root_index.has_value());
    CHECK(*tie.pixels[0].root_index == 1);
    CHECK(tie.pixels[0].iters == 1);

    const BasinImage on_root =
        laspa::render_basins(pair_roots, {}, {{1, 0}, 1.0, 1, 64}, 1);
    REQUIRE(on_root.pixels[0].root_index.has_value());
    CHECK(*on_root.pixels[0].root_index == 0);
    CHECK(on_root.pixels[0].iters == 0);
}

TEST_CASE("mirroring the square swaps the two basins", "[basins]") {
    const int px = 16; // even: no pixel sits on the tie bisector
    const BasinImage img = laspa::render_basins(pair_roots, {}, {{0, 0}, 4.0, px, 64}, 1);
    for (int i = 0; i < px; ++i)
        for (int j = 0; j < px; ++j) {
            const BasinPixel& a =
                img.pixels[static_cast<std::size_t>(i * px + j)];
            const BasinPixel& b =
                img.pixels[static_cast<std::size_t>(i * px + (px - 1 - j))];
            REQUIRE(a.root_index.has_value() == b.root_index.has_value());
            if (a.root_index)
                CHECK(*a.root_index == 1 - *b.root_index);
            CHECK(a.iters == b.iters);
        }
}

TEST_CASE("thread count does not change the image", "[basins]") {
    const std::vector<laspa::ConvergenceDisk> disks = unit_disks();
    const RasterConfig cfg{{0, 0}, 4.0, 64, 64};
    const BasinImage serial = laspa::render_basins(unit_roots, disks, cfg, 1);
    const BasinImage parallel = laspa::render_basins(unit_roots, disks, cfg, 4);
    REQUIRE(serial.pixels.size() == parallel.pixels.size());
    for (std::size_t i = 0; i < serial.pixels.size(); ++i) {
        CHECK(serial.pixels[i].root_index == parallel.pixels[i].root_index);
        CHECK(serial.pixels[i].iters == parallel.pixels[i].iters);
    }

    std::size_t unconverged = 0;
    for (const BasinPixel& p : serial.pixels)
        if (!p.root_index)
            ++unconverged;
    CHECK(unconverged * 100 <= serial.pixels.size()); // <= 1%
}

TEST_CASE("PPM bytes are exact", "[basins]") {
    BasinImage one{{{0, 0}, 1.0, 1, 64}, {{std::nullopt, 64}}};
    const std::string black = laspa::write_ppm(one, 2);
    REQUIRE(black.size() == 14);
    CHECK(black.substr(0, 11) == "P6\n1 1\n255\n");
    CHECK(black[11] == '\0');
    CHECK(black[12] == '\0');
    CHECK(black[13] == '\0');

    BasinImage four{{{0, 0}, 1.0, 2, 64},
                    {{0, 1}, {std::nullopt, 64}, {std::nullopt, 64}, {0, 1}}};
    const std::string bytes = laspa::write_ppm(four, 2);
    REQUIRE(bytes.size() == 11 + 12);
    CHECK(bytes.substr(0, 11) == "P6\n2 2\n255\n");
    CHECK(static_cast<unsigned char>(bytes[11]) == 0xFC);
    CHECK(static_cast<unsigned char>(bytes[12]) == 0x19);
    CHECK(static_cast<unsigned char>(bytes[13]) == 0x19);
}

TEST_CASE("stats sidecar counts hits per root", "[basins]") {
    BasinImage img{{{0, 0}, 1.0, 2, 64},
                   {{0, 1}, {std::nullopt, 64}, {1, 3}, {0, 2}}};
    CHECK(laspa::basin_stats(img, 2) == "0 2\n1 1\nnone 1\n");
}
