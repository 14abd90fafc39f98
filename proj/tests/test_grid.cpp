// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "core/grid.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"

using namespace monoline;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("frequency axis bin convention") {
    const auto axis = build_freq_axis_1d(4);
    REQUIRE(axis.omega.size() == 4);
    CHECK(axis.omega[0] == 0.0);
    CHECK(axis.omega[1] == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(axis.omega[2] == -pi);  // Nyquist carried negative, exact
    CHECK(axis.omega[3] == doctest::Approx(-pi / 2).epsilon(1e-15));

    const auto odd = build_freq_axis_1d(5);
    CHECK(odd.omega[0] == 0.0);
    CHECK(odd.omega[1] == doctest::Approx(2 * pi / 5));
    CHECK(odd.omega[2] == doctest::Approx(4 * pi / 5));
    CHECK(odd.omega[3] == doctest::Approx(-4 * pi / 5));
    CHECK(odd.omega[4] == doctest::Approx(-2 * pi / 5));

    const auto dc = build_freq_axis_1d(1);
    REQUIRE(dc.omega.size() == 1);
    CHECK(dc.omega[0] == 0.0);
}

TEST_CASE("frequency axis rejects n = 0") {
    CHECK_THROWS_AS(build_freq_axis_1d(0), InvalidSizeError);
}

TEST_CASE("axis negation symmetry is exact") {
    for (std::size_t n : {4u, 7u, 12u, 16u, 33u}) {
        const auto axis = build_freq_axis_1d(n);
        for (std::size_t k = 1; k < n; ++k) {
            if (n % 2 == 0 && k == n / 2) continue;  // self-paired Nyquist
            CHECK(axis.omega[n - k] == -axis.omega[k]);
        }
    }
}

TEST_CASE("grid 4x4 anchor bins") {
    const auto grid = build_grid_2d(4, 4);
    CHECK(grid.radius[0] == 0.0);
    CHECK(grid.dir_x[0] == 0.0);
    CHECK(grid.dir_y[0] == 0.0);

    // bin (0,1): horizontal frequency pi/2, no vertical component
    CHECK(grid.radius[1] == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(grid.dir_x[1] == 1.0);
    CHECK(grid.dir_y[1] == 0.0);

    const std::set<std::pair<std::size_t, std::size_t>> expected{
        {0, 0}, {0, 2}, {2, 0}, {2, 2}};
    for (std::size_t y = 0; y < 4; ++y) {
        for (std::size_t x = 0; x < 4; ++x) {
            CHECK(grid.masked(y, x) == (expected.count({y, x}) > 0));
        }
    }
}

TEST_CASE("grid rejects zero dimensions") {
    CHECK_THROWS_AS(build_grid_2d(0, 4), InvalidSizeError);
    CHECK_THROWS_AS(build_grid_2d(4, 0), InvalidSizeError);
}

TEST_CASE("self-conjugate mask equals conjugate-partner fixed points, brute force") {
    for (std::size_t h = 1; h <= 16; ++h) {
        for (std::size_t w = 1; w <= 16; ++w) {
            const auto grid = build_grid_2d(h, w);
            for (std::size_t y = 0; y < h; ++y) {
                for (std::size_t x = 0; x < w; ++x) {
                    const bool fixed = ((h - y) % h == y) && ((w - x) % w == x);
                    CHECK(grid.masked(y, x) == fixed);
                }
            }
        }
    }
}

TEST_CASE("direction field is odd under index negation and unit length") {
    for (auto [h, w] : {std::pair<std::size_t, std::size_t>{8, 8}, {7, 9}, {6, 11}, {16, 16}}) {
        const auto grid = build_grid_2d(h, w);
        for (std::size_t y = 0; y < h; ++y) {
            for (std::size_t x = 0; x < w; ++x) {
                const std::size_t ny = (h - y) % h, nx = (w - x) % w;
                if (!grid.masked(y, x)) {
                    CHECK(grid.dir_x[ny * w + nx] == -grid.dir_x[y * w + x]);
                    CHECK(grid.dir_y[ny * w + nx] == -grid.dir_y[y * w + x]);
                    if (grid.radius[y * w + x] > 0.0) {
                        const double dx = grid.dir_x[y * w + x], dy = grid.dir_y[y * w + x];
                        CHECK(std::abs(dx * dx + dy * dy - 1.0) < 1e-14);
                    }
                } else {
                    CHECK(grid.dir_x[y * w + x] == 0.0);
                    CHECK(grid.dir_y[y * w + x] == 0.0);
                }
            }
        }
    }
}
