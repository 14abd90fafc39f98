// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "core/grid.hpp"

#include <cmath>
#include <numbers>

namespace monoline {

FreqAxis1D build_freq_axis_1d(std::size_t n) {
    if (n == 0) {
        throw InvalidSizeError("build_freq_axis_1d: n must be positive");
    }
    constexpr double tau = 2.0 * std::numbers::pi;
    FreqAxis1D axis;
    axis.n = n;
    axis.omega.resize(n);
    const std::size_t half = (n - 1) / 2;
    for (std::size_t k = 0; k < n; ++k) {
        // Signed bin index keeps omega[n-k] == -omega[k] exact.
        const double s = k <= half ? static_cast<double>(k)
                                   : static_cast<double>(k) - static_cast<double>(n);
        axis.omega[k] = tau * s / static_cast<double>(n);
    }
    return axis;
}

FrequencyGrid2D build_grid_2d(std::size_t height, std::size_t width) {
    if (height == 0 || width == 0) {
        throw InvalidSizeError("build_grid_2d: dimensions must be positive");
    }
    const FreqAxis1D ax = build_freq_axis_1d(width);
    const FreqAxis1D ay = build_freq_axis_1d(height);

    FrequencyGrid2D grid;
    grid.height = height;
    grid.width = width;
    grid.radius.resize(height * width);
    grid.dir_x.assign(height * width, 0.0);
    grid.dir_y.assign(height * width, 0.0);
    grid.self_conjugate.assign(height * width, 0);

    const bool even_h = height % 2 == 0;
    const bool even_w = width % 2 == 0;
    for (std::size_t y = 0; y < height; ++y) {
        const bool y_fixed = y == 0 || (even_h && y == height / 2);
        for (std::size_t x = 0; x < width; ++x) {
            const std::size_t idx = y * width + x;
            const double wx = ax.omega[x];
            const double wy = ay.omega[y];
            // hypot(x, 0) == |x| exactly, so pure-axis bins keep their
            // axis frequency bit-for-bit.
            const double r = std::hypot(wx, wy);
            grid.radius[idx] = r;
            const bool x_fixed = x == 0 || (even_w && x == width / 2);
            if (y_fixed && x_fixed) {
                grid.self_conjugate[idx] = 1;
            } else if (r > 0.0) {
                grid.dir_x[idx] = wx / r;
                grid.dir_y[idx] = wy / r;
            }
        }
    }
    return grid;
}

}  // namespace monoline
