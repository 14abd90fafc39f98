// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/image.hpp"

namespace monoline {

/// Angular frequencies (radians/sample) per DFT bin, in FFT bin order:
/// omega[0] = 0, bins 1..floor((n-1)/2) positive, the rest negative, and for
/// even n the Nyquist bin n/2 carries -pi.
struct FreqAxis1D {
    std::size_t n = 0;
    std::vector<double> omega;
};

FreqAxis1D build_freq_axis_1d(std::size_t n);

/// Per-bin radial frequency and unit direction for a 2D DFT, FFT bin order.
/// Self-conjugate bins (their own conjugate partner under index negation:
/// DC plus the Nyquist corners for even dimensions) carry zero direction so
/// that every odd-filtered spectrum stays Hermitian and inverse transforms of
/// odd parts come out purely real.
struct FrequencyGrid2D {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> radius;
    std::vector<double> dir_x;
    std::vector<double> dir_y;
    std::vector<std::uint8_t> self_conjugate;

    bool masked(std::size_t y, std::size_t x) const {
        return self_conjugate[y * width + x] != 0;
    }
};

FrequencyGrid2D build_grid_2d(std::size_t height, std::size_t width);

}  // namespace monoline
