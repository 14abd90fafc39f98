// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "core/grid.hpp"
#include "core/image.hpp"

namespace monoline {

struct LogGabor2DParams {
    double center_wavelength = 8.0;  // pixels per cycle, > 2
    double sigma0 = 0.5;             // in (0, 1)

    double center_frequency() const;
    void validate() const;

    bool operator==(const LogGabor2DParams&) const = default;
};

/// Radially symmetric log-Gabor gain over the grid: unit at the centre
/// frequency, zero at DC, a function of radius only.
RealImage radial_log_gabor(const FrequencyGrid2D& grid, const LogGabor2DParams& p);

/// Frequency-domain multipliers i*dir_x and i*dir_y. Zero at self-conjugate
/// bins so odd-filtered spectra of real images stay Hermitian.
std::pair<ComplexImage, ComplexImage> riesz_multipliers(const FrequencyGrid2D& grid);

/// Combined odd filter (i*dir_x - dir_y) * even: one complex raster whose
/// inverse transform carries both odd parts as its real and imaginary parts.
ComplexImage complex_odd_filter(const FrequencyGrid2D& grid, const RealImage& even);

/// One even and one complex-odd raster per scale over a shared grid.
/// Immutable after construction; safe to share across threads.
struct FilterBank {
    FrequencyGrid2D grid;
    std::vector<LogGabor2DParams> scales;
    std::vector<RealImage> even;
    std::vector<ComplexImage> odd_complex;

    std::size_t num_scales() const { return scales.size(); }
};

FilterBank build_filter_bank(const FrequencyGrid2D& grid,
                             std::span<const LogGabor2DParams> scales);

/// Process-wide bank cache keyed by (height, width, scale parameters).
class FilterBankCache {
public:
    std::shared_ptr<const FilterBank> get(std::size_t height, std::size_t width,
                                          std::span<const LogGabor2DParams> scales);
    void clear();

    static FilterBankCache& global();

private:
    struct Impl;
    std::shared_ptr<Impl> impl_ = make_impl();
    static std::shared_ptr<Impl> make_impl();
};

}  // namespace monoline
