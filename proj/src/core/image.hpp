// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "core/errors.hpp"

namespace monoline {

/// Real-valued 2D raster, row-major, first index is the vertical (y) axis.
struct RealImage {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> samples;

    RealImage() = default;
    RealImage(std::size_t h, std::size_t w, double fill = 0.0)
        : height(h), width(w), samples(h * w, fill) {}

    double& at(std::size_t y, std::size_t x) { return samples[y * width + x]; }
    double at(std::size_t y, std::size_t x) const { return samples[y * width + x]; }
    std::size_t size() const { return samples.size(); }

    bool same_shape(const RealImage& other) const {
        return height == other.height && width == other.width;
    }
};

/// Complex-valued companion of RealImage; used for spectra and filters.
struct ComplexImage {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<std::complex<double>> samples;

    ComplexImage() = default;
    ComplexImage(std::size_t h, std::size_t w)
        : height(h), width(w), samples(h * w) {}

    std::complex<double>& at(std::size_t y, std::size_t x) { return samples[y * width + x]; }
    const std::complex<double>& at(std::size_t y, std::size_t x) const {
        return samples[y * width + x];
    }
    std::size_t size() const { return samples.size(); }
};

inline void require_finite(const std::vector<double>& samples, const char* what) {
    for (double v : samples) {
        if (!std::isfinite(v)) {
            throw InvalidInputError(std::string(what) + ": non-finite sample");
        }
    }
}

inline void require_nonempty_image(const RealImage& img, const char* what) {
    if (img.height == 0 || img.width == 0) {
        throw InvalidSizeError(std::string(what) + ": zero image dimension");
    }
}

/// Symmetric (half-sample mirror) extension to double size in each axis.
/// Row i of the result reads row i for i < H and row 2H-1-i after; same for
/// columns. Cropping the top-left H x W block recovers the original.
RealImage mirror_pad_double(const RealImage& img);

/// Top-left anchored rectangular crop.
RealImage crop(const RealImage& img, std::size_t y0, std::size_t x0,
               std::size_t h, std::size_t w);

}  // namespace monoline
