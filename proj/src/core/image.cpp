// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "core/image.hpp"

namespace monoline {

RealImage mirror_pad_double(const RealImage& img) {
    require_nonempty_image(img, "mirror_pad_double");
    const std::size_t h = img.height, w = img.width;
    RealImage out(2 * h, 2 * w);
    for (std::size_t y = 0; y < 2 * h; ++y) {
        const std::size_t sy = y < h ? y : 2 * h - 1 - y;
        for (std::size_t x = 0; x < 2 * w; ++x) {
            const std::size_t sx = x < w ? x : 2 * w - 1 - x;
            out.at(y, x) = img.at(sy, sx);
        }
    }
    return out;
}

RealImage crop(const RealImage& img, std::size_t y0, std::size_t x0,
               std::size_t h, std::size_t w) {
    if (h == 0 || w == 0) {
        throw InvalidSizeError("crop: zero output dimension");
    }
    if (y0 + h > img.height || x0 + w > img.width) {
        throw ShapeMismatchError("crop: window exceeds image bounds");
    }
    RealImage out(h, w);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            out.at(y, x) = img.at(y0 + y, x0 + x);
        }
    }
    return out;
}

}  // namespace monoline
