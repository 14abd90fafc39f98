// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "core/monogenic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/fft.hpp"

namespace monoline {

std::vector<MonogenicScale> compute_monogenic(const RealImage& img, const FilterBank& bank) {
    require_nonempty_image(img, "compute_monogenic");
    if (img.height != bank.grid.height || img.width != bank.grid.width) {
        throw ShapeMismatchError("compute_monogenic: image dimensions do not match bank grid");
    }
    require_finite(img.samples, "compute_monogenic");

    const ComplexImage spectrum = fft::forward_2d_real(img);
    const std::size_t n = spectrum.size();

    std::vector<MonogenicScale> scales;
    scales.reserve(bank.num_scales());
    for (std::size_t s = 0; s < bank.num_scales(); ++s) {
        ComplexImage even_spec(img.height, img.width);
        ComplexImage odd_spec(img.height, img.width);
        const auto& gain = bank.even[s].samples;
        const auto& odd_filter = bank.odd_complex[s].samples;
        for (std::size_t i = 0; i < n; ++i) {
            even_spec.samples[i] = spectrum.samples[i] * gain[i];
            odd_spec.samples[i] = spectrum.samples[i] * odd_filter[i];
        }
        const ComplexImage even_img = fft::inverse_2d(even_spec);
        const ComplexImage odd_img = fft::inverse_2d(odd_spec);

        MonogenicScale ms;
        ms.params = bank.scales[s];
        ms.even = RealImage(img.height, img.width);
        ms.odd1 = RealImage(img.height, img.width);
        ms.odd2 = RealImage(img.height, img.width);
        double max_abs = 0.0, max_imag = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto e = even_img.samples[i];
            ms.even.samples[i] = e.real();
            max_abs = std::max(max_abs, std::abs(e.real()));
            max_imag = std::max(max_imag, std::abs(e.imag()));
            ms.odd1.samples[i] = odd_img.samples[i].real();
            ms.odd2.samples[i] = odd_img.samples[i].imag();
        }
        // The even spectrum is Hermitian by construction; a visible imaginary
        // residue means the transform or filter state is corrupt.
        if (max_imag > 1e-9 * std::max(max_abs, 1e-300)) {
            throw std::logic_error("compute_monogenic: even part has non-real residue");
        }
        scales.push_back(std::move(ms));
    }
    return scales;
}

RealImage local_amplitude(const MonogenicScale& ms) {
    RealImage out(ms.even.height, ms.even.width);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double e = ms.even.samples[i];
        const double o1 = ms.odd1.samples[i];
        const double o2 = ms.odd2.samples[i];
        out.samples[i] = std::sqrt(e * e + o1 * o1 + o2 * o2);
    }
    return out;
}

RealImage local_phase(const MonogenicScale& ms) {
    RealImage out(ms.even.height, ms.even.width);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double e = ms.even.samples[i];
        const double o = std::hypot(ms.odd1.samples[i], ms.odd2.samples[i]);
        out.samples[i] = (e == 0.0 && o == 0.0) ? 0.0 : std::atan2(o, e);
    }
    return out;
}

RealImage local_orientation(const MonogenicScale& ms) {
    RealImage out(ms.even.height, ms.even.width);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double o1 = ms.odd1.samples[i];
        const double o2 = ms.odd2.samples[i];
        double theta = (o1 == 0.0 && o2 == 0.0) ? 0.0 : std::atan2(o2, o1);
        if (theta == -std::numbers::pi) theta = std::numbers::pi;
        out.samples[i] = theta;
    }
    return out;
}

RealImage combined_odd(const MonogenicScale& ms) {
    RealImage out(ms.even.height, ms.even.width);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.samples[i] = std::hypot(ms.odd1.samples[i], ms.odd2.samples[i]);
    }
    return out;
}

MonogenicMaps monogenic_maps(const MonogenicScale& ms) {
    return MonogenicMaps{local_amplitude(ms), local_phase(ms), local_orientation(ms),
                         combined_odd(ms)};
}

RealImage local_model_patch(double amplitude, double phase, double orientation,
                            std::size_t size) {
    if (size < 3 || size % 2 == 0) {
        throw InvalidInputError("local_model_patch: size must be odd and >= 3");
    }
    const double nx = std::cos(orientation);
    const double ny = std::sin(orientation);
    const double half = static_cast<double>(size / 2);
    RealImage out(size, size);
    for (std::size_t y = 0; y < size; ++y) {
        const double dy = static_cast<double>(y) - half;
        for (std::size_t x = 0; x < size; ++x) {
            const double dx = static_cast<double>(x) - half;
            out.at(y, x) = amplitude * std::cos(dx * nx + dy * ny + phase);
        }
    }
    return out;
}

}  // namespace monoline
