// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#pragma once

#include <vector>

#include "core/filterbank.hpp"
#include "core/image.hpp"

namespace monoline {

/// Bandpassed even part plus the two Riesz odd parts at one scale. All three
/// rasters are real and share the input image's dimensions.
struct MonogenicScale {
    RealImage even;   // f_e
    RealImage odd1;   // f_o1, x-direction odd part
    RealImage odd2;   // f_o2, y-direction odd part
    LogGabor2DParams params;
};

/// Spherical-polar readouts of a MonogenicScale.
struct MonogenicMaps {
    RealImage amplitude;      // >= 0
    RealImage phase;          // in [0, pi]
    RealImage orientation;    // in (-pi, pi]
    RealImage odd_magnitude;  // >= 0
};

/// Filters the image with every scale of the bank. Per scale this costs one
/// inverse transform for the even part and one for the combined complex odd
/// filter (whose real/imaginary parts are odd1/odd2); the forward transform
/// of the image is shared across scales.
std::vector<MonogenicScale> compute_monogenic(const RealImage& img, const FilterBank& bank);

RealImage local_amplitude(const MonogenicScale& ms);

/// Elevation angle between the even part and the combined odd magnitude;
/// always in [0, pi] because the combined odd part is non-negative. 0 where
/// the amplitude is 0.
RealImage local_phase(const MonogenicScale& ms);

/// Azimuth of the odd response, atan2(odd2, odd1) in (-pi, pi], pointing
/// uphill towards increasing intensity. 0 where the odd magnitude is 0
/// (unreliable there; mask with the amplitude map).
RealImage local_orientation(const MonogenicScale& ms);

/// sqrt(odd1^2 + odd2^2); direction information is lost.
RealImage combined_odd(const MonogenicScale& ms);

MonogenicMaps monogenic_maps(const MonogenicScale& ms);

/// Local cosine model evaluated on a size x size patch centred at the
/// estimation point: amplitude * cos(x' . n(orientation) + phase) with x' in
/// pixels relative to the centre. size must be odd and >= 3.
RealImage local_model_patch(double amplitude, double phase, double orientation,
                            std::size_t size);

}  // namespace monoline
