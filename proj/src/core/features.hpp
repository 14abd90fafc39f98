// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#pragma once

#include <span>
#include <vector>

#include "core/image.hpp"
#include "core/monogenic.hpp"

namespace monoline {

struct FeatureParams {
    double threshold = 0.18;  // T, amplitude units on [0,1]-normalized images
    double epsilon = 1e-3;    // stabilizer, > 0

    void validate() const;
};

enum class FeatureKind {
    Symmetry,
    Asymmetry,
    SignedSymmetry,
    OrientedAsymmetry,
    MultiscaleSymmetry,
    MultiscaleAsymmetry,
    MultiscaleSignedSymmetry,
    MultiscaleOrientedAsymmetry,
};

/// Pixel-wise feature measure. Real kinds live in `values`. Complex kinds
/// (oriented asymmetry) are stored in polar form: `values` is the modulus and
/// `angle` the argument, so the modulus of the complex measure is available
/// exactly.
struct FeatureMap {
    FeatureKind kind;
    RealImage values;
    RealImage angle;  // populated only for oriented kinds

    bool is_complex() const {
        return kind == FeatureKind::OrientedAsymmetry ||
               kind == FeatureKind::MultiscaleOrientedAsymmetry;
    }
};

/// S = max(0, |f_e| - f_o - T) / (A + eps); blob-likeness in [0, 1).
FeatureMap feature_symmetry(const MonogenicScale& ms, const FeatureParams& p);

/// R = max(0, f_o - |f_e| - T) / (A + eps); edge-likeness in [0, 1).
FeatureMap feature_asymmetry(const MonogenicScale& ms, const FeatureParams& p);

/// S multiplied by sgn(f_e): positive at peaks, negative at troughs.
FeatureMap signed_symmetry(const MonogenicScale& ms, const FeatureParams& p);

/// R carried in the direction of the complex odd response f_o1 + i f_o2;
/// zero where the odd response vanishes.
FeatureMap oriented_asymmetry(const MonogenicScale& ms, const FeatureParams& p);

// Raw per-scale sums; values may exceed 1.
FeatureMap multiscale_symmetry(std::span<const MonogenicScale> scales, const FeatureParams& p);
FeatureMap multiscale_asymmetry(std::span<const MonogenicScale> scales, const FeatureParams& p);
FeatureMap multiscale_signed_symmetry(std::span<const MonogenicScale> scales,
                                      const FeatureParams& p);
FeatureMap multiscale_oriented_asymmetry(std::span<const MonogenicScale> scales,
                                         const FeatureParams& p);

}  // namespace monoline
