// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "core/features.hpp"

#include <cmath>

namespace monoline {

void FeatureParams::validate() const {
    if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
        throw InvalidInputError("features: threshold must be >= 0");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw InvalidInputError("features: epsilon must be > 0");
    }
}

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// One thresholded, amplitude-normalized term at a pixel. Sign of `parity`
// selects the symmetric (+1) or antisymmetric (-1) numerator.
double measure_at(const MonogenicScale& ms, std::size_t i, const FeatureParams& p,
                  double parity) {
    const double e = std::abs(ms.even.samples[i]);
    const double o = std::hypot(ms.odd1.samples[i], ms.odd2.samples[i]);
    const double amp = std::sqrt(ms.even.samples[i] * ms.even.samples[i] +
                                 ms.odd1.samples[i] * ms.odd1.samples[i] +
                                 ms.odd2.samples[i] * ms.odd2.samples[i]);
    const double numer = parity * (e - o) - p.threshold;
    return numer > 0.0 ? numer / (amp + p.epsilon) : 0.0;
}

void check_scales(std::span<const MonogenicScale> scales) {
    if (scales.empty()) {
        throw InvalidInputError("features: empty scale list");
    }
    for (const auto& ms : scales) {
        if (!ms.even.same_shape(scales.front().even)) {
            throw ShapeMismatchError("features: scales have mismatched dimensions");
        }
    }
}

}  // namespace

FeatureMap feature_symmetry(const MonogenicScale& ms, const FeatureParams& p) {
    p.validate();
    FeatureMap out{FeatureKind::Symmetry, RealImage(ms.even.height, ms.even.width), {}};
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values.samples[i] = measure_at(ms, i, p, +1.0);
    }
    return out;
}

FeatureMap feature_asymmetry(const MonogenicScale& ms, const FeatureParams& p) {
    p.validate();
    FeatureMap out{FeatureKind::Asymmetry, RealImage(ms.even.height, ms.even.width), {}};
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values.samples[i] = measure_at(ms, i, p, -1.0);
    }
    return out;
}

FeatureMap signed_symmetry(const MonogenicScale& ms, const FeatureParams& p) {
    p.validate();
    FeatureMap out{FeatureKind::SignedSymmetry, RealImage(ms.even.height, ms.even.width), {}};
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values.samples[i] = measure_at(ms, i, p, +1.0) * sgn(ms.even.samples[i]);
    }
    return out;
}

FeatureMap oriented_asymmetry(const MonogenicScale& ms, const FeatureParams& p) {
    p.validate();
    FeatureMap out{FeatureKind::OrientedAsymmetry, RealImage(ms.even.height, ms.even.width),
                   RealImage(ms.even.height, ms.even.width)};
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const double o1 = ms.odd1.samples[i];
        const double o2 = ms.odd2.samples[i];
        if (o1 == 0.0 && o2 == 0.0) continue;  // measure is defined as 0 there
        out.values.samples[i] = measure_at(ms, i, p, -1.0);
        out.angle.samples[i] = std::atan2(o2, o1);
    }
    return out;
}

FeatureMap multiscale_symmetry(std::span<const MonogenicScale> scales, const FeatureParams& p) {
    p.validate();
    check_scales(scales);
    FeatureMap out{FeatureKind::MultiscaleSymmetry,
                   RealImage(scales[0].even.height, scales[0].even.width), {}};
    for (const auto& ms : scales) {
        for (std::size_t i = 0; i < out.values.size(); ++i) {
            out.values.samples[i] += measure_at(ms, i, p, +1.0);
        }
    }
    return out;
}

FeatureMap multiscale_asymmetry(std::span<const MonogenicScale> scales, const FeatureParams& p) {
    p.validate();
    check_scales(scales);
    FeatureMap out{FeatureKind::MultiscaleAsymmetry,
                   RealImage(scales[0].even.height, scales[0].even.width), {}};
    for (const auto& ms : scales) {
        for (std::size_t i = 0; i < out.values.size(); ++i) {
            out.values.samples[i] += measure_at(ms, i, p, -1.0);
        }
    }
    return out;
}

FeatureMap multiscale_signed_symmetry(std::span<const MonogenicScale> scales,
                                      const FeatureParams& p) {
    p.validate();
    check_scales(scales);
    FeatureMap out{FeatureKind::MultiscaleSignedSymmetry,
                   RealImage(scales[0].even.height, scales[0].even.width), {}};
    for (const auto& ms : scales) {
        for (std::size_t i = 0; i < out.values.size(); ++i) {
            out.values.samples[i] += measure_at(ms, i, p, +1.0) * sgn(ms.even.samples[i]);
        }
    }
    return out;
}

FeatureMap multiscale_oriented_asymmetry(std::span<const MonogenicScale> scales,
                                         const FeatureParams& p) {
    p.validate();
    check_scales(scales);
    const std::size_t h = scales[0].even.height, w = scales[0].even.width;
    RealImage sum_re(h, w), sum_im(h, w);
    for (const auto& ms : scales) {
        for (std::size_t i = 0; i < h * w; ++i) {
            const double o1 = ms.odd1.samples[i];
            const double o2 = ms.odd2.samples[i];
            const double mag = std::hypot(o1, o2);
            if (mag == 0.0) continue;
            const double r = measure_at(ms, i, p, -1.0);
            sum_re.samples[i] += r * o1 / mag;
            sum_im.samples[i] += r * o2 / mag;
        }
    }
    FeatureMap out{FeatureKind::MultiscaleOrientedAsymmetry, RealImage(h, w), RealImage(h, w)};
    for (std::size_t i = 0; i < h * w; ++i) {
        const double re = sum_re.samples[i], im = sum_im.samples[i];
        out.values.samples[i] = std::hypot(re, im);
        out.angle.samples[i] = (re == 0.0 && im == 0.0) ? 0.0 : std::atan2(im, re);
    }
    return out;
}

}  // namespace monoline
