// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "core/analytic.hpp"

#include <cmath>
#include <numbers>

#include "core/fft.hpp"

namespace monoline {

namespace {

// Analytic-signal multiplier 1 + sgn(omega): 2 on positive bins, 0 on
// negative ones, 1 at DC and at the even-n Nyquist bin.
double analytic_multiplier(std::size_t k, std::size_t n) {
    if (k == 0 || (n % 2 == 0 && k == n / 2)) return 1.0;
    return k <= (n - 1) / 2 ? 2.0 : 0.0;
}

// sgn(omega) with the same DC/Nyquist zeros.
double sgn_bin(std::size_t k, std::size_t n) {
    if (k == 0 || (n % 2 == 0 && k == n / 2)) return 0.0;
    return k <= (n - 1) / 2 ? 1.0 : -1.0;
}

}  // namespace

double LogGabor1DParams::center_frequency() const {
    return 2.0 * std::numbers::pi / center_wavelength;
}

void LogGabor1DParams::validate() const {
    if (!(center_wavelength > 2.0) || !std::isfinite(center_wavelength)) {
        throw InvalidInputError("log-Gabor: center wavelength must be > 2 samples/cycle");
    }
    if (!(sigma0 > 0.0) || !(sigma0 < 1.0)) {
        throw InvalidInputError("log-Gabor: sigma0 must lie in (0, 1)");
    }
}

AnalyticSignal1D analytic_signal(const Signal1D& f) {
    if (f.empty()) throw InvalidSizeError("analytic_signal: empty signal");
    require_finite(f, "analytic_signal");
    const std::size_t n = f.size();
    auto spec = fft::forward_real(f);
    for (std::size_t k = 0; k < n; ++k) {
        spec[k] *= analytic_multiplier(k, n);
    }
    return fft::inverse(spec);
}

Signal1D hilbert_transform(const Signal1D& f) {
    if (f.empty()) throw InvalidSizeError("hilbert_transform: empty signal");
    require_finite(f, "hilbert_transform");
    const std::size_t n = f.size();
    auto spec = fft::forward_real(f);
    const std::complex<double> minus_i(0.0, -1.0);
    for (std::size_t k = 0; k < n; ++k) {
        spec[k] *= minus_i * sgn_bin(k, n);
    }
    auto out = fft::inverse(spec);
    Signal1D h(n);
    for (std::size_t k = 0; k < n; ++k) h[k] = out[k].real();
    return h;
}

std::vector<double> log_gabor_response(const FreqAxis1D& axis, const LogGabor1DParams& p) {
    p.validate();
    const double w0 = p.center_frequency();
    const double denom = 2.0 * std::log(p.sigma0) * std::log(p.sigma0);
    std::vector<double> gain(axis.n, 0.0);
    for (std::size_t k = 0; k < axis.n; ++k) {
        const double w = std::abs(axis.omega[k]);
        if (w > 0.0) {
            const double l = std::log(w / w0);
            gain[k] = std::exp(-(l * l) / denom);
        }
    }
    return gain;
}

AnalyticSignal1D filtered_analytic(const Signal1D& f, const LogGabor1DParams& p) {
    if (f.empty()) throw InvalidSizeError("filtered_analytic: empty signal");
    require_finite(f, "filtered_analytic");
    p.validate();
    const std::size_t n = f.size();
    const FreqAxis1D axis = build_freq_axis_1d(n);
    const std::vector<double> gain = log_gabor_response(axis, p);
    auto spec = fft::forward_real(f);
    for (std::size_t k = 0; k < n; ++k) {
        spec[k] *= analytic_multiplier(k, n) * gain[k];
    }
    return fft::inverse(spec);
}

PhaseAmplitude1D local_phase_amplitude(const AnalyticSignal1D& fa) {
    PhaseAmplitude1D out;
    out.amplitude.resize(fa.size());
    out.phase.resize(fa.size());
    for (std::size_t k = 0; k < fa.size(); ++k) {
        const double a = std::abs(fa[k]);
        out.amplitude[k] = a;
        out.phase[k] = a == 0.0 ? 0.0 : std::atan2(fa[k].imag(), fa[k].real());
    }
    return out;
}

RealImage scaleogram(const Signal1D& f, std::span<const double> wavelengths, double sigma0) {
    if (wavelengths.empty()) {
        throw InvalidInputError("scaleogram: empty wavelength list");
    }
    if (f.size() < 4) {
        throw InvalidSizeError("scaleogram: signal must have at least 4 samples");
    }
    RealImage out(wavelengths.size(), f.size());
    for (std::size_t i = 0; i < wavelengths.size(); ++i) {
        const LogGabor1DParams p{wavelengths[i], sigma0};
        const PhaseAmplitude1D pa = local_phase_amplitude(filtered_analytic(f, p));
        for (std::size_t k = 0; k < f.size(); ++k) {
            out.at(i, k) = pa.phase[k];
        }
    }
    return out;
}

}  // namespace monoline
