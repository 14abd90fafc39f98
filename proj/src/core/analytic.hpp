// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "core/grid.hpp"
#include "core/image.hpp"

namespace monoline {

using Signal1D = std::vector<double>;
using AnalyticSignal1D = std::vector<std::complex<double>>;

/// Bandpass shape on a logarithmic frequency axis: unit gain at the centre
/// frequency 2*pi/center_wavelength, zero gain at DC, bandwidth set by sigma0.
struct LogGabor1DParams {
    double center_wavelength = 8.0;  // samples per cycle, > 2
    double sigma0 = 0.5;             // in (0, 1)

    double center_frequency() const;
    void validate() const;
};

/// Complex signal whose spectrum has the strictly-negative-frequency bins
/// suppressed, positive bins doubled, DC (and even-n Nyquist) kept. Its real
/// part is the input signal.
AnalyticSignal1D analytic_signal(const Signal1D& f);

/// Real-output quadrature companion: spectrum multiplied by -i*sgn(omega),
/// with sgn treated as 0 at DC and at the even-n Nyquist bin.
Signal1D hilbert_transform(const Signal1D& f);

/// Per-bin filter gain over a frequency axis.
std::vector<double> log_gabor_response(const FreqAxis1D& axis, const LogGabor1DParams& p);

/// Analytic signal of the bandpass-filtered input: spectrum
/// (1 + sgn(omega)) * G(omega) * F(omega).
AnalyticSignal1D filtered_analytic(const Signal1D& f, const LogGabor1DParams& p);

struct PhaseAmplitude1D {
    std::vector<double> amplitude;
    std::vector<double> phase;  // in (-pi, pi]; 0 where amplitude is 0
};

PhaseAmplitude1D local_phase_amplitude(const AnalyticSignal1D& fa);

/// Local phase per scale (rows) and sample (columns); row i is the phase of
/// filtered_analytic(f, {wavelengths[i], sigma0}).
RealImage scaleogram(const Signal1D& f, std::span<const double> wavelengths, double sigma0);

}  // namespace monoline
