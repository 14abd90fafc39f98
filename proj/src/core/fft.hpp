// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "core/image.hpp"

namespace monoline::fft {

// Conventions: forward transform uses e^{-i 2 pi k n / N}; inverse applies
// the 1/N (or 1/(H*W)) normalization. Arbitrary sizes are supported.

std::vector<std::complex<double>> forward(std::span<const std::complex<double>> in);
std::vector<std::complex<double>> inverse(std::span<const std::complex<double>> in);
std::vector<std::complex<double>> forward_real(std::span<const double> in);

ComplexImage forward_2d(const ComplexImage& in);
ComplexImage inverse_2d(const ComplexImage& in);
ComplexImage forward_2d_real(const RealImage& in);

// Transform counters, for tests that pin the cost contract of a pipeline.
struct Counts {
    std::uint64_t forward_1d = 0;
    std::uint64_t inverse_1d = 0;
    std::uint64_t forward_2d = 0;
    std::uint64_t inverse_2d = 0;
};

Counts counts();
void reset_counts();

}  // namespace monoline::fft
