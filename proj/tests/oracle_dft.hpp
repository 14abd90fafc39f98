// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors
//
// Brute-force reference DFTs for tests. Deliberately written as direct
// O(n^2) (and O((HW)^2) in 2D) summations with no shared code with the
// production transform path.

#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "core/image.hpp"

namespace oracle {

inline std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in) {
    const std::size_t n = in.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(j) / static_cast<double>(n);
            acc += in[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

inline std::vector<std::complex<double>> dft_real(const std::vector<double>& in) {
    std::vector<std::complex<double>> tmp(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) tmp[i] = in[i];
    return dft(tmp);
}

inline std::vector<std::complex<double>> idft(const std::vector<std::complex<double>>& in) {
    const std::size_t n = in.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(j) / static_cast<double>(n);
            acc += in[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc / static_cast<double>(n);
    }
    return out;
}

inline monoline::ComplexImage dft2(const monoline::ComplexImage& in) {
    const std::size_t h = in.height, w = in.width;
    monoline::ComplexImage out(h, w);
    for (std::size_t ky = 0; ky < h; ++ky) {
        for (std::size_t kx = 0; kx < w; ++kx) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t y = 0; y < h; ++y) {
                for (std::size_t x = 0; x < w; ++x) {
                    const double ang =
                        -2.0 * std::numbers::pi *
                        (static_cast<double>(ky * y) / static_cast<double>(h) +
                         static_cast<double>(kx * x) / static_cast<double>(w));
                    acc += in.at(y, x) * std::complex<double>(std::cos(ang), std::sin(ang));
                }
            }
            out.at(ky, kx) = acc;
        }
    }
    return out;
}

inline monoline::ComplexImage dft2_real(const monoline::RealImage& in) {
    monoline::ComplexImage tmp(in.height, in.width);
    for (std::size_t i = 0; i < in.size(); ++i) tmp.samples[i] = in.samples[i];
    return dft2(tmp);
}

inline monoline::ComplexImage idft2(const monoline::ComplexImage& in) {
    const std::size_t h = in.height, w = in.width;
    monoline::ComplexImage out(h, w);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t ky = 0; ky < h; ++ky) {
                for (std::size_t kx = 0; kx < w; ++kx) {
                    const double ang =
                        2.0 * std::numbers::pi *
                        (static_cast<double>(ky * y) / static_cast<double>(h) +
                         static_cast<double>(kx * x) / static_cast<double>(w));
                    acc += in.at(ky, kx) * std::complex<double>(std::cos(ang), std::sin(ang));
                }
            }
            out.at(y, x) = acc / static_cast<double>(h * w);
        }
    }
    return out;
}

}  // namespace oracle
