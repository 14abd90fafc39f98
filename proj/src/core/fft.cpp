// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "core/fft.hpp"

#include <fftw3.h>

#include <atomic>
#include <mutex>

namespace monoline::fft {

namespace {

// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::atomic<std::uint64_t> g_forward_1d{0};
std::atomic<std::uint64_t> g_inverse_1d{0};
std::atomic<std::uint64_t> g_forward_2d{0};
std::atomic<std::uint64_t> g_inverse_2d{0};

// std::complex<double> is layout-compatible with fftw_complex.
fftw_complex* as_fftw(std::complex<double>* p) {
    return reinterpret_cast<fftw_complex*>(p);
}

std::vector<std::complex<double>> transform_1d(std::span<const std::complex<double>> in,
                                               int sign) {
    if (in.empty()) {
        throw InvalidSizeError("fft: empty input");
    }
    std::vector<std::complex<double>> buf(in.begin(), in.end());
    std::vector<std::complex<double>> out(in.size());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(in.size()), as_fftw(buf.data()),
                                as_fftw(out.data()), sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    if (sign == FFTW_BACKWARD) {
        const double scale = 1.0 / static_cast<double>(in.size());
        for (auto& v : out) v *= scale;
    }
    return out;
}

ComplexImage transform_2d(const ComplexImage& in, int sign) {
    if (in.height == 0 || in.width == 0) {
        throw InvalidSizeError("fft: empty input");
    }
    ComplexImage buf = in;
    ComplexImage out(in.height, in.width);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_2d(static_cast<int>(in.height), static_cast<int>(in.width),
                                as_fftw(buf.samples.data()), as_fftw(out.samples.data()),
                                sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    if (sign == FFTW_BACKWARD) {
        const double scale = 1.0 / static_cast<double>(in.height * in.width);
        for (auto& v : out.samples) v *= scale;
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> forward(std::span<const std::complex<double>> in) {
    g_forward_1d.fetch_add(1, std::memory_order_relaxed);
    return transform_1d(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> inverse(std::span<const std::complex<double>> in) {
    g_inverse_1d.fetch_add(1, std::memory_order_relaxed);
    return transform_1d(in, FFTW_BACKWARD);
}

std::vector<std::complex<double>> forward_real(std::span<const double> in) {
    std::vector<std::complex<double>> tmp(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) tmp[i] = in[i];
    return forward(tmp);
}

ComplexImage forward_2d(const ComplexImage& in) {
    g_forward_2d.fetch_add(1, std::memory_order_relaxed);
    return transform_2d(in, FFTW_FORWARD);
}

ComplexImage inverse_2d(const ComplexImage& in) {
    g_inverse_2d.fetch_add(1, std::memory_order_relaxed);
    return transform_2d(in, FFTW_BACKWARD);
}

ComplexImage forward_2d_real(const RealImage& in) {
    ComplexImage tmp(in.height, in.width);
    for (std::size_t i = 0; i < in.size(); ++i) tmp.samples[i] = in.samples[i];
    return forward_2d(tmp);
}

Counts counts() {
    return Counts{g_forward_1d.load(), g_inverse_1d.load(), g_forward_2d.load(),
                  g_inverse_2d.load()};
}

void reset_counts() {
    g_forward_1d = 0;
    g_inverse_1d = 0;
    g_forward_2d = 0;
    g_inverse_2d = 0;
}

}  // namespace monoline::fft
