// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "core/analytic.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracle_dft.hpp"

using namespace monoline;

namespace {

constexpr double pi = std::numbers::pi;

Signal1D sinusoid(std::size_t n, double cycles, double phase = 0.0, double amp = 1.0) {
    Signal1D f(n);
    for (std::size_t k = 0; k < n; ++k) {
        f[k] = amp * std::cos(2.0 * pi * cycles * static_cast<double>(k) /
                                  static_cast<double>(n) +
                              phase);
    }
    return f;
}

Signal1D random_signal(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Signal1D f(n);
    for (auto& v : f) v = dist(rng);
    return f;
}

// Removes DC and (even n) Nyquist content so Hilbert identities are exact.
Signal1D strip_dc_nyquist(Signal1D f) {
    const std::size_t n = f.size();
    double mean = 0.0;
    for (double v : f) mean += v;
    mean /= static_cast<double>(n);
    for (auto& v : f) v -= mean;
    if (n % 2 == 0) {
        double c = 0.0;
        for (std::size_t k = 0; k < n; ++k) c += f[k] * (k % 2 == 0 ? 1.0 : -1.0);
        c /= static_cast<double>(n);
        for (std::size_t k = 0; k < n; ++k) f[k] -= c * (k % 2 == 0 ? 1.0 : -1.0);
    }
    return f;
}

double max_abs(const Signal1D& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

TEST_CASE("analytic signal of a constant keeps DC untouched") {
    const Signal1D f(16, 3.25);
    const auto fa = analytic_signal(f);
    for (const auto& v : fa) {
        CHECK(v.real() == doctest::Approx(3.25).epsilon(1e-12));
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("analytic signal of a cosine is the complex exponential") {
    const auto f = sinusoid(8, 1.0);
    const auto fa = analytic_signal(f);
    for (std::size_t k = 0; k < 8; ++k) {
        const double ang = 2.0 * pi * static_cast<double>(k) / 8.0;
        CHECK(fa[k].real() == doctest::Approx(std::cos(ang)).epsilon(1e-12));
        CHECK(fa[k].imag() == doctest::Approx(std::sin(ang)).epsilon(1e-12));
    }
}

TEST_CASE("analytic signal matches the brute-force DFT oracle") {
    // Sum of three sinusoids at separated scales.
    const std::size_t n = 60;
    Signal1D f(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k);
        f[k] = 1.2 * std::sin(2.0 * pi * 3.0 * t / n) + 0.7 * std::cos(2.0 * pi * 9.0 * t / n) +
               0.4 * std::sin(2.0 * pi * 17.0 * t / n + 0.3);
    }
    auto spec = oracle::dft_real(f);
    for (std::size_t k = 0; k < n; ++k) {
        const double m = (k == 0 || (n % 2 == 0 && k == n / 2)) ? 1.0
                         : k <= (n - 1) / 2               ? 2.0
                                                          : 0.0;
        spec[k] *= m;
    }
    const auto expected = oracle::idft(spec);
    const auto fa = analytic_signal(f);
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(fa[k] - expected[k]) < 1e-10);
    }
}

TEST_CASE("analytic spectrum suppresses negative bins and keeps the real part") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 8 + static_cast<std::size_t>(rng() % 57);
        const auto f = random_signal(n, rng);
        const auto fa = analytic_signal(f);
        const auto spec = oracle::dft(fa);
        double max_bin = 0.0;
        for (const auto& v : spec) max_bin = std::max(max_bin, std::abs(v));
        for (std::size_t k = n / 2 + 1; k < n; ++k) {
            CHECK(std::abs(spec[k]) < 1e-9 * max_bin);
        }
        const double scale = max_abs(f);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(std::abs(fa[k].real() - f[k]) < 1e-12 * scale);
        }
    }
}

TEST_CASE("analytic signal rejects bad input") {
    CHECK_THROWS_AS(analytic_signal(Signal1D{}), InvalidSizeError);
    CHECK_THROWS_AS(analytic_signal(Signal1D{1.0, std::nan("")}), InvalidInputError);
    CHECK_THROWS_AS(hilbert_transform(Signal1D{std::numeric_limits<double>::infinity()}),
                    InvalidInputError);
}

TEST_CASE("Hilbert transform of cosine is sine") {
    for (std::size_t n : {8u, 32u, 45u}) {
        const auto f = sinusoid(n, 1.0);
        const auto h = hilbert_transform(f);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(std::abs(h[k] - std::sin(2.0 * pi * static_cast<double>(k) / n)) < 1e-10);
        }
    }
}

TEST_CASE("Hilbert transform of a constant vanishes") {
    const auto h = hilbert_transform(Signal1D(12, 5.0));
    CHECK(max_abs(h) < 1e-12);
}

TEST_CASE("Hilbert involution, quadrature, and energy identities") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 16 + static_cast<std::size_t>(rng() % 49);
        const auto f = strip_dc_nyquist(random_signal(n, rng));
        const auto h = hilbert_transform(f);
        const auto hh = hilbert_transform(h);

        double dot = 0.0, ef = 0.0, eh = 0.0, inv = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            dot += f[k] * h[k];
            ef += f[k] * f[k];
            eh += h[k] * h[k];
            inv = std::max(inv, std::abs(hh[k] + f[k]));
        }
        CHECK(inv < 1e-10 * std::max(1.0, max_abs(f)));
        CHECK(std::abs(dot) < 1e-9 * std::sqrt(ef * eh));
        CHECK(std::abs(std::sqrt(eh) - std::sqrt(ef)) < 1e-9 * std::sqrt(ef));
    }
}

TEST_CASE("Hilbert transform acts as a negative smoothed gradient on a sinusoid") {
    const std::size_t n = 64;
    const double w0 = 2.0 * pi * 4.0 / n;
    const auto f = sinusoid(n, 4.0);
    const auto h = hilbert_transform(f);
    for (std::size_t k = 0; k < n; ++k) {
        const double dfdt = -w0 * std::sin(w0 * static_cast<double>(k));
        CHECK(std::abs(h[k] - (-dfdt / w0)) < 1e-10);
    }
}

TEST_CASE("log-Gabor gain anchors") {
    // n = 20 with lambda0 = 5 puts bins exactly at the centre frequency and
    // at twice the centre frequency.
    const auto axis = build_freq_axis_1d(20);
    const LogGabor1DParams p{5.0, 0.5};
    const auto gain = log_gabor_response(axis, p);
    CHECK(gain[0] == 0.0);
    CHECK(gain[4] == 1.0);
    CHECK(std::abs(gain[8] - std::exp(-0.5)) < 1e-12);
    CHECK(std::abs(gain[8] - 0.6065306597126334) < 1e-12);
    // depends on |omega| only
    for (std::size_t k = 1; k < 20; ++k) {
        CHECK(gain[k] == gain[20 - k == 20 ? 0 : 20 - k]);
    }
}

TEST_CASE("log-Gabor parameter validation") {
    CHECK_THROWS_AS((LogGabor1DParams{2.0, 0.5}.validate()), InvalidInputError);
    CHECK_THROWS_AS((LogGabor1DParams{8.0, 0.0}.validate()), InvalidInputError);
    CHECK_THROWS_AS((LogGabor1DParams{8.0, 1.0}.validate()), InvalidInputError);
    CHECK_NOTHROW((LogGabor1DParams{8.0, 0.5}.validate()));
}

TEST_CASE("filtered analytic signal has unit gain at the centre frequency") {
    const std::size_t n = 64;
    const double amp = 2.5;
    Signal1D f(n);
    for (std::size_t k = 0; k < n; ++k) {
        f[k] = amp * std::sin(2.0 * pi * 8.0 * static_cast<double>(k) / n);
    }
    const auto fa = filtered_analytic(f, {8.0, 0.5});
    for (const auto& v : fa) {
        CHECK(std::abs(std::abs(v) - amp) < 1e-6);
    }
}

TEST_CASE("filtered analytic signal kills a constant") {
    const auto fa = filtered_analytic(Signal1D(32, 4.0), {8.0, 0.5});
    for (const auto& v : fa) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("envelope recovery for a cosine-pulse-modulated sine") {
    const std::size_t n = 512;
    const double lam_c = 16.0;
    Signal1D f(n), env(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = std::sin(pi * static_cast<double>(k) / n);
        env[k] = s * s;
        f[k] = env[k] * std::sin(2.0 * pi * static_cast<double>(k) / lam_c);
    }
    const auto pa = local_phase_amplitude(filtered_analytic(f, {lam_c, 0.5}));
    const double env_max = max_abs(env);
    for (std::size_t k = 0; k < n; ++k) {
        if (env[k] > 0.1 * env_max) {
            CHECK(std::abs(pa.amplitude[k] - env[k]) < 0.02 * env[k]);
        }
    }

    // The phase ramps through one full turn per carrier cycle.
    const double target = 2.0 * pi / lam_c;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (env[k] > 0.1 * env_max && env[k + 1] > 0.1 * env_max) {
            double d = pa.phase[k + 1] - pa.phase[k];
            while (d <= -pi) d += 2.0 * pi;
            while (d > pi) d -= 2.0 * pi;
            CHECK(std::abs(d - target) < 0.05 * target);
        }
    }
}

TEST_CASE("local phase and amplitude of a pure phasor") {
    const std::size_t n = 24;
    AnalyticSignal1D fa(n);
    const double theta = 2.0 * pi * 5.0 / n;
    for (std::size_t k = 0; k < n; ++k) {
        fa[k] = std::polar(1.0, theta * static_cast<double>(k));
    }
    const auto pa = local_phase_amplitude(fa);
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(pa.amplitude[k] == doctest::Approx(1.0).epsilon(1e-12));
        double want = std::remainder(theta * static_cast<double>(k), 2.0 * pi);
        if (want <= -pi) want += 2.0 * pi;
        CHECK(std::abs(std::remainder(pa.phase[k] - want, 2.0 * pi)) < 1e-12);
    }
}

TEST_CASE("local phase of the zero signal is defined as zero") {
    const auto pa = local_phase_amplitude(AnalyticSignal1D(8, {0.0, 0.0}));
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(pa.amplitude[k] == 0.0);
        CHECK(pa.phase[k] == 0.0);
    }
}

TEST_CASE("scaleogram layout and row decomposition") {
    std::mt19937 rng(11);
    const auto f = random_signal(256, rng);

    std::vector<double> lams;
    for (double l = 5.0; l <= 100.0; l += 5.0) lams.push_back(l);
    const auto gram = scaleogram(f, lams, 0.6);
    CHECK(gram.height == 20);
    CHECK(gram.width == 256);

    // each row equals the single-scale phase path
    for (std::size_t i : {std::size_t{0}, std::size_t{7}, std::size_t{19}}) {
        const auto pa = local_phase_amplitude(filtered_analytic(f, {lams[i], 0.6}));
        for (std::size_t k = 0; k < 256; ++k) {
            CHECK(gram.at(i, k) == pa.phase[k]);
        }
    }

    const auto single = scaleogram(f, std::vector<double>{10.0}, 0.6);
    CHECK(single.height == 1);
    const auto pa = local_phase_amplitude(filtered_analytic(f, {10.0, 0.6}));
    for (std::size_t k = 0; k < 256; ++k) CHECK(single.at(0, k) == pa.phase[k]);
}

TEST_CASE("scaleogram input validation") {
    const Signal1D f(64, 1.0);
    CHECK_THROWS_AS(scaleogram(f, std::vector<double>{}, 0.5), InvalidInputError);
    CHECK_THROWS_AS(scaleogram(Signal1D{1.0, 2.0, 3.0}, std::vector<double>{8.0}, 0.5),
                    InvalidSizeError);
    CHECK_THROWS_AS(scaleogram(f, std::vector<double>{2.0}, 0.5), InvalidInputError);
}
