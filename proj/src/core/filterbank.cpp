// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "core/filterbank.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace monoline {

double LogGabor2DParams::center_frequency() const {
    return 2.0 * std::numbers::pi / center_wavelength;
}

void LogGabor2DParams::validate() const {
    if (!(center_wavelength > 2.0) || !std::isfinite(center_wavelength)) {
        throw InvalidInputError("log-Gabor: center wavelength must be > 2 pixels/cycle");
    }
    if (!(sigma0 > 0.0) || !(sigma0 < 1.0)) {
        throw InvalidInputError("log-Gabor: sigma0 must lie in (0, 1)");
    }
}

RealImage radial_log_gabor(const FrequencyGrid2D& grid, const LogGabor2DParams& p) {
    p.validate();
    const double w0 = p.center_frequency();
    const double denom = 2.0 * std::log(p.sigma0) * std::log(p.sigma0);
    RealImage out(grid.height, grid.width);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double r = grid.radius[i];
        if (r > 0.0) {
            const double l = std::log(r / w0);
            out.samples[i] = std::exp(-(l * l) / denom);
        }
    }
    return out;
}

std::pair<ComplexImage, ComplexImage> riesz_multipliers(const FrequencyGrid2D& grid) {
    ComplexImage m1(grid.height, grid.width);
    ComplexImage m2(grid.height, grid.width);
    for (std::size_t i = 0; i < m1.size(); ++i) {
        // dir_x/dir_y are already zero at masked bins and at DC.
        m1.samples[i] = std::complex<double>(0.0, grid.dir_x[i]);
        m2.samples[i] = std::complex<double>(0.0, grid.dir_y[i]);
    }
    return {std::move(m1), std::move(m2)};
}

ComplexImage complex_odd_filter(const FrequencyGrid2D& grid, const RealImage& even) {
    if (even.height != grid.height || even.width != grid.width) {
        throw ShapeMismatchError("complex_odd_filter: even raster does not match grid");
    }
    ComplexImage out(grid.height, grid.width);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.samples[i] = std::complex<double>(-grid.dir_y[i], grid.dir_x[i]) * even.samples[i];
    }
    return out;
}

FilterBank build_filter_bank(const FrequencyGrid2D& grid,
                             std::span<const LogGabor2DParams> scales) {
    if (scales.empty()) {
        throw InvalidInputError("build_filter_bank: empty scale list");
    }
    FilterBank bank;
    bank.grid = grid;
    bank.scales.assign(scales.begin(), scales.end());
    bank.even.reserve(scales.size());
    bank.odd_complex.reserve(scales.size());
    for (const auto& p : scales) {
        RealImage even = radial_log_gabor(grid, p);
        bank.odd_complex.push_back(complex_odd_filter(grid, even));
        bank.even.push_back(std::move(even));
    }
    return bank;
}

struct FilterBankCache::Impl {
    using Key = std::tuple<std::size_t, std::size_t, std::vector<std::pair<double, double>>>;
    std::mutex mutex;
    std::map<Key, std::shared_ptr<const FilterBank>> banks;
};

std::shared_ptr<FilterBankCache::Impl> FilterBankCache::make_impl() {
    return std::make_shared<Impl>();
}

std::shared_ptr<const FilterBank> FilterBankCache::get(
    std::size_t height, std::size_t width, std::span<const LogGabor2DParams> scales) {
    if (scales.empty()) {
        throw InvalidInputError("build_filter_bank: empty scale list");
    }
    for (const auto& p : scales) p.validate();
    Impl::Key key{height, width, {}};
    auto& params = std::get<2>(key);
    params.reserve(scales.size());
    for (const auto& p : scales) params.emplace_back(p.center_wavelength, p.sigma0);

    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto it = impl_->banks.find(key);
    if (it != impl_->banks.end()) return it->second;
    auto bank = std::make_shared<const FilterBank>(
        build_filter_bank(build_grid_2d(height, width), scales));
    impl_->banks.emplace(std::move(key), bank);
    return bank;
}

void FilterBankCache::clear() {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    impl_->banks.clear();
}

FilterBankCache& FilterBankCache::global() {
    static FilterBankCache cache;
    return cache;
}

}  // namespace monoline
