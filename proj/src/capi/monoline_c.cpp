// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "monoline/monoline.h"

#include <exception>
#include <new>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/analytic.hpp"
#include "core/features.hpp"
#include "core/fft.hpp"
#include "core/filterbank.hpp"
#include "core/image.hpp"
#include "core/monogenic.hpp"
#include "core/pnm.hpp"

struct ml_signal {
    std::vector<double> samples;
};

struct ml_image {
    monoline::RealImage img;
};

struct ml_filter_bank {
    std::shared_ptr<const monoline::FilterBank> bank;
};

struct ml_monogenic {
    std::vector<monoline::MonogenicScale> scales;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& message) { t_last_error = message; }

// Runs a callable and maps core exceptions onto status codes.
template <typename Fn>
ml_status guarded(Fn&& fn) {
    try {
        fn();
        return ML_OK;
    } catch (const monoline::InvalidSizeError& e) {
        set_error(e.what());
        return ML_ERR_INVALID_SIZE;
    } catch (const monoline::ShapeMismatchError& e) {
        set_error(e.what());
        return ML_ERR_SHAPE_MISMATCH;
    } catch (const monoline::InvalidInputError& e) {
        set_error(e.what());
        return ML_ERR_INVALID_INPUT;
    } catch (const monoline::ParseError& e) {
        set_error(e.what());
        return ML_ERR_PARSE;
    } catch (const monoline::IoError& e) {
        set_error(e.what());
        return ML_ERR_IO;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return ML_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ML_ERR_INTERNAL;
    }
}

ml_status require(bool ok, const char* message) {
    if (!ok) {
        set_error(message);
        return ML_ERR_NULL_ARGUMENT;
    }
    return ML_OK;
}

ml_image* make_image(monoline::RealImage img) {
    return new ml_image{std::move(img)};
}

ml_signal* make_signal(std::vector<double> samples) {
    return new ml_signal{std::move(samples)};
}

std::vector<monoline::LogGabor2DParams> to_params(const double* wavelengths, size_t count,
                                                  double sigma0) {
    std::vector<monoline::LogGabor2DParams> params;
    params.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        params.push_back({wavelengths[i], sigma0});
    }
    return params;
}

ml_status check_scale(const ml_monogenic* m, size_t scale) {
    if (scale >= m->scales.size()) {
        set_error("scale index out of range");
        return ML_ERR_INVALID_INPUT;
    }
    return ML_OK;
}

monoline::FeatureParams feature_params(double threshold, double epsilon) {
    return monoline::FeatureParams{threshold, epsilon};
}

}  // namespace

extern "C" {

const char* ml_status_string(ml_status status) {
    switch (status) {
        case ML_OK: return "ML_OK";
        case ML_ERR_NULL_ARGUMENT: return "ML_ERR_NULL_ARGUMENT";
        case ML_ERR_INVALID_SIZE: return "ML_ERR_INVALID_SIZE";
        case ML_ERR_INVALID_INPUT: return "ML_ERR_INVALID_INPUT";
        case ML_ERR_SHAPE_MISMATCH: return "ML_ERR_SHAPE_MISMATCH";
        case ML_ERR_PARSE: return "ML_ERR_PARSE";
        case ML_ERR_IO: return "ML_ERR_IO";
        case ML_ERR_INTERNAL: return "ML_ERR_INTERNAL";
    }
    return "ML_ERR_UNKNOWN";
}

const char* ml_last_error_message(void) { return t_last_error.c_str(); }

const char* ml_version(void) { return "0.1.0"; }

/* ----------------------------- signals ----------------------------- */

ml_status ml_signal_create(const double* samples, size_t length, ml_signal** out) {
    if (auto st = require(samples && out, "ml_signal_create: null argument")) return st;
    return guarded([&] {
        if (length == 0) throw monoline::InvalidSizeError("signal length must be positive");
        std::vector<double> data(samples, samples + length);
        monoline::require_finite(data, "ml_signal_create");
        *out = make_signal(std::move(data));
    });
}

ml_status ml_signal_read_csv(const char* path, ml_signal** out) {
    if (auto st = require(path && out, "ml_signal_read_csv: null argument")) return st;
    return guarded([&] { *out = make_signal(monoline::read_csv_signal(path)); });
}

ml_status ml_signal_write_csv(const ml_signal* signal, const char* path) {
    if (auto st = require(signal && path, "ml_signal_write_csv: null argument")) return st;
    return guarded([&] { monoline::write_csv_signal(signal->samples, path); });
}

size_t ml_signal_length(const ml_signal* signal) { return signal ? signal->samples.size() : 0; }

const double* ml_signal_data(const ml_signal* signal) {
    return signal ? signal->samples.data() : nullptr;
}

void ml_signal_destroy(ml_signal* signal) { delete signal; }

ml_status ml_hilbert_transform(const ml_signal* signal, ml_signal** out) {
    if (auto st = require(signal && out, "ml_hilbert_transform: null argument")) return st;
    return guarded([&] { *out = make_signal(monoline::hilbert_transform(signal->samples)); });
}

ml_status ml_analytic_signal(const ml_signal* signal, ml_signal** out_real,
                             ml_signal** out_imag) {
    if (auto st = require(signal && out_real && out_imag, "ml_analytic_signal: null argument"))
        return st;
    return guarded([&] {
        const auto fa = monoline::analytic_signal(signal->samples);
        std::vector<double> re(fa.size()), im(fa.size());
        for (size_t i = 0; i < fa.size(); ++i) {
            re[i] = fa[i].real();
            im[i] = fa[i].imag();
        }
        *out_real = make_signal(std::move(re));
        *out_imag = make_signal(std::move(im));
    });
}

ml_status ml_signal_local_phase_amplitude(const ml_signal* signal, double center_wavelength,
                                          double sigma0, ml_signal** out_amplitude,
                                          ml_signal** out_phase) {
    if (auto st = require(signal && out_amplitude && out_phase,
                          "ml_signal_local_phase_amplitude: null argument"))
        return st;
    return guarded([&] {
        const monoline::LogGabor1DParams p{center_wavelength, sigma0};
        auto pa = monoline::local_phase_amplitude(monoline::filtered_analytic(signal->samples, p));
        *out_amplitude = make_signal(std::move(pa.amplitude));
        *out_phase = make_signal(std::move(pa.phase));
    });
}

ml_status ml_signal_scaleogram(const ml_signal* signal, const double* wavelengths, size_t count,
                               double sigma0, ml_image** out) {
    if (auto st = require(signal && out && (wavelengths || count == 0),
                          "ml_signal_scaleogram: null argument"))
        return st;
    return guarded([&] {
        *out = make_image(monoline::scaleogram(
            signal->samples, std::span<const double>(wavelengths, count), sigma0));
    });
}

/* ------------------------------ images ----------------------------- */

ml_status ml_image_create(size_t height, size_t width, const double* samples, ml_image** out) {
    if (auto st = require(out != nullptr, "ml_image_create: null output")) return st;
    return guarded([&] {
        if (height == 0 || width == 0) {
            throw monoline::InvalidSizeError("image dimensions must be positive");
        }
        monoline::RealImage img(height, width);
        if (samples) {
            img.samples.assign(samples, samples + height * width);
            monoline::require_finite(img.samples, "ml_image_create");
        }
        *out = make_image(std::move(img));
    });
}

size_t ml_image_height(const ml_image* image) { return image ? image->img.height : 0; }
size_t ml_image_width(const ml_image* image) { return image ? image->img.width : 0; }

const double* ml_image_data(const ml_image* image) {
    return image ? image->img.samples.data() : nullptr;
}

void ml_image_destroy(ml_image* image) { delete image; }

ml_status ml_image_mirror_pad_double(const ml_image* image, ml_image** out) {
    if (auto st = require(image && out, "ml_image_mirror_pad_double: null argument")) return st;
    return guarded([&] { *out = make_image(monoline::mirror_pad_double(image->img)); });
}

ml_status ml_image_crop(const ml_image* image, size_t y0, size_t x0, size_t height,
                        size_t width, ml_image** out) {
    if (auto st = require(image && out, "ml_image_crop: null argument")) return st;
    return guarded([&] { *out = make_image(monoline::crop(image->img, y0, x0, height, width)); });
}

ml_status ml_image_read_pgm(const char* path, ml_image** out) {
    if (auto st = require(path && out, "ml_image_read_pgm: null argument")) return st;
    return guarded([&] { *out = make_image(monoline::read_pgm(path)); });
}

ml_status ml_image_write_pgm(const ml_image* image, const char* path, double lo, double hi) {
    if (auto st = require(image && path, "ml_image_write_pgm: null argument")) return st;
    return guarded([&] { monoline::write_pgm(image->img, path, lo, hi); });
}

ml_status ml_image_write_orientation_ppm(const ml_image* orientation, const ml_image* magnitude,
                                         const char* path) {
    if (auto st = require(orientation && magnitude && path,
                          "ml_image_write_orientation_ppm: null argument"))
        return st;
    return guarded(
        [&] { monoline::write_orientation_ppm(orientation->img, magnitude->img, path); });
}

/* --------------------------- filter banks -------------------------- */

ml_status ml_filter_bank_create(size_t height, size_t width, const double* wavelengths,
                                size_t count, double sigma0, ml_filter_bank** out) {
    if (auto st = require(out && (wavelengths || count == 0),
                          "ml_filter_bank_create: null argument"))
        return st;
    return guarded([&] {
        const auto params = to_params(wavelengths, count, sigma0);
        *out = new ml_filter_bank{
            monoline::FilterBankCache::global().get(height, width, params)};
    });
}

size_t ml_filter_bank_num_scales(const ml_filter_bank* bank) {
    return bank ? bank->bank->num_scales() : 0;
}

void ml_filter_bank_destroy(ml_filter_bank* bank) { delete bank; }

ml_status ml_filter_bank_even(const ml_filter_bank* bank, size_t scale, ml_image** out) {
    if (auto st = require(bank && out, "ml_filter_bank_even: null argument")) return st;
    return guarded([&] {
        if (scale >= bank->bank->num_scales()) {
            throw monoline::InvalidInputError("scale index out of range");
        }
        *out = make_image(bank->bank->even[scale]);
    });
}

ml_status ml_filter_bank_odd(const ml_filter_bank* bank, size_t scale, ml_image** out_real,
                             ml_image** out_imag) {
    if (auto st = require(bank && out_real && out_imag, "ml_filter_bank_odd: null argument"))
        return st;
    return guarded([&] {
        if (scale >= bank->bank->num_scales()) {
            throw monoline::InvalidInputError("scale index out of range");
        }
        const auto& oc = bank->bank->odd_complex[scale];
        monoline::RealImage re(oc.height, oc.width), im(oc.height, oc.width);
        for (size_t i = 0; i < oc.size(); ++i) {
            re.samples[i] = oc.samples[i].real();
            im.samples[i] = oc.samples[i].imag();
        }
        *out_real = make_image(std::move(re));
        *out_imag = make_image(std::move(im));
    });
}

ml_status ml_filter_bank_even_impulse(const ml_filter_bank* bank, size_t scale, ml_image** out) {
    if (auto st = require(bank && out, "ml_filter_bank_even_impulse: null argument")) return st;
    return guarded([&] {
        if (scale >= bank->bank->num_scales()) {
            throw monoline::InvalidInputError("scale index out of range");
        }
        const auto& even = bank->bank->even[scale];
        monoline::ComplexImage spec(even.height, even.width);
        for (size_t i = 0; i < even.size(); ++i) spec.samples[i] = even.samples[i];
        const auto impulse = monoline::fft::inverse_2d(spec);
        monoline::RealImage re(even.height, even.width);
        for (size_t i = 0; i < even.size(); ++i) re.samples[i] = impulse.samples[i].real();
        *out = make_image(std::move(re));
    });
}

ml_status ml_filter_bank_odd_impulse(const ml_filter_bank* bank, size_t scale,
                                     ml_image** out_real, ml_image** out_imag) {
    if (auto st = require(bank && out_real && out_imag,
                          "ml_filter_bank_odd_impulse: null argument"))
        return st;
    return guarded([&] {
        if (scale >= bank->bank->num_scales()) {
            throw monoline::InvalidInputError("scale index out of range");
        }
        const auto impulse = monoline::fft::inverse_2d(bank->bank->odd_complex[scale]);
        monoline::RealImage re(impulse.height, impulse.width), im(impulse.height, impulse.width);
        for (size_t i = 0; i < impulse.size(); ++i) {
            re.samples[i] = impulse.samples[i].real();
            im.samples[i] = impulse.samples[i].imag();
        }
        *out_real = make_image(std::move(re));
        *out_imag = make_image(std::move(im));
    });
}

/* --------------------------- monogenic ----------------------------- */

ml_status ml_monogenic_compute(const ml_image* image, const ml_filter_bank* bank,
                               ml_monogenic** out) {
    if (auto st = require(image && bank && out, "ml_monogenic_compute: null argument")) return st;
    return guarded(
        [&] { *out = new ml_monogenic{monoline::compute_monogenic(image->img, *bank->bank)}; });
}

size_t ml_monogenic_num_scales(const ml_monogenic* m) { return m ? m->scales.size() : 0; }

void ml_monogenic_destroy(ml_monogenic* m) { delete m; }

ml_status ml_monogenic_part(const ml_monogenic* m, size_t scale, ml_part part, ml_image** out) {
    if (auto st = require(m && out, "ml_monogenic_part: null argument")) return st;
    if (auto st = check_scale(m, scale)) return st;
    return guarded([&] {
        const auto& ms = m->scales[scale];
        switch (part) {
            case ML_PART_EVEN: *out = make_image(ms.even); return;
            case ML_PART_ODD1: *out = make_image(ms.odd1); return;
            case ML_PART_ODD2: *out = make_image(ms.odd2); return;
        }
        throw monoline::InvalidInputError("unknown monogenic part");
    });
}

ml_status ml_monogenic_amplitude(const ml_monogenic* m, size_t scale, ml_image** out) {
    if (auto st = require(m && out, "ml_monogenic_amplitude: null argument")) return st;
    if (auto st = check_scale(m, scale)) return st;
    return guarded([&] { *out = make_image(monoline::local_amplitude(m->scales[scale])); });
}

ml_status ml_monogenic_phase(const ml_monogenic* m, size_t scale, ml_image** out) {
    if (auto st = require(m && out, "ml_monogenic_phase: null argument")) return st;
    if (auto st = check_scale(m, scale)) return st;
    return guarded([&] { *out = make_image(monoline::local_phase(m->scales[scale])); });
}

ml_status ml_monogenic_orientation(const ml_monogenic* m, size_t scale, ml_image** out) {
    if (auto st = require(m && out, "ml_monogenic_orientation: null argument")) return st;
    if (auto st = check_scale(m, scale)) return st;
    return guarded([&] { *out = make_image(monoline::local_orientation(m->scales[scale])); });
}

ml_status ml_monogenic_odd_magnitude(const ml_monogenic* m, size_t scale, ml_image** out) {
    if (auto st = require(m && out, "ml_monogenic_odd_magnitude: null argument")) return st;
    if (auto st = check_scale(m, scale)) return st;
    return guarded([&] { *out = make_image(monoline::combined_odd(m->scales[scale])); });
}

ml_status ml_local_model_patch(double amplitude, double phase, double orientation, size_t size,
                               ml_image** out) {
    if (auto st = require(out != nullptr, "ml_local_model_patch: null output")) return st;
    return guarded([&] {
        *out = make_image(monoline::local_model_patch(amplitude, phase, orientation, size));
    });
}

/* ---------------------------- features ----------------------------- */

ml_status ml_feature_symmetry(const ml_monogenic* m, size_t scale, double threshold,
                              double epsilon, ml_image** out) {
    if (auto st = require(m && out, "ml_feature_symmetry: null argument")) return st;
    if (auto st = check_scale(m, scale)) return st;
    return guarded([&] {
        *out = make_image(std::move(
            monoline::feature_symmetry(m->scales[scale], feature_params(threshold, epsilon))
                .values));
    });
}

ml_status ml_feature_asymmetry(const ml_monogenic* m, size_t scale, double threshold,
                               double epsilon, ml_image** out) {
    if (auto st = require(m && out, "ml_feature_asymmetry: null argument")) return st;
    if (auto st = check_scale(m, scale)) return st;
    return guarded([&] {
        *out = make_image(std::move(
            monoline::feature_asymmetry(m->scales[scale], feature_params(threshold, epsilon))
                .values));
    });
}

ml_status ml_feature_signed_symmetry(const ml_monogenic* m, size_t scale, double threshold,
                                     double epsilon, ml_image** out) {
    if (auto st = require(m && out, "ml_feature_signed_symmetry: null argument")) return st;
    if (auto st = check_scale(m, scale)) return st;
    return guarded([&] {
        *out = make_image(std::move(
            monoline::signed_symmetry(m->scales[scale], feature_params(threshold, epsilon))
                .values));
    });
}

ml_status ml_feature_oriented_asymmetry(const ml_monogenic* m, size_t scale, double threshold,
                                        double epsilon, ml_image** out_magnitude,
                                        ml_image** out_angle) {
    if (auto st = require(m && out_magnitude && out_angle,
                          "ml_feature_oriented_asymmetry: null argument"))
        return st;
    if (auto st = check_scale(m, scale)) return st;
    return guarded([&] {
        auto map =
            monoline::oriented_asymmetry(m->scales[scale], feature_params(threshold, epsilon));
        *out_magnitude = make_image(std::move(map.values));
        *out_angle = make_image(std::move(map.angle));
    });
}

namespace {

void apply_normalize(monoline::RealImage& img, size_t count, bool normalize) {
    if (!normalize || count == 0) return;
    const double inv = 1.0 / static_cast<double>(count);
    for (auto& v : img.samples) v *= inv;
}

}  // namespace

ml_status ml_feature_multiscale_symmetry(const ml_monogenic* m, double threshold, double epsilon,
                                         int normalize, ml_image** out) {
    if (auto st = require(m && out, "ml_feature_multiscale_symmetry: null argument")) return st;
    return guarded([&] {
        auto map = monoline::multiscale_symmetry(m->scales, feature_params(threshold, epsilon));
        apply_normalize(map.values, m->scales.size(), normalize != 0);
        *out = make_image(std::move(map.values));
    });
}

ml_status ml_feature_multiscale_asymmetry(const ml_monogenic* m, double threshold,
                                          double epsilon, int normalize, ml_image** out) {
    if (auto st = require(m && out, "ml_feature_multiscale_asymmetry: null argument")) return st;
    return guarded([&] {
        auto map = monoline::multiscale_asymmetry(m->scales, feature_params(threshold, epsilon));
        apply_normalize(map.values, m->scales.size(), normalize != 0);
        *out = make_image(std::move(map.values));
    });
}

ml_status ml_feature_multiscale_signed_symmetry(const ml_monogenic* m, double threshold,
                                                double epsilon, int normalize, ml_image** out) {
    if (auto st = require(m && out, "ml_feature_multiscale_signed_symmetry: null argument"))
        return st;
    return guarded([&] {
        auto map =
            monoline::multiscale_signed_symmetry(m->scales, feature_params(threshold, epsilon));
        apply_normalize(map.values, m->scales.size(), normalize != 0);
        *out = make_image(std::move(map.values));
    });
}

ml_status ml_feature_multiscale_oriented_asymmetry(const ml_monogenic* m, double threshold,
                                                   double epsilon, int normalize,
                                                   ml_image** out_magnitude,
                                                   ml_image** out_angle) {
    if (auto st = require(m && out_magnitude && out_angle,
                          "ml_feature_multiscale_oriented_asymmetry: null argument"))
        return st;
    return guarded([&] {
        auto map =
            monoline::multiscale_oriented_asymmetry(m->scales, feature_params(threshold, epsilon));
        apply_normalize(map.values, m->scales.size(), normalize != 0);
        *out_magnitude = make_image(std::move(map.values));
        *out_angle = make_image(std::move(map.angle));
    });
}

}  // extern "C"
