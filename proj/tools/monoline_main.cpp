// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors
//
// Command-line front end over the monoline C API. Emits local
// amplitude/phase/orientation maps, feature symmetry/asymmetry measures,
// 1D scaleograms, and filter-bank dumps as PGM/PPM/CSV artifacts.

#include <monoline/monoline.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(ml_status status) {
    if (status != ML_OK) {
        throw CliError(std::string(ml_last_error_message()) + " [" +
                       ml_status_string(status) + "]");
    }
}

struct ImageDeleter {
    void operator()(ml_image* p) const { ml_image_destroy(p); }
};
struct SignalDeleter {
    void operator()(ml_signal* p) const { ml_signal_destroy(p); }
};
struct BankDeleter {
    void operator()(ml_filter_bank* p) const { ml_filter_bank_destroy(p); }
};
struct MonoDeleter {
    void operator()(ml_monogenic* p) const { ml_monogenic_destroy(p); }
};

using ImagePtr = std::unique_ptr<ml_image, ImageDeleter>;
using SignalPtr = std::unique_ptr<ml_signal, SignalDeleter>;
using BankPtr = std::unique_ptr<ml_filter_bank, BankDeleter>;
using MonoPtr = std::unique_ptr<ml_monogenic, MonoDeleter>;

ImagePtr own(ml_image* p) { return ImagePtr(p); }

// "20,60,100" or "start:stop:step" (inclusive stop).
std::vector<double> parse_wavelengths(const std::string& text) {
    std::vector<double> out;
    const auto parse_one = [](const std::string& tok) {
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw CliError("bad wavelength value '" + tok + "'");
        }
        if (used != tok.size()) throw CliError("bad wavelength value '" + tok + "'");
        return v;
    };
    if (text.find(':') != std::string::npos) {
        const auto a = text.find(':');
        const auto b = text.find(':', a + 1);
        if (b == std::string::npos || text.find(':', b + 1) != std::string::npos) {
            throw CliError("range syntax is start:stop:step");
        }
        const double start = parse_one(text.substr(0, a));
        const double stop = parse_one(text.substr(a + 1, b - a - 1));
        const double step = parse_one(text.substr(b + 1));
        if (step <= 0.0 || stop < start) {
            throw CliError("range syntax needs step > 0 and stop >= start");
        }
        for (int i = 0;; ++i) {
            const double v = start + step * i;
            if (v > stop + 1e-9 * step) break;
            out.push_back(v);
        }
    } else {
        std::string tok;
        for (size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == ',') {
                if (!tok.empty()) out.push_back(parse_one(tok));
                tok.clear();
            } else {
                tok += text[i];
            }
        }
    }
    if (out.empty()) throw CliError("empty wavelength list");
    for (double v : out) {
        if (!(v > 2.0)) {
            throw CliError("wavelength " + std::to_string(v) +
                           " is not above the 2 samples/cycle (Nyquist) limit");
        }
    }
    return out;
}

std::string format_lambda(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<std::string> split_emit(const std::string& text) {
    std::vector<std::string> out;
    std::string tok;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            if (!tok.empty()) out.push_back(tok);
            tok.clear();
        } else {
            tok += text[i];
        }
    }
    return out;
}

void validate_emit(const std::vector<std::string>& emit, const std::set<std::string>& allowed) {
    for (const auto& e : emit) {
        if (!allowed.count(e)) {
            std::string msg = "unknown emit token '" + e + "'; expected one of:";
            for (const auto& a : allowed) msg += " " + a;
            throw CliError(msg);
        }
    }
}

double max_value(const ml_image* img) {
    const double* d = ml_image_data(img);
    const size_t n = ml_image_height(img) * ml_image_width(img);
    double m = 0.0;
    for (size_t i = 0; i < n; ++i) m = std::max(m, d[i]);
    return m;
}

double max_abs_value(const ml_image* img) {
    const double* d = ml_image_data(img);
    const size_t n = ml_image_height(img) * ml_image_width(img);
    double m = 0.0;
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::abs(d[i]));
    return m;
}

void report(const fs::path& path, const ml_image* img) {
    std::cout << "wrote " << path.string() << " (" << ml_image_width(img) << "x"
              << ml_image_height(img) << ")\n";
}

void write_gray(const ml_image* img, const fs::path& path, double lo, double hi) {
    check(ml_image_write_pgm(img, path.string().c_str(), lo, hi));
    report(path, img);
}

void write_hue(const ml_image* angle, const ml_image* mag, const fs::path& path) {
    check(ml_image_write_orientation_ppm(angle, mag, path.string().c_str()));
    report(path, angle);
}

// Moves the zero-frequency / centre tap from index 0 to the raster centre.
ImagePtr fftshift(const ml_image* img) {
    const size_t h = ml_image_height(img), w = ml_image_width(img);
    const double* d = ml_image_data(img);
    std::vector<double> shifted(h * w);
    for (size_t y = 0; y < h; ++y) {
        const size_t sy = (y + h / 2) % h;
        for (size_t x = 0; x < w; ++x) {
            const size_t sx = (x + w / 2) % w;
            shifted[sy * w + sx] = d[y * w + x];
        }
    }
    ml_image* out = nullptr;
    check(ml_image_create(h, w, shifted.data(), &out));
    return own(out);
}

struct CommonOptions {
    std::string wavelength_text = "20,60,100";
    double sigma0 = 0.5;
    double threshold = 0.18;
    double epsilon = 1e-3;
    std::string emit_text;
    std::string out_dir = ".";
    bool pad = false;
    bool normalize = false;
};

fs::path ensure_out_dir(const std::string& dir) {
    fs::path p(dir);
    if (!p.empty()) fs::create_directories(p);
    return p;
}

// Shared state for the image/features subcommands: padded pipeline plus
// crop-back geometry.
struct Pipeline {
    ImagePtr input;
    BankPtr bank;
    MonoPtr mono;
    size_t out_h = 0, out_w = 0;  // final (cropped) size
    bool padded = false;
    std::vector<double> wavelengths;
};

Pipeline run_pipeline(const std::string& input_path, const CommonOptions& opt) {
    Pipeline p;
    p.wavelengths = parse_wavelengths(opt.wavelength_text);

    ml_image* raw = nullptr;
    check(ml_image_read_pgm(input_path.c_str(), &raw));
    p.input = own(raw);
    p.out_h = ml_image_height(raw);
    p.out_w = ml_image_width(raw);
    p.padded = opt.pad;

    const ml_image* work = p.input.get();
    ImagePtr padded;
    if (opt.pad) {
        ml_image* tmp = nullptr;
        check(ml_image_mirror_pad_double(p.input.get(), &tmp));
        padded = own(tmp);
        work = padded.get();
    }

    ml_filter_bank* bank = nullptr;
    check(ml_filter_bank_create(ml_image_height(work), ml_image_width(work),
                                p.wavelengths.data(), p.wavelengths.size(), opt.sigma0, &bank));
    p.bank = BankPtr(bank);

    ml_monogenic* mono = nullptr;
    check(ml_monogenic_compute(work, bank, &mono));
    p.mono = MonoPtr(mono);
    return p;
}

ImagePtr maybe_crop(const Pipeline& p, ImagePtr img) {
    if (!p.padded) return img;
    ml_image* out = nullptr;
    check(ml_image_crop(img.get(), 0, 0, p.out_h, p.out_w, &out));
    return own(out);
}

int cmd_image(const std::string& input, const CommonOptions& opt) {
    const std::set<std::string> allowed{"amplitude", "phase", "orientation",
                                        "even",      "odd1",  "odd2"};
    auto emit = split_emit(opt.emit_text.empty() ? "amplitude,phase,orientation"
                                                 : opt.emit_text);
    validate_emit(emit, allowed);

    Pipeline p = run_pipeline(input, opt);
    const fs::path out_dir = ensure_out_dir(opt.out_dir);
    const std::string stem = fs::path(input).stem().string();

    for (size_t s = 0; s < p.wavelengths.size(); ++s) {
        const std::string tag = "_l" + format_lambda(p.wavelengths[s]);
        for (const auto& e : emit) {
            ml_image* raw = nullptr;
            if (e == "amplitude") {
                check(ml_monogenic_amplitude(p.mono.get(), s, &raw));
                auto img = maybe_crop(p, own(raw));
                const double hi = max_value(img.get());
                write_gray(img.get(), out_dir / (stem + "_amplitude" + tag + ".pgm"), 0.0,
                           hi > 0.0 ? hi : 1.0);
            } else if (e == "phase") {
                check(ml_monogenic_phase(p.mono.get(), s, &raw));
                auto img = maybe_crop(p, own(raw));
                write_gray(img.get(), out_dir / (stem + "_phase" + tag + ".pgm"), 0.0, kPi);
            } else if (e == "orientation") {
                check(ml_monogenic_orientation(p.mono.get(), s, &raw));
                auto angle = maybe_crop(p, own(raw));
                ml_image* mag_raw = nullptr;
                check(ml_monogenic_odd_magnitude(p.mono.get(), s, &mag_raw));
                auto mag = maybe_crop(p, own(mag_raw));
                write_hue(angle.get(), mag.get(),
                          out_dir / (stem + "_orientation" + tag + ".ppm"));
            } else {
                const ml_part part = e == "even"   ? ML_PART_EVEN
                                     : e == "odd1" ? ML_PART_ODD1
                                                   : ML_PART_ODD2;
                check(ml_monogenic_part(p.mono.get(), s, part, &raw));
                auto img = maybe_crop(p, own(raw));
                const double m = max_abs_value(img.get());
                write_gray(img.get(), out_dir / (stem + "_" + e + tag + ".pgm"),
                           m > 0.0 ? -m : -1.0, m > 0.0 ? m : 1.0);
            }
        }
    }
    return 0;
}

int cmd_features(const std::string& input, const CommonOptions& opt) {
    const std::set<std::string> allowed{
        "sym",           "asym",           "signed-sym",          "oriented-asym",
        "multiscale-sym", "multiscale-asym", "multiscale-signed-sym",
        "multiscale-oriented-asym"};
    auto emit = split_emit(opt.emit_text.empty() ? "sym,asym" : opt.emit_text);
    validate_emit(emit, allowed);

    Pipeline p = run_pipeline(input, opt);
    const fs::path out_dir = ensure_out_dir(opt.out_dir);
    const std::string stem = fs::path(input).stem().string();
    const double T = opt.threshold, eps = opt.epsilon;
    const int norm = opt.normalize ? 1 : 0;

    for (const auto& e : emit) {
        if (e.rfind("multiscale-", 0) == 0) {
            const std::string measure = e.substr(std::string("multiscale-").size());
            ml_image* raw = nullptr;
            if (e == "multiscale-sym") {
                check(ml_feature_multiscale_symmetry(p.mono.get(), T, eps, norm, &raw));
                auto img = maybe_crop(p, own(raw));
                write_gray(img.get(), out_dir / (stem + "_sym_ms.pgm"), 0.0, 1.0);
            } else if (e == "multiscale-asym") {
                check(ml_feature_multiscale_asymmetry(p.mono.get(), T, eps, norm, &raw));
                auto img = maybe_crop(p, own(raw));
                write_gray(img.get(), out_dir / (stem + "_asym_ms.pgm"), 0.0, 1.0);
            } else if (e == "multiscale-signed-sym") {
                check(ml_feature_multiscale_signed_symmetry(p.mono.get(), T, eps, norm, &raw));
                auto img = maybe_crop(p, own(raw));
                write_gray(img.get(), out_dir / (stem + "_signed-sym_ms.pgm"), -1.0, 1.0);
            } else {
                ml_image* ang_raw = nullptr;
                check(ml_feature_multiscale_oriented_asymmetry(p.mono.get(), T, eps, norm, &raw,
                                                               &ang_raw));
                auto mag = maybe_crop(p, own(raw));
                auto ang = maybe_crop(p, own(ang_raw));
                write_hue(ang.get(), mag.get(), out_dir / (stem + "_" + measure + "_ms.ppm"));
            }
            continue;
        }
        for (size_t s = 0; s < p.wavelengths.size(); ++s) {
            const std::string tag = "_l" + format_lambda(p.wavelengths[s]);
            ml_image* raw = nullptr;
            if (e == "sym") {
                check(ml_feature_symmetry(p.mono.get(), s, T, eps, &raw));
                auto img = maybe_crop(p, own(raw));
                write_gray(img.get(), out_dir / (stem + "_sym" + tag + ".pgm"), 0.0, 1.0);
            } else if (e == "asym") {
                check(ml_feature_asymmetry(p.mono.get(), s, T, eps, &raw));
                auto img = maybe_crop(p, own(raw));
                write_gray(img.get(), out_dir / (stem + "_asym" + tag + ".pgm"), 0.0, 1.0);
            } else if (e == "signed-sym") {
                check(ml_feature_signed_symmetry(p.mono.get(), s, T, eps, &raw));
                auto img = maybe_crop(p, own(raw));
                write_gray(img.get(), out_dir / (stem + "_signed-sym" + tag + ".pgm"), -1.0,
                           1.0);
            } else {
                ml_image* ang_raw = nullptr;
                check(ml_feature_oriented_asymmetry(p.mono.get(), s, T, eps, &raw, &ang_raw));
                auto mag = maybe_crop(p, own(raw));
                auto ang = maybe_crop(p, own(ang_raw));
                write_hue(ang.get(), mag.get(),
                          out_dir / (stem + "_oriented-asym" + tag + ".ppm"));
            }
        }
    }
    return 0;
}

int cmd_scaleogram(const std::string& input, const CommonOptions& opt) {
    const auto wavelengths = parse_wavelengths(opt.wavelength_text);
    ml_signal* sig_raw = nullptr;
    check(ml_signal_read_csv(input.c_str(), &sig_raw));
    SignalPtr sig(sig_raw);

    ml_image* raw = nullptr;
    check(ml_signal_scaleogram(sig.get(), wavelengths.data(), wavelengths.size(), opt.sigma0,
                               &raw));
    auto img = own(raw);

    const fs::path out_dir = ensure_out_dir(opt.out_dir);
    const std::string stem = fs::path(input).stem().string();
    write_gray(img.get(), out_dir / (stem + "_scaleogram.pgm"), -kPi, kPi);
    return 0;
}

int cmd_signal(const std::string& input, const CommonOptions& opt) {
    const std::set<std::string> allowed{"amplitude", "phase"};
    auto emit = split_emit(opt.emit_text.empty() ? "amplitude,phase" : opt.emit_text);
    validate_emit(emit, allowed);

    const auto wavelengths = parse_wavelengths(opt.wavelength_text);
    ml_signal* sig_raw = nullptr;
    check(ml_signal_read_csv(input.c_str(), &sig_raw));
    SignalPtr sig(sig_raw);

    const fs::path out_dir = ensure_out_dir(opt.out_dir);
    const std::string stem = fs::path(input).stem().string();

    for (double lambda : wavelengths) {
        ml_signal* amp_raw = nullptr;
        ml_signal* phase_raw = nullptr;
        check(ml_signal_local_phase_amplitude(sig.get(), lambda, opt.sigma0, &amp_raw,
                                              &phase_raw));
        SignalPtr amp(amp_raw), phase(phase_raw);
        const std::string tag = "_l" + format_lambda(lambda);
        for (const auto& e : emit) {
            const ml_signal* src = e == "amplitude" ? amp.get() : phase.get();
            const fs::path path = out_dir / (stem + "_" + e + tag + ".csv");
            check(ml_signal_write_csv(src, path.string().c_str()));
            std::cout << "wrote " << path.string() << " (" << ml_signal_length(src)
                      << " samples)\n";
        }
    }
    return 0;
}

int cmd_filters(const std::string& size_text, const CommonOptions& opt) {
    const auto sep = size_text.find('x');
    if (sep == std::string::npos) throw CliError("--size expects HxW, e.g. 256x256");
    size_t h = 0, w = 0;
    try {
        h = std::stoul(size_text.substr(0, sep));
        w = std::stoul(size_text.substr(sep + 1));
    } catch (const std::exception&) {
        throw CliError("--size expects HxW, e.g. 256x256");
    }

    const auto wavelengths = parse_wavelengths(opt.wavelength_text);
    ml_filter_bank* bank_raw = nullptr;
    check(ml_filter_bank_create(h, w, wavelengths.data(), wavelengths.size(), opt.sigma0,
                                &bank_raw));
    BankPtr bank(bank_raw);

    const fs::path out_dir = ensure_out_dir(opt.out_dir);
    for (size_t s = 0; s < wavelengths.size(); ++s) {
        const std::string tag = "_l" + format_lambda(wavelengths[s]);

        ml_image* raw = nullptr;
        check(ml_filter_bank_even(bank.get(), s, &raw));
        auto even = fftshift(own(raw).get());
        write_gray(even.get(), out_dir / ("filters_even" + tag + ".pgm"), 0.0, 1.0);

        check(ml_filter_bank_even_impulse(bank.get(), s, &raw));
        auto even_imp = fftshift(own(raw).get());
        const double m = max_abs_value(even_imp.get());
        write_gray(even_imp.get(), out_dir / ("filters_even_impulse" + tag + ".pgm"),
                   m > 0.0 ? -m : -1.0, m > 0.0 ? m : 1.0);

        ml_image* re_raw = nullptr;
        ml_image* im_raw = nullptr;
        check(ml_filter_bank_odd_impulse(bank.get(), s, &re_raw, &im_raw));
        auto re = own(re_raw), im = own(im_raw);
        const size_t n = ml_image_height(re.get()) * ml_image_width(re.get());
        const double* pr = ml_image_data(re.get());
        const double* pi = ml_image_data(im.get());
        std::vector<double> arg(n), mag(n);
        for (size_t i = 0; i < n; ++i) {
            mag[i] = std::hypot(pr[i], pi[i]);
            arg[i] = mag[i] > 0.0 ? std::atan2(pi[i], pr[i]) : 0.0;
        }
        ml_image* arg_raw = nullptr;
        ml_image* mag_raw = nullptr;
        check(ml_image_create(ml_image_height(re.get()), ml_image_width(re.get()), arg.data(),
                              &arg_raw));
        check(ml_image_create(ml_image_height(re.get()), ml_image_width(re.get()), mag.data(),
                              &mag_raw));
        auto arg_img = fftshift(own(arg_raw).get());
        auto mag_img = fftshift(own(mag_raw).get());
        write_hue(arg_img.get(), mag_img.get(),
                  out_dir / ("filters_odd_impulse" + tag + ".ppm"));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monogenic-signal image and signal analysis"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string input;
    std::string size_text = "256x256";

    const auto add_common = [&](CLI::App* sub, bool features) {
        sub->add_option("--wavelengths", opt.wavelength_text,
                        "comma list (20,60,100) or range (5:100:5), pixels/cycle");
        sub->add_option("--sigma0", opt.sigma0, "log-Gabor shape parameter in (0,1)");
        sub->add_option("--emit", opt.emit_text, "comma list of maps to write");
        sub->add_option("--out-dir", opt.out_dir, "output directory");
        if (features) {
            sub->add_option("-T,--threshold", opt.threshold, "feature threshold (>= 0)");
            sub->add_option("--epsilon", opt.epsilon, "feature stabilizer (> 0)");
        }
    };

    auto* image = app.add_subcommand("image", "monogenic maps of a PGM image");
    image->add_option("input", input, "input PGM")->required();
    add_common(image, false);
    image->add_flag("--pad", opt.pad, "mirror-pad to double size, crop after");

    auto* features = app.add_subcommand("features", "feature symmetry/asymmetry maps");
    features->add_option("input", input, "input PGM")->required();
    add_common(features, true);
    features->add_flag("--pad", opt.pad, "mirror-pad to double size, crop after");
    features->add_flag("--normalize", opt.normalize,
                       "divide multiscale sums by the scale count");

    auto* scaleogram = app.add_subcommand("scaleogram", "local-phase scaleogram of a CSV signal");
    scaleogram->add_option("input", input, "input CSV (one value per line)")->required();
    add_common(scaleogram, false);

    auto* signal = app.add_subcommand("signal", "local amplitude/phase of a CSV signal");
    signal->add_option("input", input, "input CSV (one value per line)")->required();
    add_common(signal, false);

    auto* filters = app.add_subcommand("filters", "dump filter-bank rasters");
    filters->add_option("--size", size_text, "grid size HxW");
    add_common(filters, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (image->parsed()) return cmd_image(input, opt);
        if (features->parsed()) return cmd_features(input, opt);
        if (scaleogram->parsed()) return cmd_scaleogram(input, opt);
        if (signal->parsed()) return cmd_signal(input, opt);
        if (filters->parsed()) return cmd_filters(size_text, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
