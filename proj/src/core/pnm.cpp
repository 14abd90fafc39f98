// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#include "core/pnm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

namespace monoline {

namespace {

// Cursor over a fully loaded file, tracking the byte offset for diagnostics.
class ByteCursor {
public:
    ByteCursor(std::string data, std::string name)
        : data_(std::move(data)), name_(std::move(name)) {}

    std::size_t offset() const { return pos_; }
    bool eof() const { return pos_ >= data_.size(); }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(name_ + ": " + what + " at byte offset " + std::to_string(pos_), pos_);
    }

    int peek() const { return eof() ? -1 : static_cast<unsigned char>(data_[pos_]); }
    int get() { return eof() ? -1 : static_cast<unsigned char>(data_[pos_++]); }

    // PNM whitespace, with '#' comments running to end of line.
    void skip_space_and_comments() {
        while (!eof()) {
            const int c = peek();
            if (c == '#') {
                while (!eof() && get() != '\n') {
                }
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
                       c == '\f') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    unsigned long read_uint(const char* what) {
        skip_space_and_comments();
        if (eof() || peek() < '0' || peek() > '9') {
            fail(std::string("expected unsigned integer (") + what + ")");
        }
        unsigned long value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + static_cast<unsigned long>(get() - '0');
            if (value > 0xFFFFFFFFul) fail(std::string(what) + " out of range");
        }
        return value;
    }

    std::size_t remaining() const { return data_.size() - pos_; }
    const char* here() const { return data_.data() + pos_; }
    void advance(std::size_t n) { pos_ += n; }

private:
    std::string data_;
    std::string name_;
    std::size_t pos_ = 0;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

std::uint8_t quantize(double v, double lo, double hi) {
    const double t = (v - lo) / (hi - lo) * 255.0;
    const double r = std::round(t);  // half away from zero
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

void hsv_to_rgb(double h_deg, double s, double v, double rgb[3]) {
    const double c = v * s;
    const double hp = h_deg / 60.0;
    const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp) % 6) {
        case 0: r = c; g = x; break;
        case 1: r = x; g = c; break;
        case 2: g = c; b = x; break;
        case 3: g = x; b = c; break;
        case 4: r = x; b = c; break;
        default: r = c; b = x; break;
    }
    const double m = v - c;
    rgb[0] = r + m;
    rgb[1] = g + m;
    rgb[2] = b + m;
}

}  // namespace

RealImage read_pgm(const std::filesystem::path& path) {
    ByteCursor cur(slurp(path), path.string());

    const int m0 = cur.get();
    const int m1 = cur.get();
    if (m0 != 'P' || (m1 != '2' && m1 != '5')) {
        throw ParseError(path.string() + ": unsupported magic (want P2 or P5) at byte offset 0",
                         0);
    }
    const bool binary = m1 == '5';

    const unsigned long width = cur.read_uint("width");
    const unsigned long height = cur.read_uint("height");
    const unsigned long maxval = cur.read_uint("maxval");
    if (width == 0 || height == 0) cur.fail("zero image dimension");
    if (maxval != 255 && maxval != 65535) cur.fail("unsupported maxval (want 255 or 65535)");

    RealImage img(height, width);
    const double scale = 1.0 / static_cast<double>(maxval);
    const std::size_t count = img.size();

    if (binary) {
        // Exactly one whitespace byte separates the header from the payload.
        const int sep = cur.get();
        if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n') {
            cur.fail("missing whitespace before binary payload");
        }
        const std::size_t bytes_per = maxval > 255 ? 2 : 1;
        if (cur.remaining() < count * bytes_per) cur.fail("truncated payload");
        const unsigned char* p = reinterpret_cast<const unsigned char*>(cur.here());
        for (std::size_t i = 0; i < count; ++i) {
            unsigned long v;
            if (bytes_per == 2) {
                v = (static_cast<unsigned long>(p[2 * i]) << 8) | p[2 * i + 1];  // big-endian
            } else {
                v = p[i];
            }
            img.samples[i] = static_cast<double>(v) * scale;
        }
        cur.advance(count * bytes_per);
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const unsigned long v = cur.read_uint("sample");
            if (v > maxval) cur.fail("sample exceeds maxval");
            img.samples[i] = static_cast<double>(v) * scale;
        }
    }
    return img;
}

void write_pgm(const RealImage& img, const std::filesystem::path& path, double lo, double hi) {
    require_nonempty_image(img, "write_pgm");
    if (!(lo < hi)) {
        throw InvalidInputError("write_pgm: range lower bound must be below upper bound");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::string payload(img.size(), '\0');
    for (std::size_t i = 0; i < img.size(); ++i) {
        payload[i] = static_cast<char>(quantize(img.samples[i], lo, hi));
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) {
        throw IoError("short write: " + path.string());
    }
}

void write_orientation_ppm(const RealImage& orientation, const RealImage& magnitude,
                           const std::filesystem::path& path) {
    require_nonempty_image(orientation, "write_orientation_ppm");
    if (!orientation.same_shape(magnitude)) {
        throw ShapeMismatchError("write_orientation_ppm: orientation/magnitude shape mismatch");
    }
    double max_mag = 0.0;
    for (double m : magnitude.samples) max_mag = std::max(max_mag, m);

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << "P6\n" << orientation.width << " " << orientation.height << "\n255\n";
    constexpr double tau = 2.0 * std::numbers::pi;
    std::string payload(orientation.size() * 3, '\0');
    for (std::size_t i = 0; i < orientation.size(); ++i) {
        double theta = std::fmod(orientation.samples[i], tau);
        if (theta < 0.0) theta += tau;
        const double sat =
            max_mag > 0.0 ? std::clamp(magnitude.samples[i] / max_mag, 0.0, 1.0) : 0.0;
        double rgb[3];
        hsv_to_rgb(theta / tau * 360.0, sat, 1.0, rgb);
        for (int c = 0; c < 3; ++c) {
            payload[3 * i + c] = static_cast<char>(quantize(rgb[c], 0.0, 1.0));
        }
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) {
        throw IoError("short write: " + path.string());
    }
}

std::vector<double> read_csv_signal(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open for reading: " + path.string());
    }
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;  // blank line
        std::size_t e = line.find_last_not_of(" \t") + 1;
        const std::string_view tok(line.data() + b, e - b);
        if (line_no == 1 && tok == "value") continue;  // optional header
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
            throw ParseError(path.string() + ": non-numeric value on line " +
                                 std::to_string(line_no),
                             line_no);
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw InvalidInputError(path.string() + ": no samples in signal file");
    }
    return values;
}

void write_csv_signal(const std::vector<double>& signal, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    char buf[40];
    for (double v : signal) {
        const int len = std::snprintf(buf, sizeof buf, "%.17g\n", v);
        out.write(buf, len);
    }
    if (!out) {
        throw IoError("short write: " + path.string());
    }
}

}  // namespace monoline
