// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#pragma once

#include <filesystem>
#include <vector>

#include "core/image.hpp"

namespace monoline {

/// Reads a P2 (ASCII) or P5 (binary) PGM with maxval 255 or 65535 (16-bit
/// samples are big-endian per the PNM convention). Pixel values are
/// normalized to [0, 1] by dividing by maxval. Malformed headers or truncated
/// payloads raise ParseError carrying the byte offset.
RealImage read_pgm(const std::filesystem::path& path);

/// Writes a P5 PGM with maxval 255, mapping [lo, hi] linearly onto [0, 255]
/// with clamping and round-half-away-from-zero.
void write_pgm(const RealImage& img, const std::filesystem::path& path, double lo, double hi);

/// Writes a P6 PPM encoding orientation as hue (theta mod 2pi over the full
/// hue circle) and magnitude as saturation (normalized by the magnitude
/// maximum; zero saturation i.e. white when the maximum is 0), value fixed
/// at 1.
void write_orientation_ppm(const RealImage& orientation, const RealImage& magnitude,
                           const std::filesystem::path& path);

/// One decimal value per line; an optional leading header line "value" is
/// skipped. Non-numeric lines raise ParseError with the 1-based line number.
std::vector<double> read_csv_signal(const std::filesystem::path& path);

/// One value per line, shortest round-trippable decimal representation.
void write_csv_signal(const std::vector<double>& signal, const std::filesystem::path& path);

}  // namespace monoline
