// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Monoline Contributors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monoline {

// Zero or negative extent where a positive one is required.
class InvalidSizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Bad parameter values or non-finite sample data.
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two rasters (or a raster and a grid) that must agree in shape do not.
class ShapeMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input file. `offset` is a byte offset for binary formats and a
// 1-based line number for line-oriented ones; the message says which.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Filesystem-level failure (unreadable/unwritable path, short write).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace monoline
