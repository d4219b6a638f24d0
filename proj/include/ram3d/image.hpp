// Copyright (c) 2026 ram3d authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "ram3d/errors.hpp"

namespace ram3d {

/// RGB image, row-major H*W*3 doubles in [0,1].
struct Image {
    int height = 0;
    int width = 0;
    std::vector<double> data;

    Image() = default;
    Image(int h, int w, double fill = 0.0) : height(h), width(w), data(size_t(h) * w * 3, fill) {}

    double& at(int r, int c, int ch) { return data[(size_t(r) * width + c) * 3 + ch]; }
    double at(int r, int c, int ch) const { return data[(size_t(r) * width + c) * 3 + ch]; }
    size_t pixel_count() const { return size_t(height) * width; }
    bool same_shape(const Image& o) const { return height == o.height && width == o.width; }
};

/// Scalar per-pixel map (alpha, depth, ...).
struct Grid {
    int height = 0;
    int width = 0;
    std::vector<double> data;

    Grid() = default;
    Grid(int h, int w, double fill = 0.0) : height(h), width(w), data(size_t(h) * w, fill) {}

    double& at(int r, int c) { return data[size_t(r) * width + c]; }
    double at(int r, int c) const { return data[size_t(r) * width + c]; }
};

/// Binary per-pixel mask (0/1 bytes).
struct Mask {
    int height = 0;
    int width = 0;
    std::vector<uint8_t> bits;

    Mask() = default;
    Mask(int h, int w, uint8_t fill = 0) : height(h), width(w), bits(size_t(h) * w, fill) {}

    uint8_t& at(int r, int c) { return bits[size_t(r) * width + c]; }
    uint8_t at(int r, int c) const { return bits[size_t(r) * width + c]; }
    size_t count() const {
        size_t n = 0;
        for (uint8_t b : bits) n += b != 0;
        return n;
    }
    bool same_shape(const Mask& o) const { return height == o.height && width == o.width; }
};

/// Channel-major C*H*W tensor; latents and feature maps.
struct Tensor3 {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> data;

    Tensor3() = default;
    Tensor3(int c, int h, int w, double fill = 0.0)
        : channels(c), height(h), width(w), data(size_t(c) * h * w, fill) {}

    double& at(int c, int r, int col) { return data[(size_t(c) * height + r) * width + col]; }
    double at(int c, int r, int col) const { return data[(size_t(c) * height + r) * width + col]; }
    bool same_shape(const Tensor3& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }
};

inline void require_same_shape(const Image& a, const Image& b, const char* what) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(what) + ": image shapes differ");
}

inline void require_mask_shape(const Mask& m, int h, int w, const char* what) {
    if (m.height != h || m.width != w)
        throw ShapeError(std::string(what) + ": mask shape does not match frame");
}

} // namespace ram3d
