// Copyright (c) 2026 ram3d authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ram3d/image.hpp"

namespace ram3d {

/// 8-bit grayscale plane as stored on disk (no binarization applied).
struct GrayPng {
    int height = 0;
    int width = 0;
    std::vector<uint8_t> values;
};

Image load_image_png(const std::string& path);
void save_image_png(const std::string& path, const Image& image);

GrayPng load_gray_png(const std::string& path);
void save_gray_png(const std::string& path, const GrayPng& gray);

/// Little-endian single-channel PFM, for depth dumps.
void save_pfm(const std::string& path, const Grid& grid);

} // namespace ram3d
