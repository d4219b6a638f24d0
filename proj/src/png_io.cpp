// Copyright (c) 2026 ram3d authors
// SPDX-License-Identifier: Apache-2.0
#include "ram3d/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>

#include "ram3d/errors.hpp"

namespace ram3d {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw IoError("cannot open " + path);
    return f;
}

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

// Reads any PNG and normalizes to 8-bit with `want_channels` (1 or 3).
std::vector<uint8_t> read_png_normalized(const std::string& path, int want_channels, int& h, int& w) {
    FilePtr f = open_file(path, "rb");
    PngReader r;
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!r.png) throw IoError("libpng init failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw IoError("libpng init failed");
    if (setjmp(png_jmpbuf(r.png))) throw ParseError("malformed PNG: " + path);

    png_init_io(r.png, f.get());
    png_read_info(r.png, r.info);

    png_set_strip_16(r.png);
    png_set_packing(r.png);
    png_set_strip_alpha(r.png);
    const int color_type = png_get_color_type(r.png, r.info);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(r.png);
    if (want_channels == 3) {
        if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
            png_set_gray_to_rgb(r.png);
    } else {
        if (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_GRAY_ALPHA)
            png_set_rgb_to_gray_fixed(r.png, 1, -1, -1);
    }
    if (png_get_bit_depth(r.png, r.info) < 8) png_set_expand_gray_1_2_4_to_8(r.png);
    png_read_update_info(r.png, r.info);

    h = static_cast<int>(png_get_image_height(r.png, r.info));
    w = static_cast<int>(png_get_image_width(r.png, r.info));
    const size_t rowbytes = png_get_rowbytes(r.png, r.info);
    if (rowbytes != size_t(w) * want_channels)
        throw ParseError("unexpected PNG layout: " + path);

    std::vector<uint8_t> out(size_t(h) * rowbytes);
    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y) rows[y] = out.data() + size_t(y) * rowbytes;
    png_read_image(r.png, rows.data());
    png_read_end(r.png, nullptr);
    return out;
}

void write_png(const std::string& path, int h, int w, int channels, const uint8_t* bytes) {
    FilePtr f = open_file(path, "wb");
    PngWriter wr;
    wr.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!wr.png) throw IoError("libpng init failed");
    wr.info = png_create_info_struct(wr.png);
    if (!wr.info) throw IoError("libpng init failed");
    if (setjmp(png_jmpbuf(wr.png))) throw IoError("PNG write failed: " + path);

    png_init_io(wr.png, f.get());
    png_set_IHDR(wr.png, wr.info, w, h, 8,
                 channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(wr.png, wr.info);

    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y)
        rows[y] = const_cast<png_bytep>(bytes + size_t(y) * w * channels);
    png_write_image(wr.png, rows.data());
    png_write_end(wr.png, nullptr);
}

uint8_t to_byte(double v) {
    const double s = std::lround(v * 255.0);
    return static_cast<uint8_t>(s < 0 ? 0 : (s > 255 ? 255 : s));
}

} // namespace

Image load_image_png(const std::string& path) {
    int h = 0, w = 0;
    std::vector<uint8_t> bytes = read_png_normalized(path, 3, h, w);
    Image img(h, w);
    for (size_t i = 0; i < bytes.size(); ++i) img.data[i] = bytes[i] / 255.0;
    return img;
}

void save_image_png(const std::string& path, const Image& image) {
    std::vector<uint8_t> bytes(image.data.size());
    for (size_t i = 0; i < bytes.size(); ++i) bytes[i] = to_byte(image.data[i]);
    write_png(path, image.height, image.width, 3, bytes.data());
}

GrayPng load_gray_png(const std::string& path) {
    GrayPng g;
    g.values = read_png_normalized(path, 1, g.height, g.width);
    return g;
}

void save_gray_png(const std::string& path, const GrayPng& gray) {
    if (gray.values.size() != size_t(gray.height) * gray.width)
        throw ShapeError("gray plane size mismatch");
    write_png(path, gray.height, gray.width, 1, gray.values.data());
}

void save_pfm(const std::string& path, const Grid& grid) {
    FilePtr f = open_file(path, "wb");
    // "Pf" header, negative scale flags little-endian payload.
    std::string header = "Pf\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) + "\n-1.0\n";
    if (std::fwrite(header.data(), 1, header.size(), f.get()) != header.size())
        throw IoError("PFM write failed: " + path);
    // PFM rows are bottom-up.
    for (int r = grid.height - 1; r >= 0; --r) {
        std::vector<float> row(grid.width);
        for (int c = 0; c < grid.width; ++c) row[c] = static_cast<float>(grid.at(r, c));
        if (std::fwrite(row.data(), sizeof(float), row.size(), f.get()) != row.size())
            throw IoError("PFM write failed: " + path);
    }
}

} // namespace ram3d
