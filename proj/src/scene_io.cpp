// Copyright (c) 2026 ram3d authors
// SPDX-License-Identifier: Apache-2.0
#include "ram3d/scene_io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "ram3d/errors.hpp"
#include "ram3d/png_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace ram3d {

void Camera::validate() const {
    if (width <= 0 || height <= 0) throw ParseError("camera: non-positive frame size");
    if (!(fx > 0) || !(fy > 0)) throw ParseError("camera: focal lengths must be positive");
    if (!(near > 0) || !(near < far)) throw ParseError("camera: require 0 < near < far");
    // Rotation block orthonormality: R^T R == I within 1e-6.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double dot = 0;
            for (int k = 0; k < 3; ++k) dot += cam_to_world[k * 4 + i] * cam_to_world[k * 4 + j];
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(dot - want) > 1e-6)
                throw ParseError("camera: rotation block not orthonormal");
        }
    }
}

Mask RegionSet::bubble() const {
    Mask out = mask;
    for (size_t i = 0; i < out.bits.size(); ++i) out.bits[i] = mask.bits[i] || halo.bits[i];
    return out;
}

void RegionSet::validate() const {
    if (!mask.same_shape(halo)) throw ShapeError("region: mask and halo shapes differ");
    for (size_t i = 0; i < mask.bits.size(); ++i)
        if (mask.bits[i] && halo.bits[i]) throw ShapeError("region: mask and halo overlap");
}

Mask dilate_mask(const Mask& mask, int radius) {
    if (radius < 0) throw ShapeError("dilate_mask: negative radius");
    if (radius == 0) return mask;
    // Square structuring element of side 2r+1, applied separably.
    const int h = mask.height, w = mask.width;
    Mask horiz(h, w);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            uint8_t v = 0;
            const int lo = std::max(0, c - radius), hi = std::min(w - 1, c + radius);
            for (int k = lo; k <= hi && !v; ++k) v = mask.at(r, k);
            horiz.at(r, c) = v;
        }
    }
    Mask out(h, w);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            uint8_t v = 0;
            const int lo = std::max(0, r - radius), hi = std::min(h - 1, r + radius);
            for (int k = lo; k <= hi && !v; ++k) v = horiz.at(k, c);
            out.at(r, c) = v;
        }
    }
    return out;
}

RegionSet compute_halo(const Mask& mask, int width) {
    if (width < 1) throw ShapeError("compute_halo: width must be >= 1");
    RegionSet region;
    region.mask = mask;
    region.halo = dilate_mask(mask, width);
    for (size_t i = 0; i < mask.bits.size(); ++i)
        if (mask.bits[i]) region.halo.bits[i] = 0;
    return region;
}

namespace {

struct Bbox {
    int r0, r1, c0, c1; // inclusive
    bool empty;
};

Bbox mask_bbox(const Mask& m) {
    Bbox b{m.height, -1, m.width, -1, true};
    for (int r = 0; r < m.height; ++r) {
        for (int c = 0; c < m.width; ++c) {
            if (!m.at(r, c)) continue;
            b.empty = false;
            b.r0 = std::min(b.r0, r);
            b.r1 = std::max(b.r1, r);
            b.c0 = std::min(b.c0, c);
            b.c1 = std::max(b.c1, c);
        }
    }
    return b;
}

// Nearest value to `want` inside [lo, hi].
int clamp_near(int want, int lo, int hi) { return std::max(lo, std::min(hi, want)); }

} // namespace

CropSpec compute_crop(const RegionSet& region, int frame_w, int frame_h, CropMode mode,
                      int resample_to) {
    CropSpec spec;
    spec.resample_to = resample_to;
    const int min_dim = std::min(frame_w, frame_h);
    switch (mode) {
    case CropMode::CenterHeight:
        spec.side = min_dim;
        spec.x0 = (frame_w - spec.side) / 2;
        spec.y0 = (frame_h - spec.side) / 2;
        return spec;
    case CropMode::LeftMost:
        spec.side = min_dim;
        spec.x0 = 0;
        spec.y0 = (frame_h - spec.side) / 2;
        return spec;
    case CropMode::MaskAdaptive:
        break;
    }
    const Bbox b = mask_bbox(region.mask);
    if (b.empty) throw EmptyMask("compute_crop: MaskAdaptive requires a nonempty mask");
    const int bw = b.c1 - b.c0 + 1, bh = b.r1 - b.r0 + 1;
    // Double the tight box about its center, square up to the longer side,
    // then clamp into the frame while still covering the box.
    int side = std::max(2 * bw, 2 * bh);
    side = std::min(side, min_dim);
    side = std::max(side, std::max(bw, bh));
    if (side > min_dim)
        throw ShapeError("compute_crop: mask bounding box does not fit a square crop");
    const double cx = (b.c0 + b.c1 + 1) / 2.0, cy = (b.r0 + b.r1 + 1) / 2.0;
    int x0 = static_cast<int>(std::lround(cx - side / 2.0));
    int y0 = static_cast<int>(std::lround(cy - side / 2.0));
    x0 = clamp_near(x0, std::max(0, b.c1 + 1 - side), std::min(b.c0, frame_w - side));
    y0 = clamp_near(y0, std::max(0, b.r1 + 1 - side), std::min(b.r0, frame_h - side));
    spec.x0 = x0;
    spec.y0 = y0;
    spec.side = side;
    return spec;
}

namespace {

std::vector<fs::path> list_pngs(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw CountMismatch("missing directory: " + dir.string());
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".png") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

Camera parse_camera(const json& rec) {
    Camera cam;
    try {
        cam.width = rec.at("width").get<int>();
        cam.height = rec.at("height").get<int>();
        cam.fx = rec.at("fx").get<double>();
        cam.fy = rec.at("fy").get<double>();
        cam.cx = rec.at("cx").get<double>();
        cam.cy = rec.at("cy").get<double>();
        cam.near = rec.at("near").get<double>();
        cam.far = rec.at("far").get<double>();
        const auto& m = rec.at("cam_to_world");
        if (!m.is_array() || m.size() != 12)
            throw ParseError("camera: cam_to_world must hold 12 floats");
        for (int i = 0; i < 12; ++i) cam.cam_to_world[i] = m[i].get<double>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("camera record: ") + e.what());
    }
    cam.validate();
    return cam;
}

json camera_to_json(const Camera& cam, const std::string& file) {
    json rec;
    rec["file"] = file;
    rec["width"] = cam.width;
    rec["height"] = cam.height;
    rec["fx"] = cam.fx;
    rec["fy"] = cam.fy;
    rec["cx"] = cam.cx;
    rec["cy"] = cam.cy;
    rec["cam_to_world"] = cam.cam_to_world;
    rec["near"] = cam.near;
    rec["far"] = cam.far;
    return rec;
}

} // namespace

SceneDataset load_dataset(const std::string& root, const DatasetConfig& config) {
    const fs::path base(root);
    const auto image_files = list_pngs(base / "images");
    const auto mask_files = list_pngs(base / "masks");
    if (image_files.empty()) throw CountMismatch("dataset has no images: " + root);
    if (image_files.size() != mask_files.size())
        throw CountMismatch("images/masks count mismatch: " + std::to_string(image_files.size()) +
                            " vs " + std::to_string(mask_files.size()));

    std::ifstream cam_in(base / "cameras.json");
    if (!cam_in) throw CountMismatch("missing cameras.json in " + root);
    json cams;
    try {
        cam_in >> cams;
    } catch (const json::exception& e) {
        throw ParseError(std::string("cameras.json: ") + e.what());
    }
    if (cams.value("convention", "") != std::string("opengl"))
        throw ParseError("cameras.json: convention must be \"opengl\"");
    if (!cams.contains("frames") || !cams["frames"].is_array())
        throw ParseError("cameras.json: missing frames array");
    if (cams["frames"].size() != image_files.size())
        throw CountMismatch("images/cameras count mismatch: " + std::to_string(image_files.size()) +
                            " vs " + std::to_string(cams["frames"].size()));

    // Align camera records with image files by name.
    std::vector<json> by_file(cams["frames"].begin(), cams["frames"].end());
    std::sort(by_file.begin(), by_file.end(), [](const json& a, const json& b) {
        return a.value("file", "") < b.value("file", "");
    });

    SceneDataset ds;
    ds.scene_name = config.scene_name.empty() ? base.filename().string() : config.scene_name;
    ds.guidance_resolution = config.guidance_resolution;
    ds.frames.reserve(image_files.size());
    for (size_t i = 0; i < image_files.size(); ++i) {
        Frame frame;
        frame.name = image_files[i].stem().string();
        if (mask_files[i].filename() != image_files[i].filename())
            throw CountMismatch("mask filename does not match image: " + mask_files[i].string());
        if (by_file[i].value("file", "") != image_files[i].filename().string())
            throw CountMismatch("camera record missing for " + image_files[i].filename().string());
        frame.image = load_image_png(image_files[i].string());
        frame.camera = parse_camera(by_file[i]);
        if (frame.camera.width != frame.image.width || frame.camera.height != frame.image.height)
            throw ShapeError("image size does not match camera record: " + frame.name);

        const GrayPng gray = load_gray_png(mask_files[i].string());
        if (gray.height != frame.image.height || gray.width != frame.image.width)
            throw ShapeError("mask size does not match image: " + frame.name);
        Mask mask(gray.height, gray.width);
        for (size_t k = 0; k < gray.values.size(); ++k) mask.bits[k] = gray.values[k] > 127;
        frame.region = compute_halo(dilate_mask(mask, config.dilation_radius), config.halo_width);
        frame.region.validate();
        ds.frames.push_back(std::move(frame));
    }
    return ds;
}

void export_edited_dataset(const SceneDataset& dataset, const std::vector<Image>& edits,
                           const std::string& out_path) {
    if (edits.size() != dataset.frames.size())
        throw CountMismatch("export: " + std::to_string(edits.size()) + " edits for " +
                            std::to_string(dataset.frames.size()) + " frames");
    const fs::path base(out_path);
    std::error_code ec;
    fs::create_directories(base / "images", ec);
    fs::create_directories(base / "masks", ec);
    if (ec) throw IoError("cannot create " + out_path);

    json cams;
    cams["convention"] = "opengl";
    cams["frames"] = json::array();
    for (size_t i = 0; i < dataset.frames.size(); ++i) {
        const Frame& frame = dataset.frames[i];
        if (!frame.image.same_shape(edits[i]))
            throw ShapeError("export: edit shape mismatch at frame " + frame.name);
        // Bubble interior comes from the edit, exterior stays bit-identical.
        Image out = frame.image;
        const Mask bubble = frame.region.bubble();
        for (int r = 0; r < out.height; ++r)
            for (int c = 0; c < out.width; ++c)
                if (bubble.at(r, c))
                    for (int ch = 0; ch < 3; ++ch) out.at(r, c, ch) = edits[i].at(r, c, ch);
        const std::string file = frame.name + ".png";
        save_image_png((base / "images" / file).string(), out);
        GrayPng mask_png;
        mask_png.height = frame.region.mask.height;
        mask_png.width = frame.region.mask.width;
        mask_png.values.resize(frame.region.mask.bits.size());
        for (size_t k = 0; k < mask_png.values.size(); ++k)
            mask_png.values[k] = frame.region.mask.bits[k] ? 255 : 0;
        save_gray_png((base / "masks" / file).string(), mask_png);
        cams["frames"].push_back(camera_to_json(frame.camera, file));
    }
    std::ofstream cam_out(base / "cameras.json");
    if (!cam_out) throw IoError("cannot write cameras.json under " + out_path);
    cam_out << cams.dump(2) << "\n";
    if (!cam_out) throw IoError("cameras.json write failed under " + out_path);
}

namespace {

// Shared source-coordinate mapping for crop + resample: output pixel centers
// map affinely onto the crop window.
inline double crop_source_coord(int out_index, int origin, int side, int out_size) {
    return origin + (out_index + 0.5) * (double(side) / out_size) - 0.5;
}

} // namespace

Image apply_crop(const Image& frame, const CropSpec& spec) {
    const int g = spec.resample_to;
    Image out(g, g);
    for (int i = 0; i < g; ++i) {
        const double sy = crop_source_coord(i, spec.y0, spec.side, g);
        const int y0 = static_cast<int>(std::floor(sy));
        const double wy = sy - y0;
        const int ya = std::clamp(y0, 0, frame.height - 1);
        const int yb = std::clamp(y0 + 1, 0, frame.height - 1);
        for (int j = 0; j < g; ++j) {
            const double sx = crop_source_coord(j, spec.x0, spec.side, g);
            const int x0 = static_cast<int>(std::floor(sx));
            const double wx = sx - x0;
            const int xa = std::clamp(x0, 0, frame.width - 1);
            const int xb = std::clamp(x0 + 1, 0, frame.width - 1);
            for (int ch = 0; ch < 3; ++ch) {
                out.at(i, j, ch) = (1 - wy) * ((1 - wx) * frame.at(ya, xa, ch) + wx * frame.at(ya, xb, ch)) +
                                   wy * ((1 - wx) * frame.at(yb, xa, ch) + wx * frame.at(yb, xb, ch));
            }
        }
    }
    return out;
}

Image apply_crop_adjoint(const Image& cropped_cotangent, const CropSpec& spec, int frame_h,
                         int frame_w) {
    const int g = spec.resample_to;
    if (cropped_cotangent.height != g || cropped_cotangent.width != g)
        throw ShapeError("apply_crop_adjoint: cotangent shape mismatch");
    Image out(frame_h, frame_w);
    for (int i = 0; i < g; ++i) {
        const double sy = crop_source_coord(i, spec.y0, spec.side, g);
        const int y0 = static_cast<int>(std::floor(sy));
        const double wy = sy - y0;
        const int ya = std::clamp(y0, 0, frame_h - 1);
        const int yb = std::clamp(y0 + 1, 0, frame_h - 1);
        for (int j = 0; j < g; ++j) {
            const double sx = crop_source_coord(j, spec.x0, spec.side, g);
            const int x0 = static_cast<int>(std::floor(sx));
            const double wx = sx - x0;
            const int xa = std::clamp(x0, 0, frame_w - 1);
            const int xb = std::clamp(x0 + 1, 0, frame_w - 1);
            for (int ch = 0; ch < 3; ++ch) {
                const double g_out = cropped_cotangent.at(i, j, ch);
                out.at(ya, xa, ch) += (1 - wy) * (1 - wx) * g_out;
                out.at(ya, xb, ch) += (1 - wy) * wx * g_out;
                out.at(yb, xa, ch) += wy * (1 - wx) * g_out;
                out.at(yb, xb, ch) += wy * wx * g_out;
            }
        }
    }
    return out;
}

Mask apply_crop_mask(const Mask& frame_mask, const CropSpec& spec) {
    const int g = spec.resample_to;
    Mask out(g, g);
    for (int i = 0; i < g; ++i) {
        const int sy = std::clamp(
            static_cast<int>(std::floor(crop_source_coord(i, spec.y0, spec.side, g) + 0.5)), 0,
            frame_mask.height - 1);
        for (int j = 0; j < g; ++j) {
            const int sx = std::clamp(
                static_cast<int>(std::floor(crop_source_coord(j, spec.x0, spec.side, g) + 0.5)), 0,
                frame_mask.width - 1);
            out.at(i, j) = frame_mask.at(sy, sx);
        }
    }
    return out;
}

} // namespace ram3d
