// Copyright (c) 2026 ram3d authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "ram3d/image.hpp"

namespace ram3d {

/// Pinhole camera with an OpenGL-style (right, up, backward) camera-to-world
/// transform. `cam_to_world` is the 3x4 upper block, row-major.
struct Camera {
    int width = 0;
    int height = 0;
    double fx = 0, fy = 0, cx = 0, cy = 0;
    std::array<double, 12> cam_to_world{};
    double near = 0, far = 0;

    void validate() const;
};

/// Inpainting mask plus its surrounding halo ring. The two are disjoint;
/// together with the implicit exterior they partition the frame.
struct RegionSet {
    Mask mask;
    Mask halo;

    Mask bubble() const; // mask OR halo
    void validate() const;
};

struct Frame {
    Image image;
    Camera camera;
    RegionSet region;
    std::string name; // file stem, e.g. "000"
};

struct SceneDataset {
    std::vector<Frame> frames;
    std::string scene_name;
    int guidance_resolution = 512;
};

enum class CropMode { CenterHeight, LeftMost, MaskAdaptive };

/// Square crop in frame coordinates, resampled to `resample_to` pixels.
struct CropSpec {
    int x0 = 0;
    int y0 = 0;
    int side = 0;
    int resample_to = 0;
};

struct DatasetConfig {
    int dilation_radius = 8;
    int halo_width = 16;
    int guidance_resolution = 512;
    CropMode crop_mode = CropMode::CenterHeight;
    std::string scene_name;
};

Mask dilate_mask(const Mask& mask, int radius);
RegionSet compute_halo(const Mask& mask, int width);
CropSpec compute_crop(const RegionSet& region, int frame_w, int frame_h, CropMode mode,
                      int resample_to);

/// Loads images/, masks/ and cameras.json from `root`, aligned by sorted
/// filename. Masks are binarized at 127/255, dilated, and given halos.
SceneDataset load_dataset(const std::string& root, const DatasetConfig& config);

/// Writes `edits` composited over the dataset's images (bubble interior from
/// the edit, exterior bit-identical to the input) in the input layout.
void export_edited_dataset(const SceneDataset& dataset, const std::vector<Image>& edits,
                           const std::string& out_path);

// Crop application. `apply_crop` gathers with bilinear weights; the adjoint
// scatters cotangents back onto the full frame (exact transpose).
Image apply_crop(const Image& frame, const CropSpec& spec);
Image apply_crop_adjoint(const Image& cropped_cotangent, const CropSpec& spec, int frame_h,
                         int frame_w);
Mask apply_crop_mask(const Mask& frame_mask, const CropSpec& spec);

} // namespace ram3d
