// Copyright (c) 2026 ram3d authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ram3d {

struct Aabb {
    std::array<double, 3> lo{-1.0, -1.0, -1.0};
    std::array<double, 3> hi{1.0, 1.0, 1.0};
};

/// Multiresolution hash encoding + small MLP. The MLP is fixed at 3 layers of
/// width 64 by default; the encoding hyperparameters are free.
struct FieldConfig {
    int levels = 16;
    int features_per_level = 2;
    int table_size_log2 = 19;
    int base_resolution = 16;
    double level_scale = 1.3819;
    int mlp_hidden = 64;
    int mlp_layers = 3;
    Aabb bounds;

    int feature_dim() const { return levels * features_per_level; }
    size_t table_entries_per_level() const { return size_t(1) << table_size_log2; }
    void validate() const;
    bool operator==(const FieldConfig&) const = default;
};

/// Flat parameter vector: all hash tables (level-major), then per-layer MLP
/// weights and biases in layer order. Values are kept exactly
/// f32-representable so the f32 checkpoint encoding is lossless.
struct FieldParams {
    std::vector<double> data;
};

struct FieldLayout {
    struct Layer {
        size_t w_offset, b_offset;
        int in, out;
    };
    size_t hash_count = 0;
    std::vector<Layer> layers;
    size_t total = 0;

    static FieldLayout from(const FieldConfig& config);
};

struct FieldOutput {
    std::array<double, 3> color{};
    double density = 0;
};

/// Per-thread workspace; reused across calls to avoid allocation in the
/// rendering inner loop.
struct FieldScratch {
    std::vector<double> features;
    std::vector<double> pre;    // pre-activations, all layers concatenated
    std::vector<double> act;    // activations, same layout
    std::vector<double> d_buf;  // backward temporaries
};

/// Gradient accumulator with a deterministic merge story: dense MLP block
/// plus hash-table contributions recorded sparsely in visit order.
struct GradSink {
    std::vector<double> mlp; // layout.total - layout.hash_count entries
    std::vector<std::pair<uint32_t, double>> hash;

    void reset(const FieldLayout& layout);
};

FieldParams init_params(const FieldConfig& config, uint64_t seed);

void encode_position(const double p[3], const FieldParams& params, const FieldConfig& config,
                     std::vector<double>& features_out);

FieldOutput field_forward(const double p[3], const FieldParams& params, const FieldConfig& config,
                          FieldScratch& scratch);
FieldOutput field_forward(const double p[3], const FieldParams& params, const FieldConfig& config);

/// Accumulates d(loss)/d(params) for the given output cotangent; recomputes
/// the forward pass internally.
void field_backward(const double p[3], const FieldParams& params, const FieldConfig& config,
                    const double d_color[3], double d_density, GradSink& sink,
                    FieldScratch& scratch);

/// Folds a sink into a dense gradient vector sized layout.total.
void accumulate_sink(const GradSink& sink, const FieldLayout& layout, std::vector<double>& dense);

/// Rounds every entry to its nearest f32 value (see FieldParams).
void quantize_to_f32(std::vector<double>& values);

// Versioned binary checkpoint: magic "RAM3DCKPT", u32 version, FieldConfig,
// then parameter arrays as little-endian f32.
void save_field_checkpoint(const std::string& path, const FieldConfig& config,
                           const FieldParams& params);
void load_field_checkpoint(const std::string& path, FieldConfig& config, FieldParams& params);

} // namespace ram3d
