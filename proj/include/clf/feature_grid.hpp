// Copyright 2026 The Clfusion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Synthetic multi-view feature grids rendered from scene ground truth; the
// stand-in for an image backbone, so the vision branch carries class-keyed
// learnable signal.

#ifndef CLF_FEATURE_GRID_HPP_
#define CLF_FEATURE_GRID_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "clf/camera.hpp"
#include "clf/scene.hpp"

namespace clf {

// N views x C channels x H x W, view-major, then channel, row-major rows.
struct FeatureGrid {
  int n_views = 0, channels = 0, height = 0, width = 0;
  std::vector<float> data;

  FeatureGrid() = default;
  FeatureGrid(int n, int c, int h, int w)
      : n_views(n), channels(c), height(h), width(w),
        data(static_cast<size_t>(n) * c * h * w, 0.0f) {}

  size_t index(int view, int c, int y, int x) const {
    return ((static_cast<size_t>(view) * channels + c) * height + y) * width + x;
  }
  float& at(int view, int c, int y, int x) { return data[index(view, c, y, x)]; }
  float at(int view, int c, int y, int x) const { return data[index(view, c, y, x)]; }
};

struct RenderConfig {
  double bg_std = 0.1;
  double splat_gain = 1.0;
  double clutter_rate = 0.5;  // expected clutter splats per view
  int channels = 16;
};

// Deterministic per (scene, config, seed). Each visible object adds a
// Gaussian splat (sigma_render = 1) at its projected center into the 4
// channels keyed by its class.
FeatureGrid render_feature_grids(const Scene& scene, const CameraRig& rig,
                                 const RenderConfig& config, uint64_t seed);

// Flat binary dump: int32 LE header (N, C, H, W) then float32 LE payload.
void write_feature_grid(const std::string& path, const FeatureGrid& grid);
FeatureGrid read_feature_grid(const std::string& path);

}  // namespace clf

#endif  // CLF_FEATURE_GRID_HPP_
