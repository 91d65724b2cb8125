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

#include "clf/feature_grid.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "clf/rng.hpp"

static_assert(std::endian::native == std::endian::little,
              "grid dump assumes a little-endian host");

namespace clf {

namespace {

// Splat the class pattern for one projected box into 4 channels.
void add_splat(FeatureGrid& grid, int view, int class_id, double cx, double cy, double radius,
               double gain) {
  const double r = std::max(radius, 0.5);
  const double inv = 1.0 / (r * r);  // sigma_render = 1
  const int c0 = (4 * class_id) % grid.channels;
  for (int y = 0; y < grid.height; ++y) {
    const double dy = y - cy;
    for (int x = 0; x < grid.width; ++x) {
      const double dx = x - cx;
      const float value = static_cast<float>(gain * std::exp(-(dx * dx + dy * dy) * inv));
      for (int c = 0; c < 4 && c0 + c < grid.channels; ++c) {
        grid.at(view, c0 + c, y, x) += value;
      }
    }
  }
}

}  // namespace

FeatureGrid render_feature_grids(const Scene& scene, const CameraRig& rig,
                                 const RenderConfig& config, uint64_t seed) {
  FeatureGrid grid(rig.n_views(), config.channels, rig.grid_h, rig.grid_w);

  Rng bg_rng(stream_seed(seed, "background"));
  if (config.bg_std > 0.0) {
    for (auto& v : grid.data) v = static_cast<float>(bg_rng.normal(0.0, config.bg_std));
  }

  for (int view = 0; view < rig.n_views(); ++view) {
    for (const auto& rec : scene.objects.records) {
      auto proj = project_box(rig, view, rec);
      if (!proj) continue;
      add_splat(grid, view, rec.class_id, proj->cx, proj->cy, proj->radius_px,
                config.splat_gain);
    }
    Rng clutter_rng(stream_seed(seed, "clutter", static_cast<uint64_t>(view)));
    const int n_clutter = clutter_rng.poisson(config.clutter_rate);
    for (int k = 0; k < n_clutter; ++k) {
      const double cx = clutter_rng.uniform(0.0, rig.grid_w - 1.0);
      const double cy = clutter_rng.uniform(0.0, rig.grid_h - 1.0);
      const double r = clutter_rng.uniform(1.0, 6.0);
      const int fake_class = static_cast<int>(clutter_rng.uniform_int(4));
      add_splat(grid, view, fake_class, cx, cy, r, config.splat_gain);
    }
  }
  return grid;
}

void write_feature_grid(const std::string& path, const FeatureGrid& grid) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  const int32_t header[4] = {grid.n_views, grid.channels, grid.height, grid.width};
  f.write(reinterpret_cast<const char*>(header), sizeof(header));
  f.write(reinterpret_cast<const char*>(grid.data.data()),
          static_cast<std::streamsize>(grid.data.size() * sizeof(float)));
}

FeatureGrid read_feature_grid(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for read: " + path);
  int32_t header[4];
  f.read(reinterpret_cast<char*>(header), sizeof(header));
  if (!f) throw std::runtime_error("truncated grid header: " + path);
  FeatureGrid grid(header[0], header[1], header[2], header[3]);
  f.read(reinterpret_cast<char*>(grid.data.data()),
         static_cast<std::streamsize>(grid.data.size() * sizeof(float)));
  if (!f) throw std::runtime_error("truncated grid payload: " + path);
  return grid;
}

}  // namespace clf
