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

// Domain types for scenes, objects and object lists, random scene generation,
// validation, and the line-delimited file format.

#ifndef CLF_SCENE_HPP_
#define CLF_SCENE_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clf/geometry.hpp"

namespace clf {

inline constexpr int kDefaultNumClasses = 4;
inline constexpr std::array<const char*, kDefaultNumClasses> kClassNames = {
    "car", "pedestrian", "cyclist", "barrier"};

// The classification sentinel for "no object". Only ever a training target,
// never stored in an ObjectRecord.
inline int no_object_class(int n_classes) { return n_classes; }

// Per-class [lo, hi] ranges for (l, w, h), meters.
inline constexpr double kClassSizeRanges[kDefaultNumClasses][3][2] = {
    {{3.5, 5.0}, {1.6, 2.0}, {1.4, 1.8}},  // car
    {{0.4, 0.8}, {0.4, 0.8}, {1.5, 1.9}},  // pedestrian
    {{1.5, 2.0}, {0.4, 0.8}, {1.4, 1.8}},  // cyclist
    {{1.5, 2.5}, {0.3, 0.6}, {0.9, 1.2}},  // barrier
};

// One 3D detection or annotation.
struct ObjectRecord {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();  // x, y, z (m)
  Eigen::Vector3d size = Eigen::Vector3d::Ones();    // l, w, h (m)
  double yaw = 0.0;                                  // [-pi, pi)
  Eigen::Vector2d velocity = Eigen::Vector2d::Zero();
  int class_id = 0;
  double confidence = 1.0;
};

enum class SourceTag { kGroundTruth, kPolg, kExternal };

std::string to_string(SourceTag tag);
SourceTag source_tag_from_string(const std::string& s);

struct ObjectList {
  std::vector<ObjectRecord> records;
  SourceTag source_tag = SourceTag::kGroundTruth;
  int64_t frame_id = 0;
};

struct Scene {
  ObjectList objects;  // ground truth
  Aabb bounds;
  std::string rig_name = "default6";
  uint64_t seed = 0;
};

inline Aabb default_scene_bounds() {
  return Aabb{Eigen::Vector3d(-50.0, -50.0, -4.0), Eigen::Vector3d(50.0, 50.0, 4.0)};
}

// A single invariant violation. Violations are data, not failures.
struct Violation {
  int record_index;  // -1 for scene-level issues
  std::string field;
  std::string message;
};

std::vector<Violation> validate_scene(const Scene& scene, int n_classes = kDefaultNumClasses);

struct SceneGenConfig {
  int n_objects_min = 4;
  int n_objects_max = 10;
  Aabb bounds = default_scene_bounds();
  std::vector<double> class_weights;  // empty = uniform over n_classes
  int n_classes = kDefaultNumClasses;
  double min_separation = 0.5;   // pairwise center distance, meters
  double spawn_clearance = 2.0;  // keep-out radius around the ego origin
};

// Thrown when rejection sampling cannot satisfy the separation constraint.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pure function of (config, seed).
Scene sample_random_scene(const SceneGenConfig& config, uint64_t seed);

// ---- line-delimited serialization -----------------------------------------
// One scene (or object list) per line; floats carry 17 significant digits so
// values round-trip exactly. Schema documented in docs/file_formats.md.

std::string format_double(double v);

std::string scene_to_json_line(const Scene& scene);
Scene scene_from_json_line(const std::string& line);

std::string object_list_to_json_line(const ObjectList& list);
ObjectList object_list_from_json_line(const std::string& line);

void write_scenes(const std::string& path, const std::vector<Scene>& scenes);
std::vector<Scene> read_scenes(const std::string& path);

}  // namespace clf

#endif  // CLF_SCENE_HPP_
