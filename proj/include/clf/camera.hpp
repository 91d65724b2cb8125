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

// Pinhole multi-view camera rig. Image coordinates are in feature-grid cell
// units: u along columns (width W), v along rows (height H), cells centered
// at integer coordinates.

#ifndef CLF_CAMERA_HPP_
#define CLF_CAMERA_HPP_

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "clf/scene.hpp"

namespace clf {

inline constexpr double kNearPlane = 0.1;  // meters

struct CameraView {
  double fx = 1.0, fy = 1.0;
  double u0 = 0.0, v0 = 0.0;
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();  // world -> camera
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();   // p_c = R p + t
};

struct CameraRig {
  int grid_h = 32;
  int grid_w = 80;
  std::vector<CameraView> views;

  int n_views() const { return static_cast<int>(views.size()); }
  void validate() const;  // focal positivity, rotation orthonormality
};

// Six views yawed at 60 degree increments around the ego origin, 70 degree
// horizontal FOV, mounted at 0.8 m height. Camera convention: +z forward,
// +x right, +y down.
CameraRig make_default_rig(int n_views = 6, int grid_h = 32, int grid_w = 80);

struct Projection {
  double u = 0.0, v = 0.0;
  double depth = 0.0;
};

// nullopt = point behind the near plane.
std::optional<Projection> project_point(const CameraRig& rig, int view,
                                        const Eigen::Vector3d& p);

struct BoxProjection {
  double cx = 0.0, cy = 0.0;  // projected 3D center
  double radius_px = 0.0;     // half-diagonal of the projected-corner bbox
};

// nullopt = not visible (center behind, all corners behind, or the projected
// bbox misses the grid).
std::optional<BoxProjection> project_box(const CameraRig& rig, int view,
                                         const ObjectRecord& rec);

// Unit world-frame direction through the center of cell (i, j), i = column
// (u axis), j = row (v axis).
Eigen::Vector3d ray_direction(const CameraRig& rig, int view, int i, int j);

// The eight yaw-rotated box corners in world coordinates.
std::array<Eigen::Vector3d, 8> box_corners(const ObjectRecord& rec);

}  // namespace clf

#endif  // CLF_CAMERA_HPP_
