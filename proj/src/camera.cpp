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

#include "clf/camera.hpp"

#include <cmath>
#include <stdexcept>

namespace clf {

void CameraRig::validate() const {
  if (grid_h <= 0 || grid_w <= 0) throw std::invalid_argument("grid dims must be positive");
  for (const auto& view : views) {
    if (!(view.fx > 0.0) || !(view.fy > 0.0)) {
      throw std::invalid_argument("focal lengths must be positive");
    }
    Eigen::Matrix3d gram = view.rotation.transpose() * view.rotation;
    if ((gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
      throw std::invalid_argument("extrinsic rotation not orthonormal");
    }
  }
}

CameraRig make_default_rig(int n_views, int grid_h, int grid_w) {
  CameraRig rig;
  rig.grid_h = grid_h;
  rig.grid_w = grid_w;
  const double hfov = 70.0 * M_PI / 180.0;
  const double fx = (grid_w / 2.0) / std::tan(hfov / 2.0);
  const Eigen::Vector3d cam_center(0.0, 0.0, 0.8);
  for (int k = 0; k < n_views; ++k) {
    CameraView view;
    view.fx = fx;
    view.fy = fx;
    view.u0 = (grid_w - 1) / 2.0;
    view.v0 = (grid_h - 1) / 2.0;
    const double yaw = 2.0 * M_PI * k / n_views;
    const Eigen::Vector3d forward(std::cos(yaw), std::sin(yaw), 0.0);
    const Eigen::Vector3d right(std::sin(yaw), -std::cos(yaw), 0.0);
    const Eigen::Vector3d down(0.0, 0.0, -1.0);
    Eigen::Matrix3d r;
    r.row(0) = right;
    r.row(1) = down;
    r.row(2) = forward;
    view.rotation = r;
    view.translation = -r * cam_center;
    rig.views.push_back(view);
  }
  return rig;
}

std::optional<Projection> project_point(const CameraRig& rig, int view,
                                        const Eigen::Vector3d& p) {
  if (view < 0 || view >= rig.n_views()) throw std::out_of_range("invalid view index");
  const CameraView& cam = rig.views[view];
  const Eigen::Vector3d pc = cam.rotation * p + cam.translation;
  if (pc.z() <= kNearPlane) return std::nullopt;
  Projection proj;
  proj.u = cam.u0 + cam.fx * pc.x() / pc.z();
  proj.v = cam.v0 + cam.fy * pc.y() / pc.z();
  proj.depth = pc.z();
  return proj;
}

std::array<Eigen::Vector3d, 8> box_corners(const ObjectRecord& rec) {
  const double c = std::cos(rec.yaw), s = std::sin(rec.yaw);
  std::array<Eigen::Vector3d, 8> corners;
  int idx = 0;
  for (int sx : {-1, 1}) {
    for (int sy : {-1, 1}) {
      for (int sz : {-1, 1}) {
        const double lx = sx * rec.size.x() * 0.5;
        const double ly = sy * rec.size.y() * 0.5;
        const double lz = sz * rec.size.z() * 0.5;
        corners[idx++] = rec.center + Eigen::Vector3d(c * lx - s * ly, s * lx + c * ly, lz);
      }
    }
  }
  return corners;
}

std::optional<BoxProjection> project_box(const CameraRig& rig, int view,
                                         const ObjectRecord& rec) {
  auto center = project_point(rig, view, rec.center);
  if (!center) return std::nullopt;

  double umin = 0, umax = 0, vmin = 0, vmax = 0;
  int n_visible = 0;
  for (const auto& corner : box_corners(rec)) {
    auto p = project_point(rig, view, corner);
    if (!p) continue;  // corners behind the near plane are skipped
    if (n_visible == 0) {
      umin = umax = p->u;
      vmin = vmax = p->v;
    } else {
      umin = std::min(umin, p->u);
      umax = std::max(umax, p->u);
      vmin = std::min(vmin, p->v);
      vmax = std::max(vmax, p->v);
    }
    ++n_visible;
  }
  if (n_visible == 0) return std::nullopt;

  // grid footprint covers cell centers 0..W-1 / 0..H-1 plus half a cell
  const bool intersects = umax >= -0.5 && umin <= rig.grid_w - 0.5 && vmax >= -0.5 &&
                          vmin <= rig.grid_h - 0.5;
  if (!intersects) return std::nullopt;

  BoxProjection out;
  out.cx = center->u;
  out.cy = center->v;
  out.radius_px = 0.5 * std::hypot(umax - umin, vmax - vmin);
  return out;
}

Eigen::Vector3d ray_direction(const CameraRig& rig, int view, int i, int j) {
  if (view < 0 || view >= rig.n_views()) throw std::out_of_range("invalid view index");
  if (i < 0 || i >= rig.grid_w || j < 0 || j >= rig.grid_h) {
    throw std::out_of_range("cell outside grid");
  }
  const CameraView& cam = rig.views[view];
  Eigen::Vector3d dir_cam((i - cam.u0) / cam.fx, (j - cam.v0) / cam.fy, 1.0);
  Eigen::Vector3d dir_world = cam.rotation.transpose() * dir_cam;
  return dir_world.normalized();
}

}  // namespace clf
