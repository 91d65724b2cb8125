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

#ifndef CLF_GEOMETRY_HPP_
#define CLF_GEOMETRY_HPP_

#include <Eigen/Dense>

namespace clf {

// Axis-aligned box in the world frame, meters.
struct Aabb {
  Eigen::Vector3d min;
  Eigen::Vector3d max;

  Eigen::Vector3d extent() const { return max - min; }
  Eigen::Vector3d center() const { return 0.5 * (min + max); }
  bool contains(const Eigen::Vector3d& p) const {
    return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
  }
  bool degenerate() const { return (extent().array() <= 0.0).any(); }
};

// Wraps an angle into [-pi, pi).
double normalize_angle(double a);

}  // namespace clf

#endif  // CLF_GEOMETRY_HPP_
