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

// Gaussian weighting masks around projected targets, multi-target merging,
// and log-bias attention reweighting:
//
//   M(i, j)        = exp(-((i - cx)^2 + (j - cy)^2) / (sigma * r^2))
//   Attention(...) = softmax(Q K^T / sqrt(d_k) + log(G) / sqrt(d_k)) V
//
// The bias is shared across all query rows and heads (one-to-many query
// assignment).

#ifndef CLF_GAUSSIAN_MASK_HPP_
#define CLF_GAUSSIAN_MASK_HPP_

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "clf/camera.hpp"
#include "clf/scene.hpp"

namespace clf {

inline constexpr double kMaskFloor = 1e-4;  // floor before the log; keeps Eq. 2 finite

struct GaussianMaskParams {
  double cx = 0.0, cy = 0.0;  // grid coordinates
  double radius = 1.0;        // r, grid units, > 0
  double sigma = 2.0;         // bandwidth, > 0
};

// Elementwise mask over an H x W grid evaluated at integer cell centers,
// entry (row j, col i).
Eigen::MatrixXd single_target_mask(const GaussianMaskParams& params, int grid_h, int grid_w);

// Per-view merged masks, values in [floor, 1].
struct SharedMask {
  std::vector<Eigen::MatrixXd> views;  // each H x W
  double floor = kMaskFloor;

  int n_views() const { return static_cast<int>(views.size()); }
  // Key-aligned flattening: view-major, row-major within a view.
  Eigen::VectorXd flattened() const;
};

// Pointwise max across targets per view, clamped to [floor, 1]; views with no
// targets hold the uniform floor.
SharedMask merge_masks(const std::vector<std::vector<Eigen::MatrixXd>>& masks_per_view,
                       int grid_h, int grid_w, double floor = kMaskFloor);

// log(G)/sqrt(d_k) per flattened key; all entries in [log(floor)/sqrt(d_k), 0].
Eigen::VectorXd attention_bias(const SharedMask& shared, int d_k);

// Projects every record of the object list into every view and merges the
// per-target masks. Radii are floored at half a cell so r > 0 always holds.
SharedMask build_shared_mask(const ObjectList& list, const CameraRig& rig, double sigma,
                             double floor = kMaskFloor);

struct AttentionResult {
  Eigen::MatrixXd output;   // n_q x d_v
  Eigen::MatrixXd weights;  // n_q x n_k, rows sum to 1
};

// Reference single-head scaled dot-product attention with the optional
// additive key bias broadcast across all query rows.
AttentionResult biased_attention(const Eigen::MatrixXd& q, const Eigen::MatrixXd& k,
                                 const Eigen::MatrixXd& v,
                                 const std::optional<Eigen::VectorXd>& bias = std::nullopt);

}  // namespace clf

#endif  // CLF_GAUSSIAN_MASK_HPP_
