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

#include "clf/gaussian_mask.hpp"

#include <cmath>
#include <stdexcept>

namespace clf {

Eigen::MatrixXd single_target_mask(const GaussianMaskParams& params, int grid_h, int grid_w) {
  if (!(params.radius > 0.0)) throw std::invalid_argument("mask radius must be > 0");
  if (!(params.sigma > 0.0)) throw std::invalid_argument("mask sigma must be > 0");
  Eigen::MatrixXd mask(grid_h, grid_w);
  const double denom = params.sigma * params.radius * params.radius;
  for (int j = 0; j < grid_h; ++j) {
    const double dy = j - params.cy;
    for (int i = 0; i < grid_w; ++i) {
      const double dx = i - params.cx;
      mask(j, i) = std::exp(-(dx * dx + dy * dy) / denom);
    }
  }
  return mask;
}

SharedMask merge_masks(const std::vector<std::vector<Eigen::MatrixXd>>& masks_per_view,
                       int grid_h, int grid_w, double floor) {
  SharedMask shared;
  shared.floor = floor;
  shared.views.reserve(masks_per_view.size());
  for (const auto& masks : masks_per_view) {
    Eigen::MatrixXd merged = Eigen::MatrixXd::Constant(grid_h, grid_w, floor);
    for (const auto& m : masks) {
      if (m.rows() != grid_h || m.cols() != grid_w) {
        throw std::invalid_argument("mask shape mismatch");
      }
      merged = merged.cwiseMax(m);
    }
    merged = merged.cwiseMin(1.0).cwiseMax(floor);
    shared.views.push_back(std::move(merged));
  }
  return shared;
}

Eigen::VectorXd SharedMask::flattened() const {
  Eigen::Index total = 0;
  for (const auto& v : views) total += v.size();
  Eigen::VectorXd out(total);
  Eigen::Index pos = 0;
  for (const auto& view : views) {
    for (Eigen::Index j = 0; j < view.rows(); ++j) {
      for (Eigen::Index i = 0; i < view.cols(); ++i) out[pos++] = view(j, i);
    }
  }
  return out;
}

Eigen::VectorXd attention_bias(const SharedMask& shared, int d_k) {
  if (d_k < 1) throw std::invalid_argument("d_k must be >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d_k));
  Eigen::VectorXd g = shared.flattened();
  return g.array().log() * scale;
}

SharedMask build_shared_mask(const ObjectList& list, const CameraRig& rig, double sigma,
                             double floor) {
  std::vector<std::vector<Eigen::MatrixXd>> per_view(rig.n_views());
  for (int view = 0; view < rig.n_views(); ++view) {
    for (const auto& rec : list.records) {
      auto proj = project_box(rig, view, rec);
      if (!proj) continue;
      GaussianMaskParams params;
      params.cx = proj->cx;
      params.cy = proj->cy;
      params.radius = std::max(proj->radius_px, 0.5);
      params.sigma = sigma;
      per_view[view].push_back(single_target_mask(params, rig.grid_h, rig.grid_w));
    }
  }
  return merge_masks(per_view, rig.grid_h, rig.grid_w, floor);
}

AttentionResult biased_attention(const Eigen::MatrixXd& q, const Eigen::MatrixXd& k,
                                 const Eigen::MatrixXd& v,
                                 const std::optional<Eigen::VectorXd>& bias) {
  if (q.cols() != k.cols()) throw std::invalid_argument("Q/K width mismatch");
  if (k.rows() != v.rows()) throw std::invalid_argument("K/V key count mismatch");
  if (bias && bias->size() != k.rows()) throw std::invalid_argument("bias length mismatch");
  if (!q.allFinite() || !k.allFinite() || !v.allFinite() || (bias && !bias->allFinite())) {
    throw std::invalid_argument("non-finite attention inputs");
  }

  const double scale = 1.0 / std::sqrt(static_cast<double>(q.cols()));
  Eigen::MatrixXd logits = (q * k.transpose()) * scale;
  if (bias) logits.rowwise() += bias->transpose();

  AttentionResult result;
  result.weights.resize(logits.rows(), logits.cols());
  for (Eigen::Index r = 0; r < logits.rows(); ++r) {
    const double m = logits.row(r).maxCoeff();
    Eigen::ArrayXd e = (logits.row(r).array() - m).exp();
    result.weights.row(r) = (e / e.sum()).matrix();
  }
  result.output = result.weights * v;
  return result;
}

}  // namespace clf
