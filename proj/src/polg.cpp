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

#include "clf/polg.hpp"

#include <cmath>
#include <stdexcept>

namespace clf {

namespace {
constexpr double kMinSize = 0.1;  // clamp floor for noised size dimensions, meters
}

void PolgConfig::validate() const {
  if (max_pos_std_ratio < 0.0) throw std::invalid_argument("max_pos_std_ratio < 0");
  if (max_drop_rate < 0.0 || max_drop_rate > 1.0)
    throw std::invalid_argument("max_drop_rate outside [0,1]");
  if (max_fp_rate < 0.0) throw std::invalid_argument("max_fp_rate < 0");
  if (max_label_change_rate < 0.0 || max_label_change_rate > 1.0)
    throw std::invalid_argument("max_label_change_rate outside [0,1]");
}

PolgProfile sample_noise_profile(const PolgConfig& config, uint64_t scene_seed) {
  config.validate();
  Rng rng(stream_seed(hash_combine(config.seed, scene_seed), "profile"));
  PolgProfile p;
  p.pos_std_ratio = rng.uniform(0.0, config.max_pos_std_ratio);
  p.drop_rate = rng.uniform(0.0, config.max_drop_rate);
  p.fp_rate = rng.uniform(0.0, config.max_fp_rate);
  p.label_change_rate = rng.uniform(0.0, config.max_label_change_rate);
  return p;
}

ObjectList apply_state_noise(const ObjectList& list, const PolgProfile& profile, Rng& rng,
                             bool noise_size) {
  if (list.source_tag != SourceTag::kGroundTruth) {
    throw std::invalid_argument("apply_state_noise expects a ground-truth list");
  }
  ObjectList out = list;
  const double ratio = profile.pos_std_ratio;
  for (auto& r : out.records) {
    // one draw per field even at ratio 0 keeps streams aligned across profiles
    for (int d = 0; d < 3; ++d) r.center[d] += rng.normal(0.0, ratio * r.size[d]);
    if (noise_size) {
      for (int d = 0; d < 3; ++d) {
        r.size[d] = std::max(kMinSize, r.size[d] + rng.normal(0.0, ratio * r.size[d]));
      }
    }
    r.yaw = normalize_angle(r.yaw + rng.normal(0.0, ratio * M_PI));
  }
  return out;
}

std::pair<ObjectList, std::vector<int>> apply_drops(const ObjectList& list,
                                                    const PolgProfile& profile, Rng& rng) {
  ObjectList out;
  out.source_tag = list.source_tag;
  out.frame_id = list.frame_id;
  std::vector<int> dropped;
  for (int i = 0; i < static_cast<int>(list.records.size()); ++i) {
    if (rng.bernoulli(profile.drop_rate)) {
      dropped.push_back(i);
    } else {
      out.records.push_back(list.records[i]);
    }
  }
  return {out, dropped};
}

std::pair<ObjectList, std::vector<int>> inject_false_positives(const ObjectList& list,
                                                               const PolgProfile& profile,
                                                               const Scene& scene, Rng& rng,
                                                               int n_classes) {
  ObjectList out = list;
  std::vector<int> fp_indices;
  const int n_gt = static_cast<int>(scene.objects.records.size());
  const int n_fp = rng.binomial(n_gt, profile.fp_rate);
  const Eigen::Vector3d lo = scene.bounds.min;
  const Eigen::Vector3d hi = scene.bounds.max;
  for (int k = 0; k < n_fp; ++k) {
    ObjectRecord r;
    for (int d = 0; d < 3; ++d) r.center[d] = rng.uniform(lo[d], hi[d]);
    r.class_id = static_cast<int>(rng.uniform_int(n_classes));
    const auto& ranges = kClassSizeRanges[r.class_id % kDefaultNumClasses];
    for (int d = 0; d < 3; ++d) r.size[d] = rng.uniform(ranges[d][0], ranges[d][1]);
    r.yaw = rng.uniform(-M_PI, M_PI);
    r.velocity.setZero();
    r.confidence = rng.uniform(0.3, 0.7);
    fp_indices.push_back(static_cast<int>(out.records.size()));
    out.records.push_back(r);
  }
  return {out, fp_indices};
}

ObjectList corrupt_labels(const ObjectList& list, const PolgProfile& profile, Rng& rng,
                          int n_classes) {
  if (n_classes < 2 && profile.label_change_rate > 0.0) {
    throw std::invalid_argument("label corruption needs at least 2 classes");
  }
  ObjectList out = list;
  for (auto& r : out.records) {
    if (rng.bernoulli(profile.label_change_rate)) {
      int offset = 1 + static_cast<int>(rng.uniform_int(n_classes - 1));
      r.class_id = (r.class_id + offset) % n_classes;
    }
  }
  return out;
}

PolgResult generate_object_list(const Scene& scene, const PolgConfig& config, int n_classes) {
  config.validate();
  PolgResult result;
  result.profile = sample_noise_profile(config, scene.seed);

  const uint64_t base = hash_combine(config.seed, scene.seed);
  Rng rng_noise(stream_seed(base, "state_noise"));
  Rng rng_drop(stream_seed(base, "drops"));
  Rng rng_fp(stream_seed(base, "false_positives"));
  Rng rng_label(stream_seed(base, "labels"));

  ObjectList noised = apply_state_noise(scene.objects, result.profile, rng_noise, config.noise_size);
  auto [kept, dropped] = apply_drops(noised, result.profile, rng_drop);

  const int n_gt = static_cast<int>(scene.objects.records.size());
  result.provenance.gt_to_out.assign(n_gt, -1);
  {
    int out_idx = 0;
    size_t drop_pos = 0;
    for (int i = 0; i < n_gt; ++i) {
      if (drop_pos < dropped.size() && dropped[drop_pos] == i) {
        ++drop_pos;
        continue;
      }
      result.provenance.gt_to_out[i] = out_idx;
      result.provenance.out_to_gt.push_back(i);
      ++out_idx;
    }
  }

  auto [with_fp, fp_indices] = inject_false_positives(kept, result.profile, scene, rng_fp, n_classes);
  result.provenance.fp_indices = fp_indices;
  for (size_t k = 0; k < fp_indices.size(); ++k) result.provenance.out_to_gt.push_back(-1);

  result.list = corrupt_labels(with_fp, result.profile, rng_label, n_classes);
  result.list.source_tag = SourceTag::kPolg;
  result.list.frame_id = scene.objects.frame_id;
  return result;
}

}  // namespace clf
