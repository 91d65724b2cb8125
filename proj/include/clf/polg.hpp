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

// Pseudo object list generation: corrupts ground truth with state noise,
// drops, false positives and label flips to stand in for black-box detectors.

#ifndef CLF_POLG_HPP_
#define CLF_POLG_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "clf/rng.hpp"
#include "clf/scene.hpp"

namespace clf {

// Maximum noise levels; realized per-scene levels are sampled uniformly in
// [0, max]. Defaults are the training setup used throughout.
struct PolgConfig {
  double max_pos_std_ratio = 0.06;
  double max_drop_rate = 0.2;
  double max_fp_rate = 0.1;
  double max_label_change_rate = 0.3;
  bool noise_size = true;
  uint64_t seed = 0;

  void validate() const;
};

// Realized per-scene noise levels.
struct PolgProfile {
  double pos_std_ratio = 0.0;
  double drop_rate = 0.0;
  double fp_rate = 0.0;
  double label_change_rate = 0.0;
};

PolgProfile sample_noise_profile(const PolgConfig& config, uint64_t scene_seed);

// Gaussian state noise: per-axis center std = ratio * matching size dimension
// (x<->l, y<->w, z<->h); sizes likewise when noise_size, clamped to >= 0.1 m;
// yaw std = ratio * pi, renormalized. Velocity untouched.
ObjectList apply_state_noise(const ObjectList& list, const PolgProfile& profile, Rng& rng,
                             bool noise_size = true);

// Independent removal with probability drop_rate; kept records preserve order.
std::pair<ObjectList, std::vector<int>> apply_drops(const ObjectList& list,
                                                    const PolgProfile& profile, Rng& rng);

// Injects Binomial(n_gt, fp_rate) spurious records, n_gt taken from the
// scene's pre-drop ground truth. FPs are appended after the kept records.
std::pair<ObjectList, std::vector<int>> inject_false_positives(const ObjectList& list,
                                                               const PolgProfile& profile,
                                                               const Scene& scene, Rng& rng,
                                                               int n_classes = kDefaultNumClasses);

// Each record's class flips, with probability label_change_rate, to a
// uniformly chosen different class.
ObjectList corrupt_labels(const ObjectList& list, const PolgProfile& profile, Rng& rng,
                          int n_classes = kDefaultNumClasses);

// Exact bookkeeping of which output record came from which ground-truth
// record; used to resolve denoising targets.
struct Provenance {
  std::vector<int> gt_to_out;  // -1 = dropped
  std::vector<int> out_to_gt;  // -1 = false positive
  std::vector<int> fp_indices;
};

struct PolgResult {
  ObjectList list;  // tagged kPolg
  Provenance provenance;
  PolgProfile profile;
};

// Full pipeline: profile -> state noise -> drops -> false positives -> label
// corruption. Pure function of (scene, config).
PolgResult generate_object_list(const Scene& scene, const PolgConfig& config,
                                int n_classes = kDefaultNumClasses);

}  // namespace clf

#endif  // CLF_POLG_HPP_
