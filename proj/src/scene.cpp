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

#include "clf/scene.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clf/rng.hpp"

namespace clf {

double normalize_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a < 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

std::string to_string(SourceTag tag) {
  switch (tag) {
    case SourceTag::kGroundTruth:
      return "ground_truth";
    case SourceTag::kPolg:
      return "polg";
    case SourceTag::kExternal:
      return "external";
  }
  return "unknown";
}

SourceTag source_tag_from_string(const std::string& s) {
  if (s == "ground_truth") return SourceTag::kGroundTruth;
  if (s == "polg") return SourceTag::kPolg;
  if (s == "external") return SourceTag::kExternal;
  throw std::invalid_argument("unknown source tag: " + s);
}

namespace {

bool all_finite(const Eigen::Vector3d& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

}  // namespace

std::vector<Violation> validate_scene(const Scene& scene, int n_classes) {
  std::vector<Violation> out;
  const auto& records = scene.objects.records;
  for (int i = 0; i < static_cast<int>(records.size()); ++i) {
    const ObjectRecord& r = records[i];
    if (!all_finite(r.center)) {
      out.push_back({i, "center", "center has non-finite coordinates"});
    } else if (!scene.bounds.contains(r.center)) {
      out.push_back({i, "center", "center outside scene bounds"});
    }
    const char* dims[3] = {"size.l", "size.w", "size.h"};
    for (int d = 0; d < 3; ++d) {
      if (!(r.size[d] > 0.0) || !std::isfinite(r.size[d])) {
        out.push_back({i, dims[d], "size dimension must be positive and finite"});
      }
    }
    if (!std::isfinite(r.yaw) || r.yaw < -M_PI || r.yaw >= M_PI) {
      out.push_back({i, "yaw", "yaw outside [-pi, pi)"});
    }
    if (!std::isfinite(r.velocity.x()) || !std::isfinite(r.velocity.y())) {
      out.push_back({i, "velocity", "velocity has non-finite components"});
    }
    if (r.class_id < 0 || r.class_id >= n_classes) {
      out.push_back({i, "class_id", "class id outside table"});
    }
    if (!(r.confidence >= 0.0 && r.confidence <= 1.0)) {
      out.push_back({i, "confidence", "confidence outside [0, 1]"});
    }
  }
  return out;
}

Scene sample_random_scene(const SceneGenConfig& config, uint64_t seed) {
  if (config.bounds.degenerate()) {
    throw std::invalid_argument("scene bounds are degenerate");
  }
  if (config.n_objects_min > config.n_objects_max || config.n_objects_min < 0) {
    throw std::invalid_argument("empty n_objects range");
  }
  if (!config.class_weights.empty() &&
      static_cast<int>(config.class_weights.size()) != config.n_classes) {
    throw std::invalid_argument("class_weights size mismatch");
  }

  Rng rng(stream_seed(seed, "scene_gen"));
  Scene scene;
  scene.seed = seed;
  scene.bounds = config.bounds;
  scene.objects.source_tag = SourceTag::kGroundTruth;
  scene.objects.frame_id = 0;

  const int span = config.n_objects_max - config.n_objects_min + 1;
  const int n = config.n_objects_min + static_cast<int>(rng.uniform_int(span));

  double total_w = 0.0;
  for (double w : config.class_weights) total_w += w;

  const Eigen::Vector3d lo = config.bounds.min;
  const Eigen::Vector3d hi = config.bounds.max;

  for (int i = 0; i < n; ++i) {
    ObjectRecord rec;

    // class
    if (config.class_weights.empty()) {
      rec.class_id = static_cast<int>(rng.uniform_int(config.n_classes));
    } else {
      double u = rng.uniform() * total_w;
      int c = 0;
      double acc = config.class_weights[0];
      while (c + 1 < config.n_classes && u >= acc) acc += config.class_weights[++c];
      rec.class_id = c;
    }

    // size from the per-class table (classes beyond the table reuse it mod 4)
    const auto& ranges = kClassSizeRanges[rec.class_id % kDefaultNumClasses];
    for (int d = 0; d < 3; ++d) rec.size[d] = rng.uniform(ranges[d][0], ranges[d][1]);

    // position: rejection sample against the separation and ego keep-out
    int attempts = 0;
    for (;;) {
      if (++attempts > 10000) {
        throw GenerationError("rejection sampling failed after 10000 attempts");
      }
      double x = rng.uniform(lo.x(), hi.x());
      double y = rng.uniform(lo.y(), hi.y());
      // objects rest near the ground plane
      double z = rec.size.z() * 0.5 + rng.uniform(-0.1, 0.1);
      Eigen::Vector3d c(x, y, z);
      if (!config.bounds.contains(c)) continue;
      if (std::hypot(x, y) < config.spawn_clearance) continue;
      bool ok = true;
      for (const auto& other : scene.objects.records) {
        if ((other.center - c).norm() < config.min_separation) {
          ok = false;
          break;
        }
      }
      if (ok) {
        rec.center = c;
        break;
      }
    }

    rec.yaw = rng.uniform(-M_PI, M_PI);
    double speed = rec.class_id == 1 ? rng.uniform(0.0, 2.0) : rng.uniform(0.0, 15.0);
    double heading = rng.uniform(-M_PI, M_PI);
    rec.velocity = Eigen::Vector2d(speed * std::cos(heading), speed * std::sin(heading));
    rec.confidence = 1.0;
    scene.objects.records.push_back(rec);
  }
  return scene;
}

// ---- serialization ---------------------------------------------------------

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void append_vec(std::string& out, const double* v, int n) {
  out += '[';
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  out += ']';
}

void append_record(std::string& out, const ObjectRecord& r) {
  out += "{\"center\":";
  append_vec(out, r.center.data(), 3);
  out += ",\"size\":";
  append_vec(out, r.size.data(), 3);
  out += ",\"yaw\":";
  out += format_double(r.yaw);
  out += ",\"velocity\":";
  append_vec(out, r.velocity.data(), 2);
  out += ",\"class_id\":";
  out += std::to_string(r.class_id);
  out += ",\"confidence\":";
  out += format_double(r.confidence);
  out += '}';
}

void append_records(std::string& out, const std::vector<ObjectRecord>& records) {
  out += '[';
  for (size_t i = 0; i < records.size(); ++i) {
    if (i) out += ',';
    append_record(out, records[i]);
  }
  out += ']';
}

ObjectRecord record_from_json(const nlohmann::json& j) {
  ObjectRecord r;
  for (int d = 0; d < 3; ++d) {
    r.center[d] = j.at("center").at(d).get<double>();
    r.size[d] = j.at("size").at(d).get<double>();
  }
  r.yaw = j.at("yaw").get<double>();
  r.velocity.x() = j.at("velocity").at(0).get<double>();
  r.velocity.y() = j.at("velocity").at(1).get<double>();
  r.class_id = j.at("class_id").get<int>();
  r.confidence = j.at("confidence").get<double>();
  return r;
}

}  // namespace

std::string object_list_to_json_line(const ObjectList& list) {
  std::string out = "{\"source_tag\":\"" + to_string(list.source_tag) + "\"";
  out += ",\"frame_id\":" + std::to_string(list.frame_id);
  out += ",\"records\":";
  append_records(out, list.records);
  out += '}';
  return out;
}

ObjectList object_list_from_json_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  ObjectList list;
  list.source_tag = source_tag_from_string(j.at("source_tag").get<std::string>());
  list.frame_id = j.at("frame_id").get<int64_t>();
  for (const auto& rj : j.at("records")) list.records.push_back(record_from_json(rj));
  return list;
}

std::string scene_to_json_line(const Scene& scene) {
  std::string out = "{\"seed\":" + std::to_string(scene.seed);
  out += ",\"rig\":\"" + scene.rig_name + "\"";
  out += ",\"frame_id\":" + std::to_string(scene.objects.frame_id);
  out += ",\"bounds_min\":";
  append_vec(out, scene.bounds.min.data(), 3);
  out += ",\"bounds_max\":";
  append_vec(out, scene.bounds.max.data(), 3);
  out += ",\"objects\":";
  append_records(out, scene.objects.records);
  out += '}';
  return out;
}

Scene scene_from_json_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  Scene scene;
  scene.seed = j.at("seed").get<uint64_t>();
  scene.rig_name = j.at("rig").get<std::string>();
  scene.objects.frame_id = j.at("frame_id").get<int64_t>();
  scene.objects.source_tag = SourceTag::kGroundTruth;
  for (int d = 0; d < 3; ++d) {
    scene.bounds.min[d] = j.at("bounds_min").at(d).get<double>();
    scene.bounds.max[d] = j.at("bounds_max").at(d).get<double>();
  }
  for (const auto& rj : j.at("objects")) {
    scene.objects.records.push_back(record_from_json(rj));
  }
  return scene;
}

void write_scenes(const std::string& path, const std::vector<Scene>& scenes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  for (const auto& s : scenes) f << scene_to_json_line(s) << '\n';
}

std::vector<Scene> read_scenes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for read: " + path);
  std::vector<Scene> out;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    out.push_back(scene_from_json_line(line));
  }
  return out;
}

}  // namespace clf
