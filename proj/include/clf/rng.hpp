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

#ifndef CLF_RNG_HPP_
#define CLF_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace clf {

// splitmix64 finalizer; also used to derive child stream seeds.
uint64_t splitmix64(uint64_t x);

// Order-sensitive seed combiner.
uint64_t hash_combine(uint64_t a, uint64_t b);

// Derives a named substream seed, e.g. stream_seed(scene_seed, "drops").
uint64_t stream_seed(uint64_t seed, std::string_view tag);
uint64_t stream_seed(uint64_t seed, std::string_view tag, uint64_t extra);

// Deterministic random source. All distributions are implemented on top of
// raw 64-bit draws so that sequences never depend on the standard library's
// distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n must be >= 1.
  uint64_t uniform_int(uint64_t n) {
    uint64_t k = static_cast<uint64_t>(uniform() * static_cast<double>(n));
    return k >= n ? n - 1 : k;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller, one fresh pair per call (no caching so
  // draws stay aligned with call sites).
  double normal();

  double normal(double mean, double std) { return mean + std * normal(); }

  // Binomial(n, p) by direct Bernoulli counting.
  int binomial(int n, double p);

  // Poisson via inversion (small means only).
  int poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

}  // namespace clf

#endif  // CLF_RNG_HPP_
