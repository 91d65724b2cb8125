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

#include "clf/rng.hpp"

#include <cmath>

namespace clf {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t hash_combine(uint64_t a, uint64_t b) {
  return splitmix64(a ^ (splitmix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

uint64_t stream_seed(uint64_t seed, std::string_view tag) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hash_combine(seed, h);
}

uint64_t stream_seed(uint64_t seed, std::string_view tag, uint64_t extra) {
  return hash_combine(stream_seed(seed, tag), extra);
}

double Rng::normal() {
  // u1 in (0, 1] so the log is finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

int Rng::binomial(int n, double p) {
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (bernoulli(p)) ++k;
  }
  return k;
}

int Rng::poisson(double mean) {
  if (mean <= 0.0) return 0;
  double l = std::exp(-mean);
  double prod = uniform();
  int k = 0;
  while (prod > l) {
    prod *= uniform();
    ++k;
  }
  return k;
}

}  // namespace clf
