// Copyright 2026 The qrnet Authors
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

#pragma once

#include <cstdint>

#include "qrnet/types.hpp"

namespace qrnet {

// Counter-based generator built on the SplitMix64 finalizer, chosen so that a
// (seed, stream) pair reproduces the same sequence in any language:
//
//   key      = mix(seed ^ mix(stream * 0x9E3779B97F4A7C15))
//   output_i = mix(key + (i+1) * 0x9E3779B97F4A7C15)
//
// where mix() is the SplitMix64 finalizer (Steele/Lea/Flood 2014):
//   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB;
//   z ^= z >> 31;
//
// uniform() maps the top 53 bits to [0,1); normal() uses Box-Muller on two
// consecutive uniforms (the second value of each pair is cached).
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0);

  uint64_t next_u64();
  double uniform();                    // [0, 1)
  double uniform(double lo, double hi);
  double normal();                     // standard normal
  Complex normal_complex();            // mean 0, E|z|^2 = 1

  // Independent child stream; deterministic in (parent stream, substream).
  Rng split(uint64_t substream) const;

 private:
  uint64_t seed_;
  uint64_t stream_;
  uint64_t key_;
  uint64_t counter_ = 0;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

// Random density matrix from the Ginibre ensemble: G G^dag / Tr(G G^dag) with
// G a d x d matrix of independent standard complex Gaussians.
Matrix ginibre_density(Rng& rng, Index d);

}  // namespace qrnet
