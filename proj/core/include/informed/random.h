/*
 * Copyright 2026 The Informed Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef INFORMED_RANDOM_H_
#define INFORMED_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "informed/label_space.h"

namespace informed {

// SplitMix64 finalizer.
std::uint64_t MixBits(std::uint64_t x);

// Seed for stream (point, run) under a master seed. Distinct keys give
// independent-looking seeds; the mapping depends on nothing but its inputs.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t point,
                         std::uint64_t run);

// Deterministic random stream. Only the raw 64-bit engine output is used, so
// draws are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextBits() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Inverse-CDF sampler over a fixed class distribution.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(std::span<const double> probs);
  ClassIndex operator()(Rng& rng) const;

 private:
  std::vector<double> cumulative_;
  ClassIndex last_positive_ = 0;
};

}  // namespace informed

#endif  // INFORMED_RANDOM_H_
