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

#include "informed/random.h"

#include <algorithm>

#include "informed/error.h"

namespace informed {

std::uint64_t MixBits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t point,
                         std::uint64_t run) {
  return MixBits(MixBits(MixBits(seed) ^ point) ^ run);
}

CategoricalSampler::CategoricalSampler(std::span<const double> probs) {
  if (probs.empty()) throw EvalError("empty distribution");
  double total = 0.0;
  cumulative_.reserve(probs.size());
  for (ClassIndex c = 0; c < probs.size(); ++c) {
    if (probs[c] < 0.0) throw EvalError("negative probability");
    total += probs[c];
    cumulative_.push_back(total);
    if (probs[c] > 0.0) last_positive_ = c;
  }
  if (!(total > 0.0)) throw EvalError("empty distribution");
  for (double& c : cumulative_) c /= total;
}

ClassIndex CategoricalSampler::operator()(Rng& rng) const {
  const double u = rng.Uniform();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  // Rounding can leave the last cumulative value just below 1.
  if (it == cumulative_.end()) return last_positive_;
  return static_cast<ClassIndex>(it - cumulative_.begin());
}

}  // namespace informed
