// Copyright 2026 The Insuperable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INSUPERABLE_RNG_HPP_
#define INSUPERABLE_RNG_HPP_

#include <cstdint>

namespace insuperable {

// Counter-based generator: output i of stream s under seed k is
// splitmix64(key(k, s) + i * 0x9E3779B97F4A7C15). The key mixes seed and
// stream through the same finalizer, so streams are independent of the order
// in which they are consumed. All draws are derived from 64-bit integers by
// explicit formulas, so results do not depend on the standard library.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  // Uniform on [0, bound); bound > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  bool coin() { return (next() >> 63) != 0; }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// The splitmix64 output finalizer.
std::uint64_t mix64(std::uint64_t z);

}  // namespace insuperable

#endif  // INSUPERABLE_RNG_HPP_
