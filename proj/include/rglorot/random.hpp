// Copyright 2026 The rglorot Authors
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

#include <array>
#include <cstdint>

namespace rglorot {

/// Philox4x32-10 block function (Salmon et al., SC'11). Pure: the output
/// depends only on (counter, key), which is what makes every Monte-Carlo
/// trial reproducible regardless of how trials are scheduled on threads.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Purpose tag folded into the top bits of a stream id so matrix draws and
/// input draws never share a stream.
enum class StreamTag : std::uint64_t {
  Matrix = 1,
  Input = 2,
  Auxiliary = 3,
};

/// Builds a 64-bit stream id from a tag and two trial indices
/// (`primary` < 2^28, `secondary` < 2^32).
std::uint64_t stream_id(StreamTag tag, std::uint64_t primary, std::uint64_t secondary = 0);

/// A sequential view of one Philox stream.
///
/// Key = seed, counter = (block index, stream id). Gaussian variates use the
/// trigonometric Box-Muller transform on two 53-bit uniforms taken from one
/// Philox block; this algorithm is fixed so that golden outputs stay stable.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Standard normal N(0, 1).
  double normal() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rglorot
