// Copyright 2026 The EntropyBench Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace entropybench {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent substream for (seed, index); used for trials, shot batches and
// the purpose-specific streams below.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

enum class Stream : std::uint64_t {
  kSpectrum = 1,
  kUnitary = 2,
  kEncodingNoise = 3,
  kShots = 4,
  kAmplitude = 5,
  kMinEig = 6,
  kPreliminary = 7,
};

inline std::mt19937_64 make_rng(std::uint64_t seed, Stream stream, std::uint64_t index = 0) {
  return std::mt19937_64(derive_seed(derive_seed(seed, static_cast<std::uint64_t>(stream)), index));
}

}  // namespace entropybench
