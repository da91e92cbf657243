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

// Block encodings tracked as (realized block, intended block, error ledger).
// A unitary U block-encodes A when A is its top-left block; an approximate
// encoding realizes some A~ with ||A~ - A|| <= eta.

#include <cstdint>
#include <vector>

#include "entropybench/numkernel.hpp"
#include "entropybench/states.hpp"
#include "entropybench/tolerances.hpp"

namespace entropybench {

class BlockEncoding {
 public:
  // Validates ||encoded|| <= 1; no unitary can hold a larger block.
  BlockEncoding(CMatrix encoded, CMatrix target, double subnorm, int ancillas, double eta, double sample_cost);

  const CMatrix& encoded() const { return encoded_; }
  const CMatrix& target() const { return target_; }
  // Factor s such that the block holds (intended operator) / s.
  double subnorm() const { return subnorm_; }
  int ancillas() const { return ancillas_; }
  // Certified bound on ||encoded - target||.
  double eta() const { return eta_; }
  // Copies of rho consumed to build one instance of the unitary.
  double sample_cost() const { return sample_cost_; }
  std::size_t dim() const { return encoded_.dim(); }

 private:
  CMatrix encoded_;
  CMatrix target_;
  double subnorm_;
  int ancillas_;
  double eta_;
  double sample_cost_;
};

enum class EncodingNoise { kNoiseless, kNoisy };

// Copies of rho for a Delta-approximate encoding of pi rho / 4.
double encoding_sample_cost(double delta, const Constants& k = {});

// Encoding of pi rho / 4 with a seeded Hermitian perturbation of norm Delta/2
// (noisy) or none (noiseless); eta = Delta either way.
BlockEncoding encode_density(const DensityMatrix& rho, double delta, std::uint64_t noise_seed,
                             EncodingNoise noise = EncodingNoise::kNoisy, const Constants& k = {});

struct DilatedUnitary {
  CMatrix matrix;  // dimension 2d
  BlockEncoding parent;
};

// [[A, sqrt(I - A A^+)], [sqrt(I - A^+ A), -A^+]]
DilatedUnitary dilate(const BlockEncoding& be);
CMatrix top_left_block(const CMatrix& u, std::size_t d);

BlockEncoding be_product(const BlockEncoding& first, const BlockEncoding& second);

// Exact encoding of Tr_ancilla |phi><phi|; phi is indexed system * m + ancilla.
BlockEncoding purified_encode(const std::vector<Complex>& purification, std::size_t d);

}  // namespace entropybench
