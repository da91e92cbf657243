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

// Density matrices, controlled test instances, and the exact spectral oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "entropybench/numkernel.hpp"

namespace entropybench {

struct StateMeta {
  int rank = 0;          // eigenvalues above Tolerances::rank_cutoff
  double rho_min = 0.0;  // smallest nonzero eigenvalue
  double rho_max = 0.0;
  double purity = 0.0;   // Tr rho^2
};

// Hermitian, PSD, unit trace. The spectrum is cached with tiny negative
// eigenvalues clamped to zero.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermMatrix m);

  std::size_t dim() const { return matrix_.dim(); }
  const HermMatrix& matrix() const { return matrix_; }
  const Spectrum& spectrum() const { return spectrum_; }
  const StateMeta& meta() const { return meta_; }
  bool full_rank() const { return meta_.rank == static_cast<int>(dim()); }

 private:
  HermMatrix matrix_;
  Spectrum spectrum_;
  StateMeta meta_;
};

// Rank-r state: Dirichlet(1,...,1) spectrum rotated by a Haar unitary.
DensityMatrix random_density(int d, int r, std::uint64_t seed);

// diag(eigs) padded with zeros to dimension d.
DensityMatrix from_spectrum(const std::vector<double>& eigs, int d);

// Restriction to the nonzero eigenspace, expressed in the eigenbasis. Returns
// the state unchanged when it is already full rank.
DensityMatrix support_projection(const DensityMatrix& rho);

struct Purification {
  std::vector<Complex> state;  // index = system * d + ancilla
  int hadamards = 0;
  int cnots = 0;
};

// (1/sqrt d) sum_i |i>|i>, prepared by simulating the Hadamard + CNOT circuit.
Purification purify_maximally_mixed(int d);

// Tr over the second factor of |phi><phi| where phi lives on d * (size/d).
CMatrix partial_trace_second(const std::vector<Complex>& phi, std::size_t d);

struct ExactEntropy {
  double alpha = 0.0;
  double tr_pow = 0.0;   // Tr rho^alpha over nonzero eigenvalues (1 at alpha = 1)
  double entropy = 0.0;  // S_alpha, or S_v at alpha = 1; natural log
  StateMeta meta;
};

ExactEntropy exact_entropies(const DensityMatrix& rho, double alpha);

// Text format: "dim d" then d*d lines "i j re im", shortest round-trip decimals.
std::string matrix_to_text(const CMatrix& m);
CMatrix matrix_from_text(const std::string& text);
std::string density_to_text(const DensityMatrix& rho);
DensityMatrix density_from_text(const std::string& text);
void save_density(const DensityMatrix& rho, const std::string& path);
DensityMatrix load_density(const std::string& path);

std::string format_double(double v);

}  // namespace entropybench
