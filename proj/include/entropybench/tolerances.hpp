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

#include <cstddef>

namespace entropybench {

// Every numeric threshold shared by the library and its tests.
struct Tolerances {
  static constexpr double hermitian = 1e-12;        // |a_ij - conj(a_ji)|
  static constexpr double reconstruction = 1e-10;   // ||V diag V^+ - A||
  static constexpr double jacobi_off = 1e-14;       // relative off-diagonal mass
  static constexpr int jacobi_max_sweeps = 100;
  static constexpr double rank_cutoff = 1e-12;      // zero vs nonzero eigenvalue
  static constexpr double trace = 1e-10;
  static constexpr double spectrum_sum = 1e-12;
  static constexpr double psd = 1e-12;              // most negative eigenvalue allowed
  static constexpr double unitary = 1e-10;
  static constexpr double block_norm = 1e-10;       // ||encoded|| <= 1 + this
  static constexpr double poly_bound = 1e-9;
  static constexpr double monomial_agreement = 1e-8;
  static constexpr double probability = 1e-12;      // p0 clamp slack
  static constexpr double purification = 1e-12;
  static constexpr std::size_t max_dim = 64;
};

// Tunable constants. The big-O constants are all 1 unless overridden.
struct Constants {
  double shots_multiplier = 1.0;       // C_shots in N = ceil(C_shots / delta^2)
  double encoding_multiplier = 1.0;    // constant in (1/D) ln(1/D)
  double log_degree_constant = 8.0;    // C_log in the log-polynomial degree cap
  int degree_cap = 4096;
  int monomial_max_degree = 30;
  double ideal_poly_eps = 1e-8;
  double predicted_multiplier = 1.0;
};

}  // namespace entropybench
