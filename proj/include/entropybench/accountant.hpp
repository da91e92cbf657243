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

// Regime dispatch, accuracy budgets, error propagation and the predicted
// sample-complexity formulas used as scaling yardsticks.

#include <string>

#include "entropybench/states.hpp"
#include "entropybench/tolerances.hpp"

namespace entropybench {

enum class Branch { kInteger, kOddFloor, kEvenFloor, kSubOne, kVonNeumann };

std::string branch_name(Branch b);

// alpha = 2k + 1 + c with 2k + 1 odd and |c| < 1. Integers keep c = 0 and
// k = floor((alpha - 1) / 2); sub-one orders have k = 0 and c = alpha - 1.
struct RegimeDecomposition {
  double alpha = 0.0;
  int k = 0;
  double c = 0.0;
  Branch branch = Branch::kInteger;
};

RegimeDecomposition decompose_alpha(double alpha);

enum class VnApproach { kQsvt, kPoly };

struct Budget {
  double delta = 0.0;              // accuracy of the trace functional
  double shots = 0.0;              // ceil(C_shots / delta^2), or ceil(C_shots / delta) for amplitude estimation
  double predicted_samples = 0.0;  // filled by predicted_samples()
  std::string formula_tag;
};

// Shot counts. Stored as double: the formulas leave 64-bit range quickly.
double bernoulli_shots(double delta, const Constants& k = {});
double ae_queries(double delta, const Constants& k = {});

// Trace-functional accuracy that keeps the entropy error within eps. For the
// von Neumann branch the measured quantity is the entropy itself (delta = eps).
Budget delta_budget(const RegimeDecomposition& regime, double eps, const StateMeta& meta, bool amplitude = false,
                    const Constants& k = {});

// Leading-order sample counts with unit constants and natural logs.
double predicted_samples(const RegimeDecomposition& regime, double eps, const StateMeta& meta, int d,
                         VnApproach approach = VnApproach::kQsvt, const Constants& k = {});

// Identifier of the formula used by predicted_samples.
std::string formula_tag(const RegimeDecomposition& regime, VnApproach approach = VnApproach::kQsvt);

// Printed comparison formulas for the two reference methods.
std::string baseline_formulas(const RegimeDecomposition& regime);

// Entropy error bound implied by trace-functional error delta. Valid while
// delta is at most half of Tr rho^alpha.
double propagate_entropy_error(double delta, double alpha, const StateMeta& meta);

}  // namespace entropybench
