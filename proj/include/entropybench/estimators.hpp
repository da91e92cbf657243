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

// Entropy estimation pipelines: block encodings and polynomial transforms
// produce an ancilla probability p0, which is sampled and inverted.

#include <cstdint>
#include <optional>
#include <string>

#include "entropybench/accountant.hpp"
#include "entropybench/blockenc.hpp"
#include "entropybench/qsvtpoly.hpp"
#include "entropybench/states.hpp"
#include "entropybench/tolerances.hpp"

namespace entropybench {

enum class MeasureMode { kBernoulli, kAmplitudeEstimation };

struct MeasurementModel {
  double p0 = 0.0;  // clamped to [0, 1]
  MeasureMode mode = MeasureMode::kBernoulli;
  double cost_per_query = 1.0;  // copies of rho per shot or query
};

struct Measurement {
  double estimate = 0.0;
  double queries = 0.0;  // shots (Bernoulli) or oracle queries (amplitude estimation)
};

// Bernoulli: mean of ceil(C_shots / delta^2) draws, sampled as binomial
// batches on independent substreams. Amplitude estimation: p0 + U[-delta, delta]
// at ceil(1 / delta) queries. Deterministic per seed for any thread count.
Measurement measure_p0(const MeasurementModel& model, double delta, std::uint64_t seed, int threads = 1,
                       const Constants& k = {});

// Closed forms of the ancilla probabilities, from the spectrum.
double ideal_p0_case1(const DensityMatrix& rho, int k, double c);  // (pi/4)^(alpha-1) Tr rho^alpha
double ideal_p0_case2(const DensityMatrix& rho, int k, double c);  // 1/4 (pi/4)^(2k) rho_min^-c Tr rho^alpha
double ideal_p0_sub_one(const DensityMatrix& rho, double alpha, int d);  // pi^alpha / (4^(alpha+1) d) Tr rho^alpha

enum class SubOneMethod { kSampling, kAmplitudeEstimation };

struct EstimatorOptions {
  // Noiseless encodings, tight polynomials and exact readout of p0.
  bool ideal = false;
  // Replace oracle rank, purity and rho_min by estimates.
  bool blind = false;
  // Restrict rank-deficient states to their support before encoding.
  bool support_projection = true;
  SubOneMethod sub_one_method = SubOneMethod::kSampling;
  VnApproach vn_approach = VnApproach::kQsvt;
  double theta = 1e-3;  // min-eigenvalue estimation accuracy (blind mode)
  int threads = 1;
  Constants constants;
};

struct EstimateReport {
  std::string quantity;  // "S_alpha" or "S_v"
  std::string method;
  Branch branch = Branch::kInteger;
  double alpha = 0.0;
  double estimate = 0.0;  // entropy, natural log
  double tr_estimate = 0.0;  // recovered Tr rho^alpha (Renyi paths)
  double target_eps = 0.0;
  double delta = 0.0;       // trace-functional accuracy from the budget
  double delta_meas = 0.0;  // accuracy demanded of the measured probability
  double p0_hat = 0.0;      // measured probability (or amplitude)
  double p0_realized = 0.0;  // exact probability of the realized circuit
  double p0_closed_form = 0.0;  // closed form for the same circuit, noiseless
  double eta = 0.0;          // block-encoding error ledger
  double shots_used = 0.0;
  double encoding_cost = 0.0;      // copies of rho per use of the unitary
  double sample_cost_total = 0.0;  // ledger: all copies consumed
  double predicted_budget = 0.0;
  double rho_min_used = 0.0;
  double rho_min_sensitivity = 0.0;  // dS/d rho_min (even floor)
  int poly_degree = 0;
  bool blind = false;
  std::uint64_t seed = 0;
  std::optional<double> exact_value;

  bool pass() const { return exact_value && std::abs(estimate - *exact_value) <= target_eps; }
};

EstimateReport renyi_integer(const DensityMatrix& rho, int alpha, double eps, std::uint64_t seed,
                             const EstimatorOptions& opt = {});
EstimateReport renyi_case_odd(const DensityMatrix& rho, double alpha, double eps, std::uint64_t seed,
                              const EstimatorOptions& opt = {});
EstimateReport renyi_case_even(const DensityMatrix& rho, double alpha, double eps, std::uint64_t seed,
                               const EstimatorOptions& opt = {});
EstimateReport renyi_sub_one(const DensityMatrix& rho, double alpha, double eps, std::uint64_t seed,
                             const EstimatorOptions& opt = {});
EstimateReport vn_qsvt(const DensityMatrix& rho, double eps, std::uint64_t seed, const EstimatorOptions& opt = {});
EstimateReport vn_poly(const DensityMatrix& rho, double eps, std::uint64_t seed, const EstimatorOptions& opt = {});

// Branch dispatch; alpha = 1 runs the von Neumann approach in opt.
EstimateReport estimate_entropy(const DensityMatrix& rho, double alpha, double eps, std::uint64_t seed,
                                const EstimatorOptions& opt = {});

struct MinEigEstimate {
  double scaled = 0.0;   // estimate of pi rho_min / 4
  double rho_min = 0.0;  // 4 scaled / pi
  double cost = 0.0;     // copies of rho
};

// Smallest eigenvalue of the realized block above its noise floor, plus
// uniform noise in [-theta, theta]; theta = 0 is the noiseless reading.
MinEigEstimate min_eig_estimate(const BlockEncoding& be, double theta, std::uint64_t seed);

}  // namespace entropybench
