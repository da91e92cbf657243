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

// Certified Chebyshev approximations of the scalar functions that the
// singular value transformation applies to a block-encoded operator.

#include <functional>
#include <string>
#include <vector>

#include "entropybench/blockenc.hpp"
#include "entropybench/tolerances.hpp"

namespace entropybench {

enum class PolyTarget {
  kCustom,
  kLogScaled,  // log(1/x) / (2 log(1/beta)) on [beta, 1]
  kPosPower,   // x^c / 2 on [1/kappa, 1]
  kNegPower,   // x^-c / (2 kappa^c) on [1/kappa, 1]
};

// Chebyshev series sum_j coeffs[j] T_j(t), t = (2x - lo - hi) / (hi - lo).
class PolyApprox {
 public:
  // Certifies |p - target| <= eps on the dense grid; throws kNumeric otherwise.
  PolyApprox(std::vector<double> coeffs, double lo, double hi, double eps, PolyTarget tag,
             std::function<double(double)> target);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  // Certified sup-norm error on the dense grid.
  double eps() const { return eps_; }
  // Largest grid error observed at construction (<= eps).
  double achieved() const { return achieved_; }
  PolyTarget tag() const { return tag_; }

  double operator()(double x) const;
  double derivative(double x) const;
  double target(double x) const { return target_(x); }

  // Tag parameters; unused fields stay zero.
  double power = 0.0;  // c
  double kappa = 0.0;
  double beta = 0.0;
  // Required precision of the input encoding for power polynomials, or 0.
  double input_precision = 0.0;

 private:
  std::vector<double> coeffs_;
  std::vector<double> dcoeffs_;  // d/dx series
  double lo_, hi_, eps_;
  double achieved_ = 0.0;
  PolyTarget tag_;
  std::function<double(double)> target_;
};

// Max |p(x) - f(x)| over the certification grid (max(10K, 64) + 1 Chebyshev extrema).
double certification_error(const PolyApprox& p, const std::function<double(double)>& f);

// Smallest-degree certifying Chebyshev interpolant with degree <= degree_cap.
PolyApprox cheb_fit(const std::function<double(double)>& target, double lo, double hi, double eps, int degree_cap,
                    PolyTarget tag = PolyTarget::kCustom);

PolyApprox approx_log(double beta, double eps, const Constants& k = {});
PolyApprox approx_pos_power(double c, double kappa, double eps, const Constants& k = {});
PolyApprox approx_neg_power(double c, double kappa, double eps, const Constants& k = {});

// Input precision formulas for the power polynomials (natural logs).
double pos_power_input_precision(double kappa, double eps);
double neg_power_input_precision(double c, double kappa, double eps);

// Transform a Hermitian block encoding by p. The new error ledger is
// p.eps + L * eta with L the sup of |p'| on the eta-enlarged domain.
BlockEncoding apply_poly(const BlockEncoding& be, const PolyApprox& p);

struct MonomialPoly {
  std::vector<double> coeffs;  // a_i of sum a_i x^i
  double operator()(double x) const;
  double abs_sum(std::size_t from = 0) const;
};

// Monomial coefficients of s * p(x), s = 2 log(1/beta) for log targets, else 1.
MonomialPoly to_monomial(const PolyApprox& p, const Constants& k = {});

// "domain lo hi", "eps e", then one coefficient per line.
std::string poly_to_text(const PolyApprox& p);
PolyApprox poly_from_text(const std::string& text);

}  // namespace entropybench
