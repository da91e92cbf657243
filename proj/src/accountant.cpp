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

#include "entropybench/accountant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entropybench/error.hpp"

namespace entropybench {

namespace {

// Natural log clamped at 1 so log factors never shrink a count.
double lg(double x) { return std::log(std::max(x, std::numbers::e)); }

void check_eps(double eps) {
  if (!(eps > 0.0)) {
    std::ostringstream os;
    os << "target accuracy must be positive, got " << eps;
    fail(ErrorCode::kInvalidArgument, os.str());
  }
}

void check_meta(const StateMeta& meta) {
  require(meta.rank >= 1 && meta.rho_min > 0.0 && meta.purity > 0.0, "state metadata is not populated");
}

}  // namespace

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::kInteger:
      return "integer";
    case Branch::kOddFloor:
      return "odd_floor";
    case Branch::kEvenFloor:
      return "even_floor";
    case Branch::kSubOne:
      return "sub_one";
    case Branch::kVonNeumann:
      return "von_neumann";
  }
  return "unknown";
}

RegimeDecomposition decompose_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    std::ostringstream os;
    os << "entropy order must be positive and finite, got " << alpha;
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  RegimeDecomposition r;
  r.alpha = alpha;
  if (alpha == 1.0) {
    r.branch = Branch::kVonNeumann;
    return r;
  }
  if (alpha < 1.0) {
    r.branch = Branch::kSubOne;
    r.c = alpha - 1.0;
    return r;
  }
  if (std::floor(alpha) == alpha) {
    r.branch = Branch::kInteger;
    r.k = static_cast<int>((alpha - 1.0) / 2.0);
    return r;
  }
  r.k = static_cast<int>(std::floor(alpha / 2.0));
  r.c = alpha - (2.0 * r.k + 1.0);
  r.branch = r.c > 0.0 ? Branch::kOddFloor : Branch::kEvenFloor;
  return r;
}

double bernoulli_shots(double delta, const Constants& k) {
  require(delta > 0.0, "accuracy must be positive");
  return std::max(1.0, std::ceil(k.shots_multiplier / (delta * delta)));
}

double ae_queries(double delta, const Constants& k) {
  require(delta > 0.0, "accuracy must be positive");
  return std::max(1.0, std::ceil(k.shots_multiplier / delta));
}

Budget delta_budget(const RegimeDecomposition& regime, double eps, const StateMeta& meta, bool amplitude,
                    const Constants& k) {
  check_eps(eps);
  check_meta(meta);
  const double a = regime.alpha;
  const double gap = std::abs(1.0 - a);
  const double r = meta.rank;
  Budget b;
  switch (regime.branch) {
    case Branch::kInteger:
      b.delta = a == 2.0 ? eps / (2.0 * r) : gap * eps / (2.0 * std::pow(r, a - 1.0));
      break;
    case Branch::kOddFloor:
    case Branch::kEvenFloor:
      b.delta = a <= 2.0 ? eps * gap / (6.0 * r) : eps * gap / (6.0 * std::pow(r, a - 1.0));
      break;
    case Branch::kSubOne:
      b.delta = eps * gap * std::pow(meta.purity, a - 1.0) / 4.0;
      break;
    case Branch::kVonNeumann:
      b.delta = eps;
      break;
  }
  b.shots = amplitude ? ae_queries(b.delta, k) : bernoulli_shots(b.delta, k);
  b.formula_tag = formula_tag(regime);
  return b;
}

std::string formula_tag(const RegimeDecomposition& regime, VnApproach approach) {
  switch (regime.branch) {
    case Branch::kInteger:
      return "integer:alpha*r^(2alpha-2)/eps^2";
    case Branch::kSubOne:
      return "renyi:0<alpha<1";
    case Branch::kOddFloor:
      return regime.alpha < 2.0 ? "renyi:1<alpha<2" : "renyi:alpha>2,odd_floor";
    case Branch::kEvenFloor:
      return "renyi:alpha>2,even_floor";
    case Branch::kVonNeumann:
      return approach == VnApproach::kQsvt ? "vn:qsvt" : "vn:poly";
  }
  return "unknown";
}

double predicted_samples(const RegimeDecomposition& regime, double eps, const StateMeta& meta, int d,
                         VnApproach approach, const Constants& k) {
  check_eps(eps);
  check_meta(meta);
  require(d >= 1, "dimension must be positive");
  const double a = regime.alpha;
  const double c = regime.c;
  const double gap = std::abs(1.0 - a);
  const double r = meta.rank;
  const double rmin = meta.rho_min;
  const double dim = d;
  double n = 0.0;
  switch (regime.branch) {
    case Branch::kInteger:
      n = a * std::pow(r, 2.0 * a - 2.0) / (eps * eps);
      break;
    case Branch::kSubOne: {
      const double p = std::pow(meta.purity, a - 1.0);
      n = dim * dim / (eps * eps * gap * gap * p * p * rmin * rmin) * std::pow(lg(dim / (eps * gap * p * rmin)), 5) +
          std::log(dim);
      break;
    }
    case Branch::kOddFloor:
      if (a < 2.0) {
        n = (1.0 / (rmin * rmin)) * (r * r * r / (eps * eps * eps)) * std::pow(lg(r / (rmin * eps)), 5) +
            std::log(dim);
      } else {
        const double ra = std::pow(r, a - 1.0);
        const double e3 = eps * eps * eps * gap * gap * gap;
        n = ra * ra * ra * a * a / e3 * lg(a * ra / (gap * eps)) +
            ra * ra * ra / (e3 * rmin * rmin) * std::pow(lg(ra / (gap * eps * rmin)), 5) + std::log(dim);
      }
      break;
    case Branch::kEvenFloor: {
      const double ra = std::pow(r, a - 1.0);
      const double e3 = eps * eps * eps * gap * gap * gap;
      n = a * a * ra * ra * ra / (std::pow(rmin, -3.0 * c) * e3) * lg(a * ra / (gap * eps)) +
          ra * ra * ra / (e3 * std::pow(rmin, 2.0 - 4.0 * c)) *
              std::pow(lg(ra / (eps * gap * std::pow(rmin, 1.0 - c))), 5) +
          std::log(dim);
      break;
    }
    case Branch::kVonNeumann:
      if (approach == VnApproach::kQsvt) {
        const double lmin = std::log(4.0 / (std::numbers::pi * rmin));
        const double lmax = std::log(4.0 / (std::numbers::pi * meta.rho_max));
        n = std::pow(lmin / lmax, 3) / (std::pow(eps, 4) * rmin * rmin) * std::pow(lg(1.0 / eps), 4) *
            std::pow(lg(2.0 * lmin / (eps * lmax)), 6);
      } else {
        n = std::pow(lg(1.0 / rmin), 4) / (rmin * rmin) / (eps * eps) * std::pow(lg(1.0 / eps), 2);
      }
      break;
  }
  return std::max(1.0, k.predicted_multiplier * n);
}

std::string baseline_formulas(const RegimeDecomposition& regime) {
  const char* sum = "sum_{k=1}^K |binom(alpha-1,k)|";
  std::ostringstream os;
  switch (regime.branch) {
    case Branch::kInteger:
      os << "no baseline comparison for integer orders";
      break;
    case Branch::kSubOne:
      os << "acharya2020: O(d^(2/alpha)/eps^(2/alpha)); wang2023: O((" << sum
         << ")^5 / (|1-alpha|^5 eps^5 rho_min^2 (Tr rho^2)^(5(alpha-1))))";
      break;
    case Branch::kOddFloor:
      if (regime.alpha < 2.0) {
        os << "acharya2020: O(n^2/eps^2); wang2023: O((r^5 " << sum << ")^5 / (|1-alpha|^5 eps^5 rho_min^2))";
        break;
      }
      [[fallthrough]];
    case Branch::kEvenFloor:
      os << "acharya2020: O(n^2/eps^2); wang2023: O((r^(5(alpha-1)) " << sum
         << ")^5 / (|1-alpha|^5 eps^5 rho_min^2))";
      break;
    case Branch::kVonNeumann:
      os << "acharya2020: O(d^2/eps^2); wang2023: O~(1/(eps^5 rho_min^2))";
      break;
  }
  return os.str();
}

double propagate_entropy_error(double delta, double alpha, const StateMeta& meta) {
  require(delta >= 0.0, "trace-functional error must be nonnegative");
  require(alpha > 0.0 && alpha != 1.0, "error propagation needs alpha > 0, alpha != 1");
  check_meta(meta);
  const double gap = std::abs(1.0 - alpha);
  const double r = meta.rank;
  if (alpha > 2.0) return 2.0 * delta * std::pow(r, alpha - 1.0) / gap;
  if (alpha > 1.0) return 2.0 * delta * r / gap;
  return 2.0 * delta / (gap * std::pow(meta.purity, alpha - 1.0));
}

}  // namespace entropybench
