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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "entropybench/accountant.hpp"
#include "entropybench/error.hpp"
#include "entropybench/estimators.hpp"
#include "entropybench/experiment.hpp"
#include "entropybench/qsvtpoly.hpp"
#include "entropybench/rng.hpp"
#include "entropybench/states.hpp"

using namespace entropybench;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const Outcome& o) {
  std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

const DensityMatrix& diag_fixture() {
  static const DensityMatrix rho = from_spectrum({0.5, 0.3, 0.2}, 8);
  return rho;
}

Outcome ideal_exactness() {
  const auto t0 = Clock::now();
  const std::vector<double> alphas = {1.3, 1.5, 2.5, 3.5, 4.5, 5.6, 6.4};
  EstimatorOptions opt;
  opt.ideal = true;
  double worst_s = 0.0, worst_p = 0.0;
  int runs = 0;
  for (int i = 0; i < 50; ++i) {
    const int d = 2 + i % 15;
    const int r = std::min(d, 1 + i % 4);
    const DensityMatrix rho = random_density(d, r, derive_seed(2026, static_cast<std::uint64_t>(i)));
    const auto eigs = oracle::eigenvalues(rho.matrix());
    for (double a : alphas) {
      const EstimateReport rep = estimate_entropy(rho, a, 1e-3, derive_seed(7, static_cast<std::uint64_t>(runs)), opt);
      worst_s = std::max(worst_s, std::abs(rep.estimate - oracle::entropy(eigs, a)));
      worst_p = std::max(worst_p, std::abs(rep.p0_realized - rep.p0_closed_form));
      ++runs;
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = worst_s <= 1e-5 && worst_p <= 1e-6 && secs < 60.0;
  return {ok, fmt("%d runs, max |S - oracle| = %.3g (tol 1e-5), max |p0 - closed form| = %.3g (tol 1e-6), %.1f s",
                  runs, worst_s, worst_p, secs)};
}

Outcome polynomial_certification() {
  std::string detail;
  bool ok = true;
  int checks = 0;
  for (double beta : {0.2, 0.1, 0.05}) {
    for (double eps : {1e-2, 1e-3}) {
      const PolyApprox p = approx_log(beta, eps);
      const double cap = 8.0 / beta * std::log(1.0 / eps);
      double err = 0.0;
      for (int i = 0; i <= 20000; ++i) {
        const double x = beta + (1.0 - beta) * i / 20000.0;
        err = std::max(err, std::abs(p(x) - std::log(1.0 / x) / (2.0 * std::log(1.0 / beta))));
      }
      if (p.degree() > cap || err > eps) {
        ok = false;
        detail += fmt(" log(beta=%g, eps=%g): deg %d cap %.0f err %.3g;", beta, eps, p.degree(), cap, err);
      }
      ++checks;
    }
  }
  struct PowerCase {
    double c, kappa, eps;
    bool negative;
  };
  const std::vector<PowerCase> cases = {{0.5, 10, 1e-3, false}, {0.3, 5, 1e-4, false}, {0.25, 50, 1e-3, false},
                                        {0.6, 10, 1e-3, true},  {0.3, 4, 1e-4, true},  {0.45, 30, 1e-3, true}};
  for (const auto& pc : cases) {
    const PolyApprox p = pc.negative ? approx_neg_power(pc.c, pc.kappa, pc.eps) : approx_pos_power(pc.c, pc.kappa, pc.eps);
    double err = 0.0;
    const double lo = 1.0 / pc.kappa;
    for (int i = 0; i <= 20000; ++i) {
      const double x = lo + (1.0 - lo) * i / 20000.0;
      const double f = pc.negative ? std::pow(x, -pc.c) / (2.0 * std::pow(pc.kappa, pc.c)) : std::pow(x, pc.c) / 2.0;
      err = std::max(err, std::abs(p(x) - f));
    }
    if (err > 2.0 * pc.eps) {
      ok = false;
      detail += fmt(" %s(c=%g, kappa=%g): err %.3g > 2eps;", pc.negative ? "neg" : "pos", pc.c, pc.kappa, err);
    }
    ++checks;
  }
  return {ok, fmt("%d fits checked on 20001-point grids", checks) + detail};
}

Outcome statistical_coverage() {
  const auto t0 = Clock::now();
  struct Case {
    const char* name;
    double alpha;
    VnApproach approach;
    double target;
  };
  const std::vector<Case> cases = {{"S_2", 2.0, VnApproach::kQsvt, 0.96758},
                                   {"S_1.5", 1.5, VnApproach::kQsvt, 0.997422},
                                   {"S_v qsvt", 1.0, VnApproach::kQsvt, 1.029653},
                                   {"S_v poly", 1.0, VnApproach::kPoly, 1.029653}};
  std::string detail;
  bool ok = true;
  for (const auto& c : cases) {
    EstimatorOptions opt;
    opt.vn_approach = c.approach;
    int hits = 0;
    for (int t = 0; t < 100; ++t) {
      const auto rep = estimate_entropy(diag_fixture(), c.alpha, 0.05, derive_seed(31337, static_cast<std::uint64_t>(t)), opt);
      if (std::abs(rep.estimate - c.target) <= 0.05) ++hits;
    }
    ok = ok && hits >= 95;
    detail += fmt("%s %d/100; ", c.name, hits);
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 300.0;
  return {ok, detail + fmt("%.1f s", secs)};
}

Outcome shot_scaling() {
  const std::vector<double> grid = {0.2, 0.1, 0.05, 0.025};
  struct Path {
    const char* name;
    double alpha;
    EstimatorOptions opt;
    double expected;
  };
  EstimatorOptions base;
  EstimatorOptions ae = base;
  ae.sub_one_method = SubOneMethod::kAmplitudeEstimation;
  EstimatorOptions poly = base;
  poly.vn_approach = VnApproach::kPoly;
  const std::vector<Path> paths = {{"integer a=2", 2.0, base, 2.0},  {"odd a=1.5", 1.5, base, 2.0},
                                   {"even a=2.5", 2.5, base, 2.0},   {"sub-one a=0.5", 0.5, base, 2.0},
                                   {"vn qsvt", 1.0, base, 2.0},      {"vn poly", 1.0, poly, 2.0},
                                   {"sub-one ae a=0.5", 0.5, ae, 1.0}};
  bool ok = true;
  std::string detail;
  for (const auto& p : paths) {
    std::vector<double> x, y;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const auto rep = estimate_entropy(diag_fixture(), p.alpha, grid[g], derive_seed(99, g), p.opt);
      x.push_back(std::log(1.0 / grid[g]));
      y.push_back(std::log(rep.shots_used));
    }
    const Slope s = fit_slope(x, y);
    const bool good = std::abs(s.value - p.expected) <= 0.3;
    ok = ok && good;
    detail += fmt("%s %.3f (want %.0f); ", p.name, s.value, p.expected);
  }
  return {ok, detail};
}

Outcome propagation_soundness() {
  std::mt19937_64 rng(derive_seed(5150, 1));
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int violations = 0, checked = 0;
  for (int i = 0; i < 200; ++i) {
    const int d = 2 + static_cast<int>(u01(rng) * 15);
    const int r = 1 + static_cast<int>(u01(rng) * d);
    const DensityMatrix rho = random_density(d, std::min(r, d), derive_seed(5150, 100 + static_cast<std::uint64_t>(i)));
    const auto eigs = oracle::eigenvalues(rho.matrix());
    double alpha = 0.05 + u01(rng) * 7.95;
    if (std::abs(alpha - 1.0) < 1e-3) alpha = 1.5;
    const double t = oracle::tr_pow(eigs, alpha);
    const double delta = u01(rng) * t / 2.0;
    StateMeta meta;
    meta.rank = oracle::rank(eigs);
    meta.purity = oracle::tr_pow(eigs, 2.0);
    meta.rho_min = oracle::rho_min(eigs);
    meta.rho_max = *std::max_element(eigs.begin(), eigs.end());
    const double bound = propagate_entropy_error(delta, alpha, meta);
    const double s = std::log(t) / (1.0 - alpha);
    for (double err : {-delta, -0.5 * delta, 0.5 * delta, delta, (2.0 * u01(rng) - 1.0) * delta}) {
      const double s_hat = std::log(t + err) / (1.0 - alpha);
      if (std::abs(s_hat - s) > bound * (1.0 + 1e-12)) ++violations;
      ++checked;
    }
  }
  return {violations == 0, fmt("%d perturbations on 200 instances, %d violations", checked, violations)};
}

Outcome fixtures() {
  const DensityMatrix pure = from_spectrum({1.0}, 4);
  const DensityMatrix mixed = from_spectrum({0.25, 0.25, 0.25, 0.25}, 4);
  struct Run {
    const char* name;
    double alpha;
    VnApproach approach;
    SubOneMethod method;
  };
  const std::vector<Run> runs = {{"a=0.5 sampling", 0.5, VnApproach::kQsvt, SubOneMethod::kSampling},
                                 {"a=0.5 ae", 0.5, VnApproach::kQsvt, SubOneMethod::kAmplitudeEstimation},
                                 {"vn qsvt", 1.0, VnApproach::kQsvt, SubOneMethod::kSampling},
                                 {"vn poly", 1.0, VnApproach::kPoly, SubOneMethod::kSampling},
                                 {"a=1.5", 1.5, VnApproach::kQsvt, SubOneMethod::kSampling},
                                 {"a=2", 2.0, VnApproach::kQsvt, SubOneMethod::kSampling},
                                 {"a=3", 3.0, VnApproach::kQsvt, SubOneMethod::kSampling},
                                 {"a=2.5", 2.5, VnApproach::kQsvt, SubOneMethod::kSampling}};
  int total = 0, good = 0;
  std::string bad;
  for (bool ideal : {true, false}) {
    const double eps = ideal ? 1e-3 : 0.05;
    for (const auto& r : runs) {
      EstimatorOptions opt;
      opt.ideal = ideal;
      opt.vn_approach = r.approach;
      opt.sub_one_method = r.method;
      for (int which = 0; which < 2; ++which) {
        const DensityMatrix& rho = which == 0 ? pure : mixed;
        const double want = which == 0 ? 0.0 : std::log(4.0);
        const auto rep = estimate_entropy(rho, r.alpha, eps, derive_seed(4242, static_cast<std::uint64_t>(total)), opt);
        ++total;
        if (std::abs(rep.estimate - want) <= eps) {
          ++good;
        } else {
          bad += fmt(" %s %s %s err %.3g;", ideal ? "ideal" : "noisy", which == 0 ? "pure" : "mixed", r.name,
                     std::abs(rep.estimate - want));
        }
      }
    }
  }
  return {good == total, fmt("%d/%d fixture runs within eps (ideal eps 1e-3, noisy eps 0.05)", good, total) + bad};
}

Outcome noise_budget() {
  std::mt19937_64 rng(derive_seed(8080, 1));
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const std::vector<double> alphas = {0.5, 0.7, 1.0, 1.3, 1.5, 1.7, 2.5, 3.3, 4.5};
  int violations = 0;
  double worst_ratio = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + static_cast<int>(u01(rng) * 7);
    const int r = 1 + static_cast<int>(u01(rng) * std::min(d, 4));
    const DensityMatrix rho = random_density(d, r, derive_seed(8080, 10 + static_cast<std::uint64_t>(i)));
    const double alpha = alphas[static_cast<std::size_t>(i) % alphas.size()];
    EstimatorOptions opt;
    opt.vn_approach = i % 2 ? VnApproach::kPoly : VnApproach::kQsvt;
    if (alpha == 1.0) opt.vn_approach = VnApproach::kQsvt;
    const double eps = 0.05 + 0.15 * u01(rng);
    const auto rep = estimate_entropy(rho, alpha, eps, derive_seed(8080, 1000 + static_cast<std::uint64_t>(i)), opt);
    const double dev = std::abs(rep.p0_realized - rep.p0_closed_form);
    if (dev > rep.eta) ++violations;
    if (rep.eta > 0.0) worst_ratio = std::max(worst_ratio, dev / rep.eta);
  }
  return {violations == 0, fmt("100 noisy instances, %d violations, max deviation / eta' = %.3g", violations, worst_ratio)};
}

Outcome determinism() {
  ExperimentConfig cfg;
  cfg.mode = "validate";
  cfg.quick = true;
  cfg.seed = 12345;
  const ExperimentResult a = run_experiment(cfg);
  const ExperimentResult b = run_experiment(cfg);
  const bool ok = a.csv == b.csv && !a.csv.empty();
  return {ok, fmt("validate --quick twice: %zu bytes, %s", a.csv.size(), ok ? "identical" : "different")};
}

}  // namespace

int main() {
  report(1, "ideal-pipeline exactness", guarded(ideal_exactness));
  report(2, "polynomial certification", guarded(polynomial_certification));
  report(3, "statistical coverage", guarded(statistical_coverage));
  report(4, "shot-scaling law", guarded(shot_scaling));
  report(5, "error-propagation soundness", guarded(propagation_soundness));
  report(6, "pure/maximally-mixed fixtures", guarded(fixtures));
  report(7, "noise-budget honesty", guarded(noise_budget));
  report(8, "determinism", guarded(determinism));
  return failures == 0 ? 0 : 1;
}
