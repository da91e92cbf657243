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

#include "entropybench/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "entropybench/error.hpp"
#include "entropybench/rng.hpp"

namespace entropybench {

namespace {

constexpr double kPi4 = std::numbers::pi / 4.0;
constexpr std::int64_t kBatch = std::int64_t{1} << 30;

double tr_power(const DensityMatrix& rho, double alpha) {
  double t = 0.0;
  for (double l : rho.spectrum().eigenvalues)
    if (l > Tolerances::rank_cutoff) t += std::pow(l, alpha);
  return t;
}

// Re Tr(A sigma A^+).
double exact_prob(const CMatrix& a, const CMatrix& sigma) {
  const CMatrix m = a * sigma * a.adjoint();
  return std::clamp(m.trace().real(), 0.0, 1.0);
}

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// State, budget metadata and rho_min after projection and (optionally)
// blind estimation.
struct Prepared {
  DensityMatrix state;
  int d = 0;
  StateMeta meta;
  double rho_min = 0.0;
  double rho_max = 0.0;
  double extra_shots = 0.0;
  double extra_cost = 0.0;
};

struct TraceSample {
  double value = 0.0;
  double shots = 0.0;
};

// Hadamard test on n copies: outcome 0 with probability (1 + Tr rho^n) / 2.
TraceSample sample_trace_power(const DensityMatrix& state, int n, double delta_t, std::uint64_t seed,
                               const EstimatorOptions& opt) {
  const double t = tr_power(state, n);
  TraceSample out;
  const double delta_meas = delta_t / 2.0;
  out.shots = bernoulli_shots(delta_meas, opt.constants);
  if (opt.ideal) {
    out.value = t;
    return out;
  }
  MeasurementModel model{(1.0 + t) / 2.0, MeasureMode::kBernoulli, static_cast<double>(n)};
  const Measurement m = measure_p0(model, delta_meas, seed, opt.threads, opt.constants);
  out.value = 2.0 * m.estimate - 1.0;
  return out;
}

BlockEncoding encode(const DensityMatrix& state, double delta, std::uint64_t seed, const EstimatorOptions& opt) {
  return encode_density(state, std::min(delta, 0.5), seed,
                        opt.ideal ? EncodingNoise::kNoiseless : EncodingNoise::kNoisy, opt.constants);
}

Prepared prepare(const DensityMatrix& rho, const EstimatorOptions& opt, std::uint64_t seed, bool need_rho_min,
                 bool need_purity) {
  Prepared p{opt.support_projection ? support_projection(rho) : rho, static_cast<int>(rho.dim()), {}};
  p.meta = p.state.meta();
  p.rho_min = p.meta.rho_min;
  p.rho_max = p.meta.rho_max;
  if (!opt.blind) return p;

  p.meta.rank = p.d;
  p.rho_max = 1.0;
  if (need_rho_min) {
    const double theta = opt.theta;
    const double delta = theta > 0.0 ? std::min(0.5, theta) : 1e-6;
    const BlockEncoding be = encode(p.state, delta, derive_seed(seed, 90), opt);
    const MinEigEstimate est = min_eig_estimate(be, theta, derive_seed(seed, static_cast<std::uint64_t>(Stream::kMinEig)));
    const double lower = est.scaled - theta - (opt.ideal ? 0.0 : be.eta());
    if (!(lower > 0.0)) {
      fail(ErrorCode::kDomain, "estimated lower bound on rho_min is " + format_value(4.0 * lower / std::numbers::pi) +
                                   "; decrease theta");
    }
    p.rho_min = std::min(1.0, lower / kPi4);
    p.meta.rho_min = p.rho_min;
    p.extra_cost += est.cost;
  }
  if (need_purity) {
    const double delta_pre = 1.0 / (4.0 * p.d);
    const TraceSample t =
        sample_trace_power(p.state, 2, delta_pre, derive_seed(seed, static_cast<std::uint64_t>(Stream::kPreliminary)), opt);
    p.meta.purity = std::clamp(t.value + 2.0 * delta_pre, 1.0 / p.d, 1.0);
    p.extra_shots += t.shots;
    p.extra_cost += 2.0 * t.shots;
  }
  return p;
}

EstimateReport base_report(const char* quantity, const char* method, const RegimeDecomposition& dec, double eps,
                           std::uint64_t seed, const EstimatorOptions& opt) {
  EstimateReport r;
  r.quantity = quantity;
  r.method = method;
  r.branch = dec.branch;
  r.alpha = dec.alpha;
  r.target_eps = eps;
  r.seed = seed;
  r.blind = opt.blind;
  return r;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1e6)) fail(ErrorCode::kInvalidArgument, "target accuracy must be positive, got " + format_value(eps));
}

// Ideal polynomials are tight relative to the smallest target value so the
// recovered trace keeps ~8 significant digits.
double ideal_eps(double power, double kappa, const EstimatorOptions& opt) {
  return opt.constants.ideal_poly_eps * std::pow(kappa, -power);
}

double measured(double p0, double delta_meas, std::uint64_t seed, const EstimatorOptions& opt,
                MeasureMode mode = MeasureMode::kBernoulli) {
  if (opt.ideal) return p0;
  return measure_p0(MeasurementModel{p0, mode, 1.0}, delta_meas, seed, opt.threads, opt.constants).estimate;
}

void finish(EstimateReport& r, const DensityMatrix& rho, const Prepared& p, double cost_per_shot, double input_copies,
            const EstimatorOptions& opt, double eps) {
  r.encoding_cost = cost_per_shot;
  r.sample_cost_total = r.shots_used * (cost_per_shot + input_copies) + p.extra_cost;
  r.shots_used += p.extra_shots;
  r.predicted_budget = predicted_samples(decompose_alpha(r.alpha), eps, p.meta, p.d, opt.vn_approach, opt.constants);
  r.exact_value = exact_entropies(rho, r.alpha).entropy;
}

void check_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    fail(ErrorCode::kNumeric, std::string(what) + " estimate " + format_value(v) +
                                  " is not positive, so its logarithm is undefined; increase the shot multiplier");
  }
}

}  // namespace

Measurement measure_p0(const MeasurementModel& model, double delta, std::uint64_t seed, int threads,
                       const Constants& k) {
  if (!(delta > 0.0 && delta < 1.0)) fail(ErrorCode::kInvalidArgument, "measurement accuracy must be in (0, 1)");
  const double p = std::clamp(model.p0, 0.0, 1.0);
  Measurement out;
  if (model.mode == MeasureMode::kAmplitudeEstimation) {
    out.queries = ae_queries(delta, k);
    auto rng = make_rng(seed, Stream::kAmplitude);
    std::uniform_real_distribution<double> u(-delta, delta);
    out.estimate = p + u(rng);
    return out;
  }

  out.queries = bernoulli_shots(delta, k);
  if (out.queries > 4.0e18) fail(ErrorCode::kCapacity, "shot count " + format_value(out.queries) + " exceeds the simulator range");
  const auto n = static_cast<std::int64_t>(out.queries);
  const std::int64_t batches = (n + kBatch - 1) / kBatch;
  std::vector<std::int64_t> hits(static_cast<std::size_t>(batches), 0);
  auto run = [&](std::int64_t first, std::int64_t stride) {
    for (std::int64_t b = first; b < batches; b += stride) {
      const std::int64_t size = std::min(kBatch, n - b * kBatch);
      auto rng = make_rng(seed, Stream::kShots, static_cast<std::uint64_t>(b));
      std::binomial_distribution<std::int64_t> draw(size, p);
      hits[static_cast<std::size_t>(b)] = draw(rng);
    }
  };
  const auto workers = static_cast<std::int64_t>(std::clamp<std::int64_t>(threads, 1, std::max<std::int64_t>(batches, 1)));
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::int64_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    for (auto& t : pool) t.join();
  }
  std::int64_t total = 0;
  for (auto h : hits) total += h;
  out.estimate = static_cast<double>(total) / static_cast<double>(n);
  return out;
}

double ideal_p0_case1(const DensityMatrix& rho, int k, double c) {
  const double alpha = 2.0 * k + 1.0 + c;
  return std::pow(kPi4, alpha - 1.0) * tr_power(rho, alpha);
}

double ideal_p0_case2(const DensityMatrix& rho, int k, double c) {
  if (!rho.full_rank()) {
    fail(ErrorCode::kDomain, "negative powers are undefined on a rank-deficient state; project onto the support first");
  }
  const double alpha = 2.0 * k + 1.0 + c;
  return 0.25 * std::pow(kPi4, 2.0 * k) * std::pow(rho.meta().rho_min, -c) * tr_power(rho, alpha);
}

double ideal_p0_sub_one(const DensityMatrix& rho, double alpha, int d) {
  return std::pow(std::numbers::pi, alpha) / (std::pow(4.0, alpha + 1.0) * d) * tr_power(rho, alpha);
}

EstimateReport renyi_integer(const DensityMatrix& rho, int alpha, double eps, std::uint64_t seed,
                             const EstimatorOptions& opt) {
  if (alpha < 2) fail(ErrorCode::kInvalidArgument, "integer protocol needs alpha >= 2, got " + std::to_string(alpha));
  check_eps(eps);
  const RegimeDecomposition dec = decompose_alpha(alpha);
  const Prepared p = prepare(rho, opt, seed, false, false);
  EstimateReport r = base_report("S_alpha", "hadamard_test", dec, eps, seed, opt);
  const Budget b = delta_budget(dec, eps, p.meta, false, opt.constants);
  r.delta = b.delta;
  r.delta_meas = b.delta / 2.0;

  const double t = tr_power(p.state, alpha);
  r.p0_realized = r.p0_closed_form = (1.0 + t) / 2.0;
  const TraceSample s = sample_trace_power(p.state, alpha, b.delta, derive_seed(seed, 1), opt);
  r.shots_used = s.shots;
  r.p0_hat = (1.0 + s.value) / 2.0;
  check_positive(s.value, "Tr rho^alpha");
  r.tr_estimate = s.value;
  r.estimate = std::log(s.value) / (1.0 - alpha);
  finish(r, rho, p, 0.0, alpha, opt, eps);
  return r;
}

EstimateReport renyi_case_odd(const DensityMatrix& rho, double alpha, double eps, std::uint64_t seed,
                              const EstimatorOptions& opt) {
  const RegimeDecomposition dec = decompose_alpha(alpha);
  if (dec.branch != Branch::kOddFloor)
    fail(ErrorCode::kInvalidArgument, "alpha = " + format_value(alpha) + " is not fractional with an odd floor");
  check_eps(eps);
  const Prepared p = prepare(rho, opt, seed, true, false);
  EstimateReport r = base_report("S_alpha", "qsvt_positive_power", dec, eps, seed, opt);
  const Budget b = delta_budget(dec, eps, p.meta, false, opt.constants);
  const double scale = 0.25 * std::pow(kPi4, alpha - 1.0);
  r.delta = b.delta;
  r.delta_meas = scale * b.delta;
  r.rho_min_used = p.rho_min;

  // Encoding errors: k factors at eta_t / (2k), the power stage at eta_t / 2.
  const double eta_t = r.delta_meas / 4.0;
  const double kappa = 1.0 / (kPi4 * p.rho_min);
  const double power = dec.c / 2.0;
  const double eps_p = opt.ideal ? ideal_eps(power, kappa, opt) : eta_t / 4.0;
  const PolyApprox poly = approx_pos_power(power, kappa, eps_p, opt.constants);
  r.poly_degree = poly.degree();

  BlockEncoding a = apply_poly(encode(p.state, poly.input_precision, derive_seed(seed, 100), opt), poly);
  for (int i = 1; i <= dec.k; ++i) {
    const double delta1 = eta_t / (2.0 * dec.k);
    a = be_product(encode(p.state, delta1, derive_seed(seed, 100 + static_cast<std::uint64_t>(i)), opt), a);
  }
  r.eta = a.eta();
  r.p0_realized = exact_prob(a.encoded(), p.state.matrix());
  r.p0_closed_form = 0.25 * ideal_p0_case1(p.state, dec.k, dec.c);
  r.p0_hat = measured(r.p0_realized, r.delta_meas, derive_seed(seed, 1), opt);
  r.shots_used = bernoulli_shots(r.delta_meas, opt.constants);
  check_positive(r.p0_hat, "p0");
  r.tr_estimate = r.p0_hat / scale;
  r.estimate = std::log(r.tr_estimate) / (1.0 - alpha);
  finish(r, rho, p, a.sample_cost(), 1.0, opt, eps);
  return r;
}

EstimateReport renyi_case_even(const DensityMatrix& rho, double alpha, double eps, std::uint64_t seed,
                               const EstimatorOptions& opt) {
  const RegimeDecomposition dec = decompose_alpha(alpha);
  if (dec.branch != Branch::kEvenFloor)
    fail(ErrorCode::kInvalidArgument, "alpha = " + format_value(alpha) + " is not fractional with an even floor");
  check_eps(eps);
  const Prepared p = prepare(rho, opt, seed, true, false);
  EstimateReport r = base_report("S_alpha", "qsvt_negative_power", dec, eps, seed, opt);
  const Budget b = delta_budget(dec, eps, p.meta, false, opt.constants);
  const double m = p.rho_min;
  const double scale = 0.25 * std::pow(kPi4, 2.0 * dec.k) * std::pow(m, -dec.c);
  r.delta = b.delta;
  r.delta_meas = scale * b.delta;
  r.rho_min_used = m;
  r.rho_min_sensitivity = dec.c / ((1.0 - alpha) * m);

  // On pi rho / 4 with kappa = 4 / (pi m) the transform gives (rho / m)^(c/2) / 2.
  const double eta_t = r.delta_meas / 4.0;
  const double kappa = 1.0 / (kPi4 * m);
  const double power = -dec.c / 2.0;
  const double eps_p = opt.ideal ? ideal_eps(power, kappa, opt) : eta_t / 4.0;
  const PolyApprox poly = approx_neg_power(power, kappa, eps_p, opt.constants);
  r.poly_degree = poly.degree();

  BlockEncoding a = apply_poly(encode(p.state, poly.input_precision, derive_seed(seed, 100), opt), poly);
  for (int i = 1; i <= dec.k; ++i) {
    const double delta1 = eta_t / (2.0 * dec.k);
    a = be_product(encode(p.state, delta1, derive_seed(seed, 100 + static_cast<std::uint64_t>(i)), opt), a);
  }
  r.eta = a.eta();
  r.p0_realized = exact_prob(a.encoded(), p.state.matrix());
  r.p0_closed_form = 0.25 * std::pow(kPi4, 2.0 * dec.k) * std::pow(m, -dec.c) * tr_power(p.state, alpha);
  r.p0_hat = measured(r.p0_realized, r.delta_meas, derive_seed(seed, 1), opt);
  r.shots_used = bernoulli_shots(r.delta_meas, opt.constants);
  check_positive(r.p0_hat, "p0");
  r.tr_estimate = r.p0_hat / scale;
  r.estimate = std::log(r.tr_estimate) / (1.0 - alpha);
  finish(r, rho, p, a.sample_cost(), 1.0, opt, eps);
  return r;
}

EstimateReport renyi_sub_one(const DensityMatrix& rho, double alpha, double eps, std::uint64_t seed,
                             const EstimatorOptions& opt) {
  const RegimeDecomposition dec = decompose_alpha(alpha);
  if (dec.branch != Branch::kSubOne) fail(ErrorCode::kInvalidArgument, "alpha = " + format_value(alpha) + " is not in (0, 1)");
  check_eps(eps);
  const bool ae = opt.sub_one_method == SubOneMethod::kAmplitudeEstimation;
  const int d = static_cast<int>(rho.dim());
  if (ae && (d & (d - 1)) != 0) {
    fail(ErrorCode::kInvalidArgument,
         "amplitude estimation needs the maximally entangled purification, so d must be a power of 2 (d = " +
             std::to_string(d) + ")");
  }
  const Prepared p = prepare(rho, opt, seed, true, true);
  EstimateReport r = base_report("S_alpha", ae ? "qsvt_amplitude_estimation" : "qsvt_sampling", dec, eps, seed, opt);
  const Budget b = delta_budget(dec, eps, p.meta, ae, opt.constants);
  const double scale = ae ? std::pow(kPi4, alpha) / (2.0 * d) : std::pow(kPi4, alpha) / (4.0 * d);
  r.delta = b.delta;
  r.delta_meas = scale * b.delta;
  r.rho_min_used = p.rho_min;

  const double eta_t = r.delta_meas / 4.0;
  const double kappa = 1.0 / (kPi4 * p.rho_min);
  const double power = ae ? alpha : alpha / 2.0;
  const double eps_p = opt.ideal ? ideal_eps(power, kappa, opt) : eta_t / 4.0;
  const PolyApprox poly = approx_pos_power(power, kappa, eps_p, opt.constants);
  r.poly_degree = poly.degree();
  const BlockEncoding a = apply_poly(encode(p.state, poly.input_precision, derive_seed(seed, 100), opt), poly);
  r.eta = a.eta();

  const std::size_t n = p.state.dim();
  if (ae) {
    // <Phi| (A (+) 0) (x) I |Phi> on the purification of I/d.
    const Purification phi = purify_maximally_mixed(d);
    const auto dd = static_cast<std::size_t>(d);
    Complex q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t anc = 0; anc < dd; ++anc)
          q += std::conj(phi.state[i * dd + anc]) * a.encoded()(i, j) * phi.state[j * dd + anc];
    r.p0_realized = q.real();
    r.p0_closed_form = 0.5 * std::pow(kPi4, alpha) * tr_power(p.state, alpha) / d;
    r.p0_hat = measured(r.p0_realized, r.delta_meas, derive_seed(seed, 1), opt, MeasureMode::kAmplitudeEstimation);
    r.shots_used = ae_queries(r.delta_meas, opt.constants);
  } else {
    // sigma = I/d restricted to the (projected) support.
    const CMatrix sigma = CMatrix::identity(n) * Complex(1.0 / d);
    r.p0_realized = exact_prob(a.encoded(), sigma);
    r.p0_closed_form = ideal_p0_sub_one(p.state, alpha, d);
    r.p0_hat = measured(r.p0_realized, r.delta_meas, derive_seed(seed, 1), opt);
    r.shots_used = bernoulli_shots(r.delta_meas, opt.constants);
  }
  check_positive(r.p0_hat, "p0");
  r.tr_estimate = r.p0_hat / scale;
  r.estimate = std::log(r.tr_estimate) / (1.0 - alpha);
  finish(r, rho, p, a.sample_cost(), 0.0, opt, eps);
  return r;
}

EstimateReport vn_qsvt(const DensityMatrix& rho, double eps, std::uint64_t seed, const EstimatorOptions& opt) {
  check_eps(eps);
  const RegimeDecomposition dec = decompose_alpha(1.0);
  const Prepared p = prepare(rho, opt, seed, true, false);
  EstimateReport r = base_report("S_v", "qsvt_log", dec, eps, seed, opt);
  const double m = p.rho_min;
  const double beta = kPi4 * m;
  const double gamma = 1.0 / (2.0 * std::log(1.0 / beta));
  const double kappa_s = 1.0 / (gamma * std::log(1.0 / (kPi4 * p.rho_max)));
  r.rho_min_used = m;
  r.delta = eps / 2.0;
  r.delta_meas = gamma / 4.0 * eps / 2.0;

  // Bias budget gamma eps / 32 on the final block: half to each stage.
  const double lip_sqrt = 0.25 * std::sqrt(kappa_s);
  const double lip_log = 1.0 / (2.0 * std::log(1.0 / beta) * beta);
  const double eps_sqrt = opt.ideal ? opt.constants.ideal_poly_eps : gamma * eps / 64.0;
  const double eps_log = opt.ideal ? opt.constants.ideal_poly_eps : gamma * eps / (128.0 * lip_sqrt);
  const PolyApprox plog = approx_log(beta, std::min(eps_log, 0.5), opt.constants);
  const PolyApprox psqrt = approx_pos_power(0.5, kappa_s, eps_sqrt, opt.constants);
  r.poly_degree = plog.degree() + psqrt.degree();

  // Input precision of the square-root stage, pulled back through the log stage.
  const double needed = psqrt.input_precision;
  const double deg = std::max(1, plog.degree());
  const double delta0 = std::min({0.5, std::pow(needed / (4.0 * deg), 2), eps_log / (2.0 * lip_log)});
  const BlockEncoding lg = apply_poly(encode(p.state, delta0, derive_seed(seed, 100), opt), plog);
  const BlockEncoding a = apply_poly(lg, psqrt);
  r.eta = a.eta();

  const double sv_state = exact_entropies(p.state, 1.0).entropy;
  const double offset = std::log(1.0 / kPi4);
  r.p0_realized = exact_prob(a.encoded(), p.state.matrix());
  r.p0_closed_form = gamma / 4.0 * (offset + sv_state);
  r.p0_hat = measured(r.p0_realized, r.delta_meas, derive_seed(seed, 1), opt);
  r.shots_used = bernoulli_shots(r.delta_meas, opt.constants);
  const double tol = opt.ideal ? 1e-6 : eps;
  if (r.p0_hat < gamma / 4.0 * (offset - tol)) {
    fail(ErrorCode::kNumeric, "measured p0 " + format_value(r.p0_hat) + " implies a negative entropy beyond tolerance");
  }
  r.estimate = 4.0 * r.p0_hat / gamma - offset;
  finish(r, rho, p, a.sample_cost(), 1.0, opt, eps);
  return r;
}

EstimateReport vn_poly(const DensityMatrix& rho, double eps, std::uint64_t seed, const EstimatorOptions& opt) {
  check_eps(eps);
  const RegimeDecomposition dec = decompose_alpha(1.0);
  EstimatorOptions o = opt;
  o.vn_approach = VnApproach::kPoly;
  const Prepared p = prepare(rho, o, seed, true, false);
  EstimateReport r = base_report("S_v", "poly_expansion", dec, eps, seed, o);
  const double beta = std::min(p.rho_min, 0.5);
  r.rho_min_used = p.rho_min;
  // Half of eps to the expansion, half to the trace estimates.
  const double scale = 2.0 * std::log(1.0 / beta);
  const PolyApprox poly = approx_log(beta, std::min(0.5, eps / 2.0 / scale), o.constants);
  const MonomialPoly mono = to_monomial(poly, o.constants);
  r.poly_degree = poly.degree();
  const double weight = mono.abs_sum(1);
  r.delta = weight > 0.0 ? eps / 2.0 / weight : eps / 2.0;
  r.delta_meas = r.delta / 2.0;

  double total = mono.coeffs[0];  // Tr rho = 1
  double ledger = 0.0;
  double shots = 0.0;
  for (std::size_t i = 1; i < mono.coeffs.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const TraceSample s = sample_trace_power(p.state, n, r.delta, derive_seed(seed, 1000 + i), o);
    total += mono.coeffs[i] * s.value;
    shots += s.shots;
    ledger += s.shots * n;
  }
  r.estimate = total;
  r.shots_used = shots;
  finish(r, rho, p, 0.0, 0.0, o, eps);
  r.sample_cost_total = ledger + p.extra_cost;
  r.encoding_cost = 0.0;
  return r;
}

EstimateReport estimate_entropy(const DensityMatrix& rho, double alpha, double eps, std::uint64_t seed,
                                const EstimatorOptions& opt) {
  const RegimeDecomposition dec = decompose_alpha(alpha);
  switch (dec.branch) {
    case Branch::kInteger:
      return renyi_integer(rho, static_cast<int>(alpha), eps, seed, opt);
    case Branch::kOddFloor:
      return renyi_case_odd(rho, alpha, eps, seed, opt);
    case Branch::kEvenFloor:
      return renyi_case_even(rho, alpha, eps, seed, opt);
    case Branch::kSubOne:
      return renyi_sub_one(rho, alpha, eps, seed, opt);
    case Branch::kVonNeumann:
      return opt.vn_approach == VnApproach::kQsvt ? vn_qsvt(rho, eps, seed, opt) : vn_poly(rho, eps, seed, opt);
  }
  fail(ErrorCode::kInvalidArgument, "unknown branch");
}

MinEigEstimate min_eig_estimate(const BlockEncoding& be, double theta, std::uint64_t seed) {
  if (!(theta >= 0.0 && theta < 1.0)) fail(ErrorCode::kInvalidArgument, "theta must be in [0, 1)");
  const CMatrix& a = be.encoded();
  CMatrix sym(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) sym(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  const Spectrum s = hermitian_eig(HermMatrix(sym));
  const double floor = be.eta() + Tolerances::rank_cutoff;
  double smallest = -1.0;
  for (double v : s.eigenvalues)
    if (v > floor) smallest = v;
  if (smallest < 0.0) fail(ErrorCode::kDomain, "no eigenvalue of the block rises above its noise floor");

  MinEigEstimate out;
  double noise = 0.0;
  if (theta > 0.0) {
    auto rng = make_rng(seed, Stream::kMinEig);
    std::uniform_real_distribution<double> u(-theta, theta);
    noise = u(rng);
    out.cost = be.sample_cost() / theta * (std::log(1.0 / theta) + 0.5 * std::log(static_cast<double>(a.dim())));
  }
  out.scaled = std::max(smallest + noise, Tolerances::rank_cutoff);
  out.rho_min = out.scaled / kPi4;
  return out;
}

}  // namespace entropybench
