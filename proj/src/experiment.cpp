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

#include "entropybench/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "entropybench/error.hpp"
#include "entropybench/rng.hpp"

namespace entropybench {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const std::string t = trim(v);
  auto res = std::from_chars(t.data(), t.data() + t.size(), out);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
    fail(ErrorCode::kInvalidArgument, key + ": cannot parse '" + v + "' as a number");
  return out;
}

long long to_int(const std::string& key, const std::string& v) {
  long long out = 0;
  const std::string t = trim(v);
  auto res = std::from_chars(t.data(), t.data() + t.size(), out);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
    fail(ErrorCode::kInvalidArgument, key + ": cannot parse '" + v + "' as an integer");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
  if (t == "0" || t == "false" || t == "no" || t == "off") return false;
  fail(ErrorCode::kInvalidArgument, key + ": expected a boolean, got '" + v + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
  return out;
}

double log_unit(const ExperimentConfig& cfg) { return cfg.log_base == "2" ? std::numbers::ln2 : 1.0; }

EstimatorOptions options_for(const ExperimentConfig& cfg) {
  EstimatorOptions opt;
  opt.ideal = cfg.ideal;
  opt.blind = cfg.blind;
  opt.support_projection = cfg.support_projection;
  opt.sub_one_method = cfg.method == "ae" ? SubOneMethod::kAmplitudeEstimation : SubOneMethod::kSampling;
  opt.vn_approach = cfg.approach == "poly" ? VnApproach::kPoly : VnApproach::kQsvt;
  opt.theta = cfg.theta;
  opt.threads = cfg.threads;
  opt.constants.shots_multiplier = cfg.c_shots;
  return opt;
}

DensityMatrix make_state(const ExperimentConfig& cfg, int rank) {
  if (!cfg.spectrum.empty()) return from_spectrum(cfg.spectrum, cfg.dim);
  return random_density(cfg.dim, rank, cfg.seed);
}

struct Runner {
  std::vector<CsvRow> rows;
  int errors = 0;
  std::vector<std::string> error_messages;
  double ratio_sum = 0.0;
  int ratio_count = 0;

  // Runs one estimate; eps is in reporting units.
  void run(const DensityMatrix& rho, double alpha, double eps, double unit, std::uint64_t seed,
           const EstimatorOptions& opt) {
    CsvRow row;
    row.seed = seed;
    row.alpha = alpha;
    row.d = static_cast<int>(rho.dim());
    row.rank = rho.meta().rank;
    row.eps = eps;
    const RegimeDecomposition dec = decompose_alpha(alpha);
    row.branch = branch_name(dec.branch);
    row.exact = exact_entropies(rho, alpha).entropy / unit;
    try {
      const EstimateReport r = estimate_entropy(rho, alpha, eps * unit, seed, opt);
      row.delta = r.delta;
      row.method = r.method;
      row.shots = r.shots_used;
      row.ledger_samples = r.sample_cost_total;
      row.predicted_samples = r.predicted_budget;
      row.estimate = r.estimate / unit;
      row.abs_err = std::abs(row.estimate - row.exact);
      row.pass = row.abs_err <= eps;
      if (r.predicted_budget > 0.0) {
        ratio_sum += std::log10(r.sample_cost_total / r.predicted_budget);
        ++ratio_count;
      }
    } catch (const Error& e) {
      row.method = "error";
      row.estimate = std::nan("");
      row.abs_err = std::nan("");
      row.pass = false;
      ++errors;
      if (error_messages.size() < 5) error_messages.push_back(e.what());
    }
    rows.push_back(row);
  }

  double coverage() const {
    if (rows.empty()) return 0.0;
    const auto n = std::count_if(rows.begin(), rows.end(), [](const CsvRow& r) { return r.pass; });
    return static_cast<double>(n) / static_cast<double>(rows.size());
  }
};

std::string render_csv(const std::vector<CsvRow>& rows) {
  std::string out = csv_header();
  for (const auto& r : rows) out += csv_line(r);
  return out;
}

void summary_common(std::ostringstream& os, const Runner& run) {
  os << "rows: " << run.rows.size() << "\n";
  os << "coverage (abs_err <= eps): " << run.coverage() << "\n";
  if (run.ratio_count > 0)
    os << "mean log10(ledger / predicted): " << run.ratio_sum / run.ratio_count << "\n";
  if (run.errors > 0) {
    os << "failed runs: " << run.errors << "\n";
    for (const auto& m : run.error_messages) os << "  " << m << "\n";
  }
}

ExperimentResult run_single(const ExperimentConfig& cfg) {
  const double alpha = cfg.mode == "vonneumann" ? 1.0 : cfg.alpha;
  const DensityMatrix rho = make_state(cfg, cfg.rank);
  const EstimatorOptions opt = options_for(cfg);
  Runner run;
  for (int t = 0; t < cfg.trials; ++t)
    run.run(rho, alpha, cfg.eps, log_unit(cfg), derive_seed(cfg.seed, static_cast<std::uint64_t>(t) + 1), opt);

  ExperimentResult res;
  res.coverage = run.coverage();
  std::ostringstream os;
  const RegimeDecomposition dec = decompose_alpha(alpha);
  os << "mode: " << cfg.mode << "  alpha: " << alpha << "  branch: " << branch_name(dec.branch) << "\n";
  os << "state: d=" << rho.dim() << " rank=" << rho.meta().rank << " rho_min=" << rho.meta().rho_min << "\n";
  summary_common(os, run);
  os << "predicted formula: " << formula_tag(dec, opt.vn_approach) << "\n";
  os << "baselines: " << baseline_formulas(dec) << "\n";
  res.summary = os.str();
  res.rows = std::move(run.rows);
  res.csv = render_csv(res.rows);
  return res;
}

ExperimentResult run_sweep(const ExperimentConfig& cfg) {
  const double alpha = cfg.alpha;
  const EstimatorOptions opt = options_for(cfg);
  Runner run;
  std::vector<double> xs, shots, ledger, predicted;
  for (std::size_t g = 0; g < cfg.grid.size(); ++g) {
    const double v = cfg.grid[g];
    const double eps = cfg.var == "eps" ? v : cfg.eps;
    const int rank = cfg.var == "rank" ? static_cast<int>(v) : cfg.rank;
    const DensityMatrix rho = make_state(cfg, rank);
    const std::size_t first = run.rows.size();
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, g * 1000003ULL + static_cast<std::uint64_t>(t) + 1);
      run.run(rho, alpha, eps, log_unit(cfg), s, opt);
    }
    double sh = 0.0, led = 0.0, pred = 0.0;
    int n = 0;
    for (std::size_t i = first; i < run.rows.size(); ++i) {
      if (run.rows[i].method == "error") continue;
      sh += run.rows[i].shots;
      led += run.rows[i].ledger_samples;
      pred += run.rows[i].predicted_samples;
      ++n;
    }
    if (n == 0) continue;
    xs.push_back(cfg.var == "eps" ? std::log(1.0 / v) : std::log(v));
    shots.push_back(std::log(sh / n));
    ledger.push_back(std::log(led / n));
    predicted.push_back(std::log(pred / n));
  }

  ExperimentResult res;
  res.coverage = run.coverage();
  std::ostringstream os;
  const RegimeDecomposition dec = decompose_alpha(alpha);
  os << "sweep over " << cfg.var << "  alpha: " << alpha << "  branch: " << branch_name(dec.branch) << "\n";
  summary_common(os, run);
  const std::string axis = cfg.var == "eps" ? "log(1/eps)" : "log(rank)";
  const Slope s_shots = fit_slope(xs, shots);
  const Slope s_ledger = fit_slope(xs, ledger);
  const Slope s_pred = fit_slope(xs, predicted);
  os << "slope log(shots) vs " << axis << ": " << s_shots.value << " +- " << s_shots.stderr_ << "\n";
  os << "slope log(ledger_samples) vs " << axis << ": " << s_ledger.value << " +- " << s_ledger.stderr_ << "\n";
  os << "slope log(predicted_samples) vs " << axis << ": " << s_pred.value << " (" << formula_tag(dec, opt.vn_approach)
     << ")\n";
  os << "baselines: " << baseline_formulas(dec) << "\n";
  res.slopes = {s_shots, s_ledger, s_pred};
  res.summary = os.str();
  res.rows = std::move(run.rows);
  res.csv = render_csv(res.rows);
  return res;
}

ExperimentResult run_validate(const ExperimentConfig& cfg) {
  const double unit = log_unit(cfg);
  Runner run;
  std::uint64_t counter = 0;
  auto next_seed = [&] { return derive_seed(cfg.seed, ++counter); };

  // Ideal fixtures: formula correctness without statistics.
  const std::vector<DensityMatrix> fixtures = {
      from_spectrum({1.0}, 4),
      from_spectrum({0.25, 0.25, 0.25, 0.25}, 4),
      from_spectrum({0.5, 0.3, 0.2}, 8),
  };
  const std::vector<double> alphas = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.5, 5.6, 6.4};
  EstimatorOptions ideal = options_for(cfg);
  ideal.ideal = true;
  ideal.blind = false;
  const double ideal_eps = 1e-3;
  for (const auto& rho : fixtures) {
    for (double a : alphas) {
      if (a == 1.0) {
        EstimatorOptions o = ideal;
        o.vn_approach = VnApproach::kQsvt;
        run.run(rho, a, ideal_eps, unit, next_seed(), o);
        o.vn_approach = VnApproach::kPoly;
        run.run(rho, a, ideal_eps, unit, next_seed(), o);
      } else {
        run.run(rho, a, ideal_eps, unit, next_seed(), ideal);
      }
    }
  }
  const std::size_t ideal_rows = run.rows.size();

  // Statistical runs on diag(0.5, 0.3, 0.2) in d = 8.
  EstimatorOptions noisy = options_for(cfg);
  noisy.ideal = false;
  const DensityMatrix rho = fixtures[2];
  const int trials = cfg.quick ? 20 : 100;
  const double eps = 0.05;
  for (double a : {2.0, 1.5}) {
    for (int t = 0; t < trials; ++t) run.run(rho, a, eps, unit, next_seed(), noisy);
  }
  for (VnApproach ap : {VnApproach::kQsvt, VnApproach::kPoly}) {
    EstimatorOptions o = noisy;
    o.vn_approach = ap;
    for (int t = 0; t < trials; ++t) run.run(rho, 1.0, eps, unit, next_seed(), o);
  }

  ExperimentResult res;
  res.coverage = run.coverage();
  res.exit_code = res.coverage < 0.9 ? 2 : 0;
  std::ostringstream os;
  const auto ideal_pass = std::count_if(run.rows.begin(), run.rows.begin() + static_cast<std::ptrdiff_t>(ideal_rows),
                                        [](const CsvRow& r) { return r.pass; });
  os << "validate" << (cfg.quick ? " (quick)" : "") << "\n";
  os << "ideal fixtures: " << ideal_pass << "/" << ideal_rows << " within " << ideal_eps << "\n";
  os << "statistical runs: " << trials << " trials x 4 estimators at eps " << eps << "\n";
  summary_common(os, run);
  os << (res.exit_code == 0 ? "PASS" : "FAIL: coverage below 0.9") << "\n";
  res.summary = os.str();
  res.rows = std::move(run.rows);
  res.csv = render_csv(res.rows);
  return res;
}

}  // namespace

void config_set(ExperimentConfig& cfg, const std::string& raw_key, const std::string& value) {
  const std::string key = trim(raw_key);
  const std::string v = trim(value);
  if (key == "mode") cfg.mode = v;
  else if (key == "alpha") cfg.alpha = to_double(key, v);
  else if (key == "dim") cfg.dim = static_cast<int>(to_int(key, v));
  else if (key == "rank") cfg.rank = static_cast<int>(to_int(key, v));
  else if (key == "spectrum") cfg.spectrum = v.empty() ? std::vector<double>{} : to_list(key, v);
  else if (key == "eps") cfg.eps = to_double(key, v);
  else if (key == "method") cfg.method = v;
  else if (key == "approach") cfg.approach = v;
  else if (key == "trials") cfg.trials = static_cast<int>(to_int(key, v));
  else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_int(key, v));
  else if (key == "log_base") cfg.log_base = v;
  else if (key == "ideal") cfg.ideal = to_bool(key, v);
  else if (key == "blind") cfg.blind = to_bool(key, v);
  else if (key == "support_projection") cfg.support_projection = to_bool(key, v);
  else if (key == "quick") cfg.quick = to_bool(key, v);
  else if (key == "var") cfg.var = v;
  else if (key == "grid") cfg.grid = to_list(key, v);
  else if (key == "out") cfg.out = v;
  else if (key == "theta") cfg.theta = to_double(key, v);
  else if (key == "threads") cfg.threads = static_cast<int>(to_int(key, v));
  else if (key == "c_shots") cfg.c_shots = to_double(key, v);
  else fail(ErrorCode::kInvalidArgument, "unknown config key '" + key + "'");
}

void config_load(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open config '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::kInvalidArgument, path + ":" + std::to_string(lineno) + ": expected key = value");
    config_set(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
}

void config_validate(const ExperimentConfig& cfg) {
  std::vector<std::string> bad;
  static const std::set<std::string> modes = {"renyi", "vonneumann", "sweep", "validate"};
  if (!modes.count(cfg.mode)) bad.push_back("mode must be renyi, vonneumann, sweep or validate");
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) bad.push_back("alpha must be positive");
  if (cfg.dim < 1 || cfg.dim > static_cast<int>(Tolerances::max_dim)) bad.push_back("dim must be in [1, 64]");
  if (cfg.spectrum.empty() && (cfg.rank < 1 || cfg.rank > cfg.dim)) bad.push_back("rank must be in [1, dim]");
  if (cfg.spectrum.size() > static_cast<std::size_t>(std::max(cfg.dim, 0))) bad.push_back("spectrum longer than dim");
  if (!(cfg.eps > 0.0)) bad.push_back("eps must be positive");
  if (cfg.method != "sampling" && cfg.method != "ae") bad.push_back("method must be sampling or ae");
  if (cfg.approach != "qsvt" && cfg.approach != "poly") bad.push_back("approach must be qsvt or poly");
  if (cfg.trials < 1) bad.push_back("trials must be >= 1");
  if (cfg.log_base != "e" && cfg.log_base != "2") bad.push_back("log_base must be e or 2");
  if (!(cfg.theta >= 0.0 && cfg.theta < 1.0)) bad.push_back("theta must be in [0, 1)");
  if (cfg.threads < 1) bad.push_back("threads must be >= 1");
  if (!(cfg.c_shots > 0.0)) bad.push_back("c_shots must be positive");
  if (cfg.mode == "sweep") {
    if (cfg.var != "eps" && cfg.var != "rank") bad.push_back("var must be eps or rank");
    std::set<double> distinct(cfg.grid.begin(), cfg.grid.end());
    if (distinct.size() < 3) bad.push_back("grid needs at least 3 distinct points");
    for (double g : cfg.grid) {
      if (cfg.var == "eps" && !(g > 0.0)) bad.push_back("grid eps values must be positive");
      if (cfg.var == "rank" && (g < 1 || g > cfg.dim || g != std::floor(g)))
        bad.push_back("grid rank values must be integers in [1, dim]");
    }
    if (cfg.var == "rank" && !cfg.spectrum.empty()) bad.push_back("rank sweep cannot use an explicit spectrum");
  }
  if (bad.empty()) return;
  std::string msg = "invalid configuration:";
  for (const auto& b : bad) msg += "\n  " + b;
  fail(ErrorCode::kInvalidArgument, msg);
}

std::string csv_header() {
  return "seed,alpha,branch,d,rank,eps,delta,method,shots,ledger_samples,predicted_samples,estimate,exact,abs_err,pass\n";
}

std::string csv_line(const CsvRow& r) {
  std::string out;
  out += std::to_string(r.seed) + ',' + format_double(r.alpha) + ',' + r.branch + ',' + std::to_string(r.d) + ',' +
         std::to_string(r.rank) + ',' + format_double(r.eps) + ',' + format_double(r.delta) + ',' + r.method + ',' +
         format_double(r.shots) + ',' + format_double(r.ledger_samples) + ',' + format_double(r.predicted_samples) +
         ',' + format_double(r.estimate) + ',' + format_double(r.exact) + ',' + format_double(r.abs_err) + ',' +
         (r.pass ? "1" : "0") + '\n';
  return out;
}

Slope fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size(), "slope fit needs paired samples");
  std::set<double> distinct(x.begin(), x.end());
  if (distinct.size() < 3) fail(ErrorCode::kInvalidArgument, "slope fit needs at least 3 distinct grid points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  Slope s;
  s.value = sxy / sxx;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - my - s.value * (x[i] - mx);
    rss += e * e;
  }
  s.stderr_ = std::sqrt(rss / (n - 2.0) / sxx);
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  config_validate(cfg);
  if (cfg.mode == "sweep") return run_sweep(cfg);
  if (cfg.mode == "validate") return run_validate(cfg);
  return run_single(cfg);
}

}  // namespace entropybench
