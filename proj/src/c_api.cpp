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

#include "entropybench/entropybench.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "entropybench/accountant.hpp"
#include "entropybench/error.hpp"
#include "entropybench/estimators.hpp"
#include "entropybench/experiment.hpp"
#include "entropybench/qsvtpoly.hpp"
#include "entropybench/states.hpp"

struct eb_density {
  entropybench::DensityMatrix rho;
};
struct eb_poly {
  entropybench::PolyApprox p;
};
struct eb_config {
  entropybench::ExperimentConfig cfg;
};
struct eb_experiment_result {
  entropybench::ExperimentResult res;
};

namespace {

using namespace entropybench;

thread_local std::string g_last_error;

eb_status set_error(eb_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
eb_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return EB_OK;
  } catch (const Error& e) {
    return set_error(static_cast<eb_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(EB_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(EB_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(EB_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) fail(ErrorCode::kInvalidArgument, std::string(name) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

StateMeta to_meta(const eb_state_meta* m) {
  need(m, "meta");
  StateMeta out;
  out.rank = m->rank;
  out.rho_min = m->rho_min;
  out.rho_max = m->rho_max;
  out.purity = m->purity;
  return out;
}

eb_state_meta from_meta(const StateMeta& m) { return eb_state_meta{m.rank, m.rho_min, m.rho_max, m.purity}; }

}  // namespace

extern "C" {

const char* eb_version(void) { return "1.0.0"; }

const char* eb_last_error(void) { return g_last_error.c_str(); }

void eb_string_free(char* s) { std::free(s); }

eb_status eb_density_random(int d, int rank, uint64_t seed, eb_density** out) {
  return guard([&] {
    need(out, "out");
    *out = new eb_density{random_density(d, rank, seed)};
  });
}

eb_status eb_density_from_spectrum(const double* eigs, size_t n, int d, eb_density** out) {
  return guard([&] {
    need(out, "out");
    need(eigs, "eigs");
    *out = new eb_density{from_spectrum(std::vector<double>(eigs, eigs + n), d)};
  });
}

eb_status eb_density_from_text(const char* text, eb_density** out) {
  return guard([&] {
    need(out, "out");
    need(text, "text");
    *out = new eb_density{density_from_text(text)};
  });
}

eb_status eb_density_load(const char* path, eb_density** out) {
  return guard([&] {
    need(out, "out");
    need(path, "path");
    *out = new eb_density{load_density(path)};
  });
}

eb_status eb_density_save(const eb_density* rho, const char* path) {
  return guard([&] {
    need(rho, "rho");
    need(path, "path");
    save_density(rho->rho, path);
  });
}

eb_status eb_density_to_text(const eb_density* rho, char** out) {
  return guard([&] {
    need(rho, "rho");
    need(out, "out");
    *out = dup_string(density_to_text(rho->rho));
  });
}

eb_status eb_density_dim(const eb_density* rho, int* out) {
  return guard([&] {
    need(rho, "rho");
    need(out, "out");
    *out = static_cast<int>(rho->rho.dim());
  });
}

eb_status eb_density_meta(const eb_density* rho, eb_state_meta* out) {
  return guard([&] {
    need(rho, "rho");
    need(out, "out");
    *out = from_meta(rho->rho.meta());
  });
}

void eb_density_free(eb_density* rho) { delete rho; }

eb_status eb_exact_entropy(const eb_density* rho, double alpha, double* tr_pow, double* entropy) {
  return guard([&] {
    need(rho, "rho");
    const ExactEntropy e = exact_entropies(rho->rho, alpha);
    if (tr_pow) *tr_pow = e.tr_pow;
    if (entropy) *entropy = e.entropy;
  });
}

eb_status eb_decompose_alpha(double alpha, eb_regime* out) {
  return guard([&] {
    need(out, "out");
    const RegimeDecomposition r = decompose_alpha(alpha);
    *out = eb_regime{r.alpha, r.k, r.c, static_cast<eb_branch>(static_cast<int>(r.branch))};
  });
}

eb_status eb_delta_budget(double alpha, double eps, const eb_state_meta* meta, int amplitude, eb_budget* out) {
  return guard([&] {
    need(out, "out");
    const Budget b = delta_budget(decompose_alpha(alpha), eps, to_meta(meta), amplitude != 0);
    *out = eb_budget{b.delta, b.shots, b.predicted_samples};
  });
}

eb_status eb_predicted_samples(double alpha, double eps, const eb_state_meta* meta, int d, eb_vn_approach approach,
                               double* out) {
  return guard([&] {
    need(out, "out");
    *out = predicted_samples(decompose_alpha(alpha), eps, to_meta(meta), d,
                             approach == EB_VN_POLY ? VnApproach::kPoly : VnApproach::kQsvt);
  });
}

eb_status eb_propagate_entropy_error(double delta, double alpha, const eb_state_meta* meta, double* out) {
  return guard([&] {
    need(out, "out");
    *out = propagate_entropy_error(delta, alpha, to_meta(meta));
  });
}

void eb_estimate_options_init(eb_estimate_options* opt) {
  if (opt == nullptr) return;
  const EstimatorOptions d;
  opt->ideal = d.ideal;
  opt->blind = d.blind;
  opt->support_projection = d.support_projection;
  opt->sub_one_method = EB_SUB_ONE_SAMPLING;
  opt->vn_approach = EB_VN_QSVT;
  opt->theta = d.theta;
  opt->threads = d.threads;
  opt->shots_multiplier = d.constants.shots_multiplier;
}

eb_status eb_estimate(const eb_density* rho, double alpha, double eps, uint64_t seed, const eb_estimate_options* opt,
                      eb_estimate_report* out) {
  return guard([&] {
    need(rho, "rho");
    need(out, "out");
    eb_estimate_options o;
    eb_estimate_options_init(&o);
    if (opt) o = *opt;
    EstimatorOptions e;
    e.ideal = o.ideal != 0;
    e.blind = o.blind != 0;
    e.support_projection = o.support_projection != 0;
    e.sub_one_method = o.sub_one_method == EB_SUB_ONE_AE ? SubOneMethod::kAmplitudeEstimation : SubOneMethod::kSampling;
    e.vn_approach = o.vn_approach == EB_VN_POLY ? VnApproach::kPoly : VnApproach::kQsvt;
    e.theta = o.theta;
    e.threads = o.threads;
    e.constants.shots_multiplier = o.shots_multiplier;
    const EstimateReport r = estimate_entropy(rho->rho, alpha, eps, seed, e);

    eb_estimate_report rep{};
    rep.branch = static_cast<eb_branch>(static_cast<int>(r.branch));
    std::strncpy(rep.method, r.method.c_str(), sizeof(rep.method) - 1);
    rep.alpha = r.alpha;
    rep.estimate = r.estimate;
    rep.tr_estimate = r.tr_estimate;
    rep.target_eps = r.target_eps;
    rep.delta = r.delta;
    rep.delta_meas = r.delta_meas;
    rep.p0_hat = r.p0_hat;
    rep.p0_realized = r.p0_realized;
    rep.p0_closed_form = r.p0_closed_form;
    rep.eta = r.eta;
    rep.shots_used = r.shots_used;
    rep.encoding_cost = r.encoding_cost;
    rep.sample_cost_total = r.sample_cost_total;
    rep.predicted_budget = r.predicted_budget;
    rep.rho_min_used = r.rho_min_used;
    rep.rho_min_sensitivity = r.rho_min_sensitivity;
    rep.poly_degree = r.poly_degree;
    rep.has_exact = r.exact_value.has_value() ? 1 : 0;
    rep.exact_value = r.exact_value.value_or(0.0);
    rep.seed = r.seed;
    *out = rep;
  });
}

eb_status eb_poly_approx_log(double beta, double eps, eb_poly** out) {
  return guard([&] {
    need(out, "out");
    *out = new eb_poly{approx_log(beta, eps)};
  });
}

eb_status eb_poly_approx_pos_power(double c, double kappa, double eps, eb_poly** out) {
  return guard([&] {
    need(out, "out");
    *out = new eb_poly{approx_pos_power(c, kappa, eps)};
  });
}

eb_status eb_poly_approx_neg_power(double c, double kappa, double eps, eb_poly** out) {
  return guard([&] {
    need(out, "out");
    *out = new eb_poly{approx_neg_power(c, kappa, eps)};
  });
}

eb_status eb_poly_eval(const eb_poly* p, double x, double* out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    *out = p->p(x);
  });
}

eb_status eb_poly_degree(const eb_poly* p, int* out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    *out = p->p.degree();
  });
}

eb_status eb_poly_eps(const eb_poly* p, double* out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    *out = p->p.eps();
  });
}

eb_status eb_poly_input_precision(const eb_poly* p, double* out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    *out = p->p.input_precision;
  });
}

eb_status eb_poly_to_text(const eb_poly* p, char** out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    *out = dup_string(poly_to_text(p->p));
  });
}

void eb_poly_free(eb_poly* p) { delete p; }

eb_status eb_config_new(eb_config** out) {
  return guard([&] {
    need(out, "out");
    *out = new eb_config{};
  });
}

eb_status eb_config_set(eb_config* cfg, const char* key, const char* value) {
  return guard([&] {
    need(cfg, "config");
    need(key, "key");
    need(value, "value");
    config_set(cfg->cfg, key, value);
  });
}

eb_status eb_config_load(eb_config* cfg, const char* path) {
  return guard([&] {
    need(cfg, "config");
    need(path, "path");
    config_load(cfg->cfg, path);
  });
}

eb_status eb_config_validate(const eb_config* cfg) {
  return guard([&] {
    need(cfg, "config");
    config_validate(cfg->cfg);
  });
}

const char* eb_config_output_path(const eb_config* cfg) { return cfg ? cfg->cfg.out.c_str() : ""; }

void eb_config_free(eb_config* cfg) { delete cfg; }

eb_status eb_run_experiment(const eb_config* cfg, eb_experiment_result** out) {
  return guard([&] {
    need(cfg, "config");
    need(out, "out");
    *out = new eb_experiment_result{run_experiment(cfg->cfg)};
  });
}

const char* eb_result_csv(const eb_experiment_result* res) { return res ? res->res.csv.c_str() : ""; }

const char* eb_result_summary(const eb_experiment_result* res) { return res ? res->res.summary.c_str() : ""; }

int eb_result_exit_code(const eb_experiment_result* res) { return res ? res->res.exit_code : 1; }

double eb_result_coverage(const eb_experiment_result* res) { return res ? res->res.coverage : 0.0; }

size_t eb_result_rows(const eb_experiment_result* res) { return res ? res->res.rows.size() : 0; }

eb_status eb_result_write_csv(const eb_experiment_result* res, const char* path) {
  return guard([&] {
    need(res, "result");
    need(path, "path");
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::kIo, std::string("cannot open '") + path + "' for writing");
    out << res->res.csv;
    if (!out) fail(ErrorCode::kIo, std::string("write to '") + path + "' failed");
  });
}

void eb_result_free(eb_experiment_result* res) { delete res; }

}  // extern "C"
