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

// Command-line experiment runner over the C interface.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entropybench/entropybench.h"

namespace {

struct Setting {
  std::string key;
  std::string value;
};

// Collects flag values as config key=value pairs, in command-line order.
class Flags {
 public:
  void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(flag, [this, key](const std::string& v) { set_.push_back({key, v}); }, help);
  }
  void add_switch(CLI::App* app, const std::string& flag, const std::string& key, const std::string& value,
                  const std::string& help) {
    app->add_flag_callback(flag, [this, key, value] { set_.push_back({key, value}); }, help);
  }
  const std::vector<Setting>& settings() const { return set_; }

 private:
  std::vector<Setting> set_;
};

int report(eb_status s, const char* what) {
  std::cerr << "error: " << what << ": " << eb_last_error() << "\n";
  (void)s;
  return 1;
}

void add_common(CLI::App* app, Flags& f) {
  f.add(app, "--seed", "seed", "Base seed (falls back to ENTROPYBENCH_SEED)");
  f.add(app, "--out", "out", "CSV output path (stdout if omitted)");
  f.add(app, "--log-base", "log_base", "Report entropies in base e or 2");
  f.add(app, "--threads", "threads", "Worker threads for shot sampling");
  f.add(app, "--c-shots", "c_shots", "Shot multiplier C in N = ceil(C / delta^2)");
  f.add(app, "--theta", "theta", "Min-eigenvalue estimation accuracy in blind mode");
  f.add_switch(app, "--ideal", "ideal", "1", "Noiseless encodings, tight polynomials, exact readout");
  f.add_switch(app, "--blind", "blind", "1", "Estimate rank, purity and rho_min instead of using the oracle");
  f.add_switch(app, "--no-support-projection", "support_projection", "0", "Encode rank-deficient states as given");
}

void add_state(CLI::App* app, Flags& f) {
  f.add(app, "--dim", "dim", "Dimension d");
  f.add(app, "--rank", "rank", "Rank of the random state");
  f.add(app, "--spectrum", "spectrum", "Explicit eigenvalues, comma separated");
  f.add(app, "--eps", "eps", "Target entropy accuracy");
  f.add(app, "--trials", "trials", "Trials per grid point");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy estimation experiments on simulated block encodings"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file; flags override it");

  Flags flags;
  auto* renyi = app.add_subcommand("renyi", "Estimate a Renyi entropy");
  add_common(renyi, flags);
  add_state(renyi, flags);
  flags.add(renyi, "--alpha", "alpha", "Entropy order");
  flags.add(renyi, "--method", "method", "sampling or ae (orders below 1)");

  auto* vn = app.add_subcommand("vonneumann", "Estimate the von Neumann entropy");
  add_common(vn, flags);
  add_state(vn, flags);
  flags.add(vn, "--approach", "approach", "qsvt or poly");

  auto* sweep = app.add_subcommand("sweep", "Sweep eps or rank and fit scaling exponents");
  add_common(sweep, flags);
  add_state(sweep, flags);
  flags.add(sweep, "--alpha", "alpha", "Entropy order (1 selects von Neumann)");
  flags.add(sweep, "--method", "method", "sampling or ae (orders below 1)");
  flags.add(sweep, "--approach", "approach", "qsvt or poly");
  flags.add(sweep, "--var", "var", "Swept variable: eps or rank");
  flags.add(sweep, "--grid", "grid", "Grid values, comma separated");

  auto* validate = app.add_subcommand("validate", "Run the validation suite");
  add_common(validate, flags);
  flags.add_switch(validate, "--quick", "quick", "1", "Fewer statistical trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  eb_config* cfg = nullptr;
  if (eb_config_new(&cfg) != EB_OK) return report(EB_ERR_INTERNAL, "config");
  const std::string mode = app.get_subcommands().front()->get_name();
  eb_status s = eb_config_set(cfg, "mode", mode.c_str());
  if (const char* env = std::getenv("ENTROPYBENCH_SEED"); s == EB_OK && env != nullptr)
    s = eb_config_set(cfg, "seed", env);
  if (s == EB_OK && !config_path.empty()) s = eb_config_load(cfg, config_path.c_str());
  for (const auto& st : flags.settings()) {
    if (s != EB_OK) break;
    s = eb_config_set(cfg, st.key.c_str(), st.value.c_str());
  }
  if (s == EB_OK) s = eb_config_validate(cfg);
  if (s != EB_OK) {
    const int code = report(s, "configuration");
    eb_config_free(cfg);
    return code;
  }

  const std::string out_path = eb_config_output_path(cfg);
  eb_experiment_result* res = nullptr;
  s = eb_run_experiment(cfg, &res);
  eb_config_free(cfg);
  if (s != EB_OK) return report(s, "experiment");

  if (out_path.empty()) {
    std::cout << eb_result_csv(res);
    std::cerr << eb_result_summary(res);
  } else {
    if (eb_result_write_csv(res, out_path.c_str()) != EB_OK) {
      eb_result_free(res);
      return report(EB_ERR_IO, "output");
    }
    std::cout << eb_result_summary(res);
  }
  const int code = eb_result_exit_code(res);
  eb_result_free(res);
  return code;
}
