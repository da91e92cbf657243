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

// Experiment runner behind the command line: single estimates, sweeps and
// the validation suite, rendered as CSV plus a text summary.

#include <cstdint>
#include <string>
#include <vector>

#include "entropybench/estimators.hpp"

namespace entropybench {

struct ExperimentConfig {
  std::string mode = "renyi";  // renyi | vonneumann | sweep | validate
  double alpha = 2.0;
  int dim = 8;
  int rank = 3;
  std::vector<double> spectrum;  // explicit eigenvalues; overrides rank
  double eps = 0.05;             // in units of log_base
  std::string method = "sampling";  // sampling | ae (sub-one orders)
  std::string approach = "qsvt";    // qsvt | poly (von Neumann)
  int trials = 1;
  std::uint64_t seed = 0;
  std::string log_base = "e";  // e | 2
  bool ideal = false;
  bool blind = false;
  bool support_projection = true;
  bool quick = false;
  std::string var = "eps";  // sweep variable: eps | rank
  std::vector<double> grid;
  std::string out;
  double theta = 1e-3;
  int threads = 1;
  double c_shots = 1.0;
};

// Applies one key=value setting; throws kInvalidArgument on unknown keys or
// unparsable values.
void config_set(ExperimentConfig& cfg, const std::string& key, const std::string& value);
// Flat "key = value" lines; '#' starts a comment.
void config_load(ExperimentConfig& cfg, const std::string& path);
// Throws kInvalidArgument listing every offending field.
void config_validate(const ExperimentConfig& cfg);

struct CsvRow {
  std::uint64_t seed = 0;
  double alpha = 0.0;
  std::string branch;
  int d = 0;
  int rank = 0;
  double eps = 0.0;
  double delta = 0.0;
  std::string method;
  double shots = 0.0;
  double ledger_samples = 0.0;
  double predicted_samples = 0.0;
  double estimate = 0.0;
  double exact = 0.0;
  double abs_err = 0.0;
  bool pass = false;
};

struct Slope {
  double value = 0.0;
  double stderr_ = 0.0;
};

struct ExperimentResult {
  std::vector<CsvRow> rows;
  std::string csv;
  std::string summary;
  double coverage = 0.0;
  int exit_code = 0;  // 2 when validate coverage < 0.9
  std::vector<Slope> slopes;  // sweep: shots, ledger
};

std::string csv_header();
std::string csv_line(const CsvRow& row);

// Least-squares slope of y on x with its standard error; needs >= 3 distinct x.
Slope fit_slope(const std::vector<double>& x, const std::vector<double>& y);

ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace entropybench
