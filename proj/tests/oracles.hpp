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

// Reference computations for tests, built on Eigen so they share no code with
// the library's own eigensolver.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "entropybench/numkernel.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;

inline Mat to_eigen(const entropybench::CMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Mat out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return out;
}

// Ascending eigenvalues of the Hermitian part.
inline std::vector<double> eigenvalues(const entropybench::CMatrix& m) {
  Mat a = to_eigen(m);
  a = (a + a.adjoint()).eval() * 0.5;
  Eigen::SelfAdjointEigenSolver<Mat> es(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

inline double op_norm(const entropybench::CMatrix& m) {
  Eigen::JacobiSVD<Mat> svd(to_eigen(m));
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

inline double op_norm_diff(const entropybench::CMatrix& a, const entropybench::CMatrix& b) {
  Eigen::JacobiSVD<Mat> svd(to_eigen(a) - to_eigen(b));
  return svd.singularValues()(0);
}

inline double tr_pow(const std::vector<double>& eigs, double alpha) {
  double s = 0.0;
  for (double l : eigs)
    if (l > 1e-12) s += std::pow(l, alpha);
  return s;
}

inline double von_neumann(const std::vector<double>& eigs) {
  double s = 0.0;
  for (double l : eigs)
    if (l > 1e-12) s -= l * std::log(l);
  return s;
}

// S_alpha in nats; alpha = 1 gives the von Neumann entropy.
inline double entropy(const std::vector<double>& eigs, double alpha) {
  if (alpha == 1.0) return von_neumann(eigs);
  return std::log(tr_pow(eigs, alpha)) / (1.0 - alpha);
}

inline double entropy(const entropybench::CMatrix& rho, double alpha) { return entropy(eigenvalues(rho), alpha); }

inline double rho_min(const std::vector<double>& eigs) {
  double m = 1.0;
  for (double l : eigs)
    if (l > 1e-12) m = std::min(m, l);
  return m;
}

inline int rank(const std::vector<double>& eigs) {
  int r = 0;
  for (double l : eigs)
    if (l > 1e-12) ++r;
  return r;
}

}  // namespace oracle
