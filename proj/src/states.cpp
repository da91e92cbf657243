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

#include "entropybench/states.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "entropybench/error.hpp"
#include "entropybench/rng.hpp"
#include "entropybench/tolerances.hpp"

namespace entropybench {

DensityMatrix::DensityMatrix(HermMatrix m) : matrix_(std::move(m)) {
  const double tr = matrix_.matrix().trace().real();
  if (std::abs(tr - 1.0) > Tolerances::trace) {
    std::ostringstream os;
    os << "density matrix trace is " << tr << ", expected 1";
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  spectrum_ = hermitian_eig(matrix_);
  if (spectrum_.eigenvalues.back() < -Tolerances::psd) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << spectrum_.eigenvalues.back();
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  for (double& v : spectrum_.eigenvalues) v = std::max(v, 0.0);

  meta_.rho_max = spectrum_.eigenvalues.front();
  for (double v : spectrum_.eigenvalues) {
    if (v > Tolerances::rank_cutoff) {
      ++meta_.rank;
      meta_.rho_min = v;
      meta_.purity += v * v;
    }
  }
}

DensityMatrix random_density(int d, int r, std::uint64_t seed) {
  require(d >= 1 && d <= static_cast<int>(Tolerances::max_dim), "dimension must be in [1, 64]");
  require(r >= 1, "rank must be at least 1");
  if (r > d) fail(ErrorCode::kInvalidArgument, "rank " + std::to_string(r) + " exceeds dimension " + std::to_string(d));

  // Dirichlet(1,...,1) via normalized exponentials; redraw the (vanishingly
  // rare) draws that would land below the rank cutoff.
  auto spec_rng = make_rng(seed, Stream::kSpectrum);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> eigs(static_cast<std::size_t>(r));
  for (;;) {
    for (auto& e : eigs) e = expo(spec_rng);
    const double sum = std::accumulate(eigs.begin(), eigs.end(), 0.0);
    for (auto& e : eigs) e /= sum;
    if (*std::min_element(eigs.begin(), eigs.end()) > 1e3 * Tolerances::rank_cutoff) break;
  }
  eigs.resize(static_cast<std::size_t>(d), 0.0);

  // Haar unitary: Gram-Schmidt on complex Gaussian columns.
  auto rot_rng = make_rng(seed, Stream::kUnitary);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto n = static_cast<std::size_t>(d);
  CMatrix q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = Complex(gauss(rot_rng), gauss(rot_rng));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }

  Spectrum s{eigs, q};
  CMatrix m = s.reconstruct();
  // Remove the rounding drift in the trace so the unit-trace check is exact.
  const double tr = m.trace().real();
  m *= 1.0 / tr;
  return DensityMatrix(HermMatrix(m));
}

DensityMatrix from_spectrum(const std::vector<double>& eigs, int d) {
  require(!eigs.empty(), "spectrum must not be empty");
  require(d >= 1 && static_cast<std::size_t>(d) >= eigs.size(), "spectrum longer than dimension");
  double sum = 0.0;
  for (double e : eigs) {
    if (!(e >= 0.0)) {
      std::ostringstream os;
      os << "spectrum entry " << e << " is negative";
      fail(ErrorCode::kInvalidArgument, os.str());
    }
    sum += e;
  }
  if (std::abs(sum - 1.0) > Tolerances::spectrum_sum) {
    std::ostringstream os;
    os << "spectrum sums to " << sum << ", expected 1";
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  std::vector<double> padded(eigs);
  padded.resize(static_cast<std::size_t>(d), 0.0);
  return DensityMatrix(HermMatrix::diagonal(padded));
}

DensityMatrix support_projection(const DensityMatrix& rho) {
  if (rho.full_rank()) return rho;
  const auto r = static_cast<std::size_t>(rho.meta().rank);
  std::vector<double> eigs(rho.spectrum().eigenvalues.begin(), rho.spectrum().eigenvalues.begin() + r);
  const double sum = std::accumulate(eigs.begin(), eigs.end(), 0.0);
  for (auto& e : eigs) e /= sum;
  return DensityMatrix(HermMatrix::diagonal(eigs));
}

Purification purify_maximally_mixed(int d) {
  require(d >= 1, "dimension must be positive");
  if ((d & (d - 1)) != 0) fail(ErrorCode::kInvalidArgument, "dimension " + std::to_string(d) + " is not a power of 2");
  int qubits = 0;
  while ((1 << qubits) < d) ++qubits;

  // 2n-qubit register; qubit q of the system is bit (n + q) of the joint
  // index, qubit q of the ancilla is bit q.
  const std::size_t size = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  Purification out;
  out.state.assign(size, 0.0);
  out.state[0] = 1.0;
  const double h = 1.0 / std::sqrt(2.0);
  for (int q = 0; q < qubits; ++q) {
    const std::size_t bit = std::size_t{1} << (qubits + q);
    for (std::size_t i = 0; i < size; ++i) {
      if (i & bit) continue;
      const Complex a0 = out.state[i], a1 = out.state[i | bit];
      out.state[i] = h * (a0 + a1);
      out.state[i | bit] = h * (a0 - a1);
    }
    ++out.hadamards;
  }
  for (int q = 0; q < qubits; ++q) {
    const std::size_t control = std::size_t{1} << (qubits + q);
    const std::size_t target = std::size_t{1} << q;
    for (std::size_t i = 0; i < size; ++i)
      if ((i & control) && !(i & target)) std::swap(out.state[i], out.state[i | target]);
    ++out.cnots;
  }
  return out;
}

CMatrix partial_trace_second(const std::vector<Complex>& phi, std::size_t d) {
  require(d >= 1 && phi.size() % d == 0, "vector length is not a multiple of the system dimension");
  const std::size_t m = phi.size() / d;
  CMatrix r(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) acc += phi[i * m + j] * std::conj(phi[k * m + j]);
      r(i, k) = acc;
    }
  return r;
}

ExactEntropy exact_entropies(const DensityMatrix& rho, double alpha) {
  if (!(alpha > 0.0)) {
    std::ostringstream os;
    os << "entropy order must be positive, got " << alpha;
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  ExactEntropy out;
  out.alpha = alpha;
  out.meta = rho.meta();
  const auto& eigs = rho.spectrum().eigenvalues;
  if (alpha == 1.0) {
    out.tr_pow = 1.0;
    double s = 0.0;
    for (double l : eigs)
      if (l > Tolerances::rank_cutoff) s -= l * std::log(l);
    out.entropy = s;
    return out;
  }
  double t = 0.0;
  for (double l : eigs)
    if (l > Tolerances::rank_cutoff) t += std::pow(l, alpha);
  out.tr_pow = t;
  out.entropy = std::log(t) / (1.0 - alpha);
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) fail(ErrorCode::kIo, "cannot parse number '" + token + "'");
  return v;
}

}  // namespace

std::string matrix_to_text(const CMatrix& m) {
  std::string out = "dim " + std::to_string(m.dim()) + "\n";
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out += std::to_string(i) + ' ' + std::to_string(j) + ' ' + format_double(m(i, j).real()) + ' ' +
             format_double(m(i, j).imag()) + '\n';
    }
  return out;
}

CMatrix matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  std::size_t d = 0;
  if (!(in >> word >> d) || word != "dim" || d == 0) fail(ErrorCode::kIo, "expected header 'dim d'");
  CMatrix m(d);
  std::vector<bool> seen(d * d, false);
  for (std::size_t n = 0; n < d * d; ++n) {
    std::size_t i = 0, j = 0;
    std::string re, im;
    if (!(in >> i >> j >> re >> im)) fail(ErrorCode::kIo, "expected " + std::to_string(d * d) + " entry lines");
    if (i >= d || j >= d || seen[i * d + j]) fail(ErrorCode::kIo, "bad or repeated entry index");
    seen[i * d + j] = true;
    m(i, j) = Complex(parse_double(re), parse_double(im));
  }
  return m;
}

std::string density_to_text(const DensityMatrix& rho) { return matrix_to_text(rho.matrix().matrix()); }

DensityMatrix density_from_text(const std::string& text) { return DensityMatrix(HermMatrix(matrix_from_text(text))); }

void save_density(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << density_to_text(rho);
  if (!out) fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

DensityMatrix load_density(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return density_from_text(ss.str());
}

}  // namespace entropybench
