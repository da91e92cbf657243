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

#include "entropybench/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entropybench/error.hpp"
#include "entropybench/tolerances.hpp"

namespace entropybench {

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> data) : dim_(dim), data_(std::move(data)) {
  require(data_.size() == dim * dim, "matrix data size does not match dimension");
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double CMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require(o.dim_ == dim_, "dimension mismatch in matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require(o.dim_ == dim_, "dimension mismatch in matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require(a.dim() == b.dim(), "dimension mismatch in matrix product");
  const std::size_t n = a.dim();
  CMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

namespace {

CMatrix symmetrized(const CMatrix& m) {
  CMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    r(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      r(i, j) = v;
      r(j, i) = std::conj(v);
    }
  }
  return r;
}

// Jacobi on an exactly Hermitian matrix of any size.
Spectrum jacobi(CMatrix a) {
  const std::size_t n = a.dim();
  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(a.frobenius(), 1e-300);

  for (int sweep = 0; sweep < Tolerances::jacobi_max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += std::norm(a(i, j));
    if (std::sqrt(off) <= Tolerances::jacobi_off * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= 1e-300) continue;
        const Complex e = apq / g;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex ce = std::conj(e);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * ce * akq;
          a(k, q) = s * akp + c * ce * akq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * ce * vkq;
          v(k, q) = s * vkp + c * ce * vkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * e * aqk;
          a(q, k) = s * apk + c * e * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double max_abs_eigenvalue(const CMatrix& hermitian) {
  if (hermitian.dim() == 0) return 0.0;
  const Spectrum s = jacobi(symmetrized(hermitian));
  return std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
}

}  // namespace

HermMatrix::HermMatrix(const CMatrix& m) {
  require(m.dim() >= 1, "Hermitian matrix must have positive dimension");
  if (m.dim() > Tolerances::max_dim) {
    fail(ErrorCode::kCapacity, "dimension " + std::to_string(m.dim()) + " exceeds the limit of 64");
  }
  const double asym = m.max_asymmetry();
  if (!(asym <= Tolerances::hermitian)) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max asymmetry " << asym;
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  m_ = symmetrized(m);
}

HermMatrix HermMatrix::diagonal(std::span<const double> values) {
  return HermMatrix(CMatrix::diagonal(values));
}

CMatrix Spectrum::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  CMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += eigenvectors(i, k) * eigenvalues[k] * std::conj(eigenvectors(j, k));
      r(i, j) = acc;
    }
  return r;
}

Spectrum hermitian_eig(const HermMatrix& a) { return jacobi(a.matrix()); }

HermMatrix mat_fun(const Spectrum& s, const std::function<double(double)>& f) {
  std::vector<double> mapped(s.eigenvalues.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    mapped[k] = f(s.eigenvalues[k]);
    if (!std::isfinite(mapped[k])) {
      std::ostringstream os;
      os << "function is not finite at eigenvalue " << s.eigenvalues[k];
      fail(ErrorCode::kDomain, os.str());
    }
  }
  Spectrum t{std::move(mapped), s.eigenvectors};
  return HermMatrix(symmetrized(t.reconstruct()));
}

HermMatrix mat_fun(const HermMatrix& a, const std::function<double(double)>& f) {
  return mat_fun(hermitian_eig(a), f);
}

double op_norm_dist(const HermMatrix& a, const HermMatrix& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::kInvalidArgument, "dimension mismatch in op_norm_dist");
  return max_abs_eigenvalue(a.matrix() - b.matrix());
}

double op_norm(const CMatrix& a) {
  if (a.dim() == 0) return 0.0;
  const CMatrix gram = a.adjoint() * a;
  const Spectrum s = jacobi(symmetrized(gram));
  return std::sqrt(std::max(0.0, s.eigenvalues.front()));
}

double op_norm_dist(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::kInvalidArgument, "dimension mismatch in op_norm_dist");
  const CMatrix d = a - b;
  // Hermitian differences avoid the square root of the Gram spectrum.
  if (d.max_asymmetry() == 0.0) return max_abs_eigenvalue(d);
  return op_norm(d);
}

double unitarity_defect(const CMatrix& u) {
  return max_abs_eigenvalue(u.adjoint() * u - CMatrix::identity(u.dim()));
}

}  // namespace entropybench
