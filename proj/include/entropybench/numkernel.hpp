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

// Dense complex linear algebra for small Hermitian operators.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace entropybench {

using Complex = std::complex<double>;

// Square complex matrix, row-major. No structure assumed.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  CMatrix(std::size_t dim, std::vector<Complex> data);

  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  std::span<const Complex> data() const { return data_; }

  CMatrix adjoint() const;
  Complex trace() const;
  // max_ij |a_ij - conj(a_ji)|
  double max_asymmetry() const;
  double frobenius() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

// Hermitian matrix of dimension <= 64. Construction validates the symmetry
// within Tolerances::hermitian and then stores the exactly symmetrized matrix.
class HermMatrix {
 public:
  HermMatrix() = default;
  explicit HermMatrix(const CMatrix& m);
  static HermMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return m_.dim(); }
  const CMatrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  operator const CMatrix&() const { return m_; }

 private:
  CMatrix m_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  CMatrix eigenvectors;             // column k pairs with eigenvalues[k]

  CMatrix reconstruct() const;
};

// Cyclic complex Jacobi.
Spectrum hermitian_eig(const HermMatrix& a);

// V diag(f(lambda)) V^+. Throws kDomain naming the eigenvalue if f is not finite there.
HermMatrix mat_fun(const HermMatrix& a, const std::function<double(double)>& f);
HermMatrix mat_fun(const Spectrum& s, const std::function<double(double)>& f);

// Largest |eigenvalue| of a - b.
double op_norm_dist(const HermMatrix& a, const HermMatrix& b);

// Largest singular value of an arbitrary square matrix.
double op_norm(const CMatrix& a);
double op_norm_dist(const CMatrix& a, const CMatrix& b);

// Spectral norm of A^+A - I.
double unitarity_defect(const CMatrix& u);

}  // namespace entropybench
