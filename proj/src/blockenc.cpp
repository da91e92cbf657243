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

#include "entropybench/blockenc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "entropybench/error.hpp"
#include "entropybench/rng.hpp"

namespace entropybench {

BlockEncoding::BlockEncoding(CMatrix encoded, CMatrix target, double subnorm, int ancillas, double eta,
                             double sample_cost)
    : encoded_(std::move(encoded)),
      target_(std::move(target)),
      subnorm_(subnorm),
      ancillas_(ancillas),
      eta_(eta),
      sample_cost_(sample_cost) {
  require(encoded_.dim() == target_.dim(), "encoded and target blocks differ in dimension");
  require(subnorm_ > 0.0 && eta_ >= 0.0 && ancillas_ >= 0 && sample_cost_ >= 0.0, "invalid block-encoding ledger");
  const double norm = op_norm(encoded_);
  if (norm > 1.0 + Tolerances::block_norm) {
    std::ostringstream os;
    os << "block has operator norm " << norm << " > 1; no unitary encodes it";
    fail(ErrorCode::kDomain, os.str());
  }
}

double encoding_sample_cost(double delta, const Constants& k) {
  return std::ceil(k.encoding_multiplier * (1.0 / delta) * std::log(1.0 / delta));
}

BlockEncoding encode_density(const DensityMatrix& rho, double delta, std::uint64_t noise_seed, EncodingNoise noise,
                             const Constants& k) {
  if (!(delta > 0.0 && delta <= 0.5)) {
    std::ostringstream os;
    os << "encoding precision " << delta << " outside (0, 1/2]";
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  const std::size_t d = rho.dim();
  CMatrix target = rho.matrix().matrix() * Complex(std::numbers::pi / 4.0);
  CMatrix encoded = target;
  if (noise == EncodingNoise::kNoisy) {
    auto rng = make_rng(noise_seed, Stream::kEncodingNoise);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(d);
    for (std::size_t i = 0; i < d; ++i) {
      g(i, i) = gauss(rng);
      for (std::size_t j = i + 1; j < d; ++j) {
        const Complex z(gauss(rng) / std::sqrt(2.0), gauss(rng) / std::sqrt(2.0));
        g(i, j) = z;
        g(j, i) = std::conj(z);
      }
    }
    const double gnorm = op_norm_dist(HermMatrix(g), HermMatrix(CMatrix(d)));
    encoded += g * Complex(0.5 * delta / gnorm);
  }
  return BlockEncoding(std::move(encoded), std::move(target), 1.0, 1, delta, encoding_sample_cost(delta, k));
}

namespace {

// Principal square root of an (assumed) PSD Hermitian matrix.
CMatrix psd_sqrt(const CMatrix& m) {
  CMatrix sym(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) sym(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  Spectrum s = hermitian_eig(HermMatrix(sym));
  for (double& v : s.eigenvalues) v = std::sqrt(std::max(v, 0.0));
  return s.reconstruct();
}

}  // namespace

DilatedUnitary dilate(const BlockEncoding& be) {
  const CMatrix& a = be.encoded();
  const std::size_t d = a.dim();
  const double norm = op_norm(a);
  if (norm > 1.0 + Tolerances::block_norm) {
    std::ostringstream os;
    os << "cannot dilate a block of norm " << norm;
    fail(ErrorCode::kDomain, os.str());
  }
  const CMatrix ad = a.adjoint();
  const CMatrix id = CMatrix::identity(d);
  const CMatrix upper = psd_sqrt(id - a * ad);
  const CMatrix lower = psd_sqrt(id - ad * a);
  CMatrix u(2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      u(i, j) = a(i, j);
      u(i, d + j) = upper(i, j);
      u(d + i, j) = lower(i, j);
      u(d + i, d + j) = -ad(i, j);
    }
  return DilatedUnitary{std::move(u), be};
}

CMatrix top_left_block(const CMatrix& u, std::size_t d) {
  require(d <= u.dim(), "block larger than the unitary");
  CMatrix r(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r(i, j) = u(i, j);
  return r;
}

BlockEncoding be_product(const BlockEncoding& first, const BlockEncoding& second) {
  if (first.dim() != second.dim()) fail(ErrorCode::kInvalidArgument, "block encodings differ in dimension");
  // ||A1~ A2~ - A1 A2|| <= e1 ||A2|| + e2 ||A1|| + e1 e2 with ||Ai|| <= 1.
  const double eta = first.eta() + second.eta() + first.eta() * second.eta();
  return BlockEncoding(first.encoded() * second.encoded(), first.target() * second.target(),
                       first.subnorm() * second.subnorm(), first.ancillas() + second.ancillas(), eta,
                       first.sample_cost() + second.sample_cost());
}

BlockEncoding purified_encode(const std::vector<Complex>& purification, std::size_t d) {
  double norm2 = 0.0;
  for (const auto& z : purification) norm2 += std::norm(z);
  if (std::abs(norm2 - 1.0) > Tolerances::purification) {
    std::ostringstream os;
    os << "purification has squared norm " << norm2 << ", expected 1";
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  CMatrix reduced = partial_trace_second(purification, d);
  const std::size_t m = purification.size() / d;
  int ancillas = 0;
  while ((std::size_t{1} << ancillas) < m) ++ancillas;
  // The construction prepares |phi> once per use and needs no copies of rho.
  return BlockEncoding(reduced, reduced, 1.0, ancillas + 1, 0.0, 0.0);
}

}  // namespace entropybench
