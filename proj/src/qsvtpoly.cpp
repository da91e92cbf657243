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

#include "entropybench/qsvtpoly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "entropybench/error.hpp"

namespace entropybench {

namespace {

double clenshaw(const std::vector<double>& c, double t) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t j = c.size(); j-- > 1;) {
    const double b0 = 2.0 * t * b1 - b2 + c[j];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + (c.empty() ? 0.0 : c[0]);
}

double to_unit(double x, double lo, double hi) { return hi > lo ? (2.0 * x - lo - hi) / (hi - lo) : 0.0; }

// Chebyshev coefficients (in t) of the derivative of sum c_j T_j(t).
std::vector<double> cheb_derivative(const std::vector<double>& c) {
  const std::size_t n = c.size();
  if (n <= 1) return {0.0};
  std::vector<double> d(n - 1, 0.0);
  // d_{j-1} = d_{j+1} + 2 j c_j, run downward.
  double next = 0.0, next2 = 0.0;  // d_j, d_{j+1}
  for (std::size_t j = n - 1; j >= 1; --j) {
    const double dj1 = next2 + 2.0 * static_cast<double>(j) * c[j];
    d[j - 1] = dj1;
    next2 = next;
    next = dj1;
  }
  d[0] *= 0.5;
  return d;
}

std::size_t grid_size(int degree) { return std::max<std::size_t>(64, 10 * static_cast<std::size_t>(std::max(degree, 0))); }

double grid_error(const std::vector<double>& c, double lo, double hi, const std::function<double(double)>& f) {
  const std::size_t n = grid_size(static_cast<int>(c.size()) - 1);
  double worst = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
    const double x = hi > lo ? 0.5 * (lo + hi) + 0.5 * (hi - lo) * t : lo;
    const double e = std::abs(clenshaw(c, t) - f(x));
    if (!(e <= worst)) worst = e;  // NaN propagates as a failure
  }
  return worst;
}

// Interpolant at the n + 1 first-kind Chebyshev nodes.
std::vector<double> interpolate(const std::function<double(double)>& f, double lo, double hi, int degree) {
  const std::size_t m = static_cast<std::size_t>(degree) + 1;
  std::vector<double> fx(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = std::cos(std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(m));
    fx[j] = f(hi > lo ? 0.5 * (lo + hi) + 0.5 * (hi - lo) * t : lo);
  }
  // cos(pi k (2j + 1) / (2m)) indexed by k (2j + 1) mod 4m.
  std::vector<double> table(4 * m);
  for (std::size_t i = 0; i < 4 * m; ++i)
    table[i] = std::cos(std::numbers::pi * static_cast<double>(i) / (2.0 * static_cast<double>(m)));
  std::vector<double> c(m);
  for (std::size_t k = 0; k < m; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) acc += fx[j] * table[(k * (2 * j + 1)) % (4 * m)];
    c[k] = 2.0 * acc / static_cast<double>(m);
  }
  c[0] *= 0.5;
  return c;
}

double parse_number(const std::string& token) {
  double v = 0.0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size())
    fail(ErrorCode::kIo, "cannot parse number '" + token + "'");
  return v;
}

}  // namespace

PolyApprox::PolyApprox(std::vector<double> coeffs, double lo, double hi, double eps, PolyTarget tag,
                       std::function<double(double)> target)
    : coeffs_(std::move(coeffs)), lo_(lo), hi_(hi), eps_(eps), tag_(tag), target_(std::move(target)) {
  require(!coeffs_.empty(), "polynomial needs at least one coefficient");
  require(lo_ <= hi_, "polynomial domain must satisfy lo <= hi");
  require(eps_ >= 0.0, "polynomial error bound must be nonnegative");
  dcoeffs_ = cheb_derivative(coeffs_);
  if (hi_ > lo_)
    for (double& v : dcoeffs_) v *= 2.0 / (hi_ - lo_);
  achieved_ = grid_error(coeffs_, lo_, hi_, target_);
  if (!(achieved_ <= eps_)) {
    std::ostringstream os;
    os << "polynomial error " << achieved_ << " exceeds certified bound " << eps_;
    fail(ErrorCode::kNumeric, os.str());
  }
}

double PolyApprox::operator()(double x) const { return clenshaw(coeffs_, to_unit(x, lo_, hi_)); }

double PolyApprox::derivative(double x) const {
  if (hi_ <= lo_) return 0.0;
  return clenshaw(dcoeffs_, to_unit(x, lo_, hi_));
}

double certification_error(const PolyApprox& p, const std::function<double(double)>& f) {
  return grid_error(p.coeffs(), p.lo(), p.hi(), f);
}

PolyApprox cheb_fit(const std::function<double(double)>& target, double lo, double hi, double eps, int degree_cap,
                    PolyTarget tag) {
  require(lo > 0.0 && lo <= hi && hi <= 1.0, "polynomial domain must satisfy 0 < lo <= hi <= 1");
  require(eps > 0.0, "target error must be positive");
  require(degree_cap >= 0, "degree cap must be nonnegative");

  double best = std::numeric_limits<double>::infinity();
  auto passes = [&](int degree) {
    const double e = grid_error(interpolate(target, lo, hi, degree), lo, hi, target);
    best = std::min(best, e);
    return e <= eps;
  };

  int fail_deg = -1, pass_deg = -1;
  for (int degree = 0;; degree = degree == 0 ? 1 : 2 * degree) {
    degree = std::min(degree, degree_cap);
    if (passes(degree)) {
      pass_deg = degree;
      break;
    }
    fail_deg = degree;
    if (degree == degree_cap) break;
  }
  if (pass_deg < 0) {
    std::ostringstream os;
    os << "no polynomial of degree <= " << degree_cap << " reaches error " << eps << "; best achieved " << best;
    fail(ErrorCode::kCapacity, os.str());
  }
  while (pass_deg - fail_deg > 1) {
    const int mid = fail_deg + (pass_deg - fail_deg) / 2;
    if (passes(mid))
      pass_deg = mid;
    else
      fail_deg = mid;
  }
  return PolyApprox(interpolate(target, lo, hi, pass_deg), lo, hi, eps, tag, target);
}

double pos_power_input_precision(double kappa, double eps) {
  return eps / (kappa * std::pow(std::log(kappa / eps), 3));
}

double neg_power_input_precision(double c, double kappa, double eps) {
  const double k1 = std::pow(kappa, 1.0 + c);
  return eps / (k1 * (1.0 + c) * std::pow(std::log(k1 / eps), 3));
}

PolyApprox approx_log(double beta, double eps, const Constants& k) {
  if (!(beta > 0.0 && beta < 1.0)) {
    std::ostringstream os;
    os << "log polynomial needs beta in (0, 1), got " << beta << " (beta = 1 leaves a degenerate domain)";
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  require(eps > 0.0 && eps <= 0.5, "log polynomial error must be in (0, 1/2]");
  const double scale = 2.0 * std::log(1.0 / beta);
  auto f = [scale](double x) { return std::log(1.0 / x) / scale; };
  const double law = k.log_degree_constant * (1.0 / beta) * std::log(1.0 / eps);
  const int cap = static_cast<int>(std::min<double>(k.degree_cap, std::max(1.0, std::floor(law))));
  PolyApprox p = cheb_fit(f, beta, 1.0, eps, cap, PolyTarget::kLogScaled);
  p.beta = beta;

  const std::size_t n = grid_size(p.degree());
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = beta + (1.0 - beta) * 0.5 * (1.0 + std::cos(std::numbers::pi * static_cast<double>(i) / n));
    if (std::abs(p(x)) > 1.0 + Tolerances::poly_bound)
      fail(ErrorCode::kNumeric, "log polynomial exceeds 1 in magnitude on its domain");
  }
  return p;
}

PolyApprox approx_pos_power(double c, double kappa, double eps, const Constants& k) {
  require(c > 0.0 && c < 1.0, "positive power must be in (0, 1)");
  require(kappa >= 1.0, "condition parameter kappa must be >= 1");
  require(eps > 0.0, "target error must be positive");
  auto f = [c](double x) { return 0.5 * std::pow(x, c); };
  PolyApprox p = cheb_fit(f, 1.0 / kappa, 1.0, eps, k.degree_cap, PolyTarget::kPosPower);
  p.power = c;
  p.kappa = kappa;
  p.input_precision = pos_power_input_precision(kappa, eps);
  return p;
}

PolyApprox approx_neg_power(double c, double kappa, double eps, const Constants& k) {
  require(c >= 0.0 && c < 1.0, "negative power exponent must be in [0, 1)");
  require(kappa >= 1.0, "condition parameter kappa must be >= 1");
  require(eps > 0.0, "target error must be positive");
  const double norm = 2.0 * std::pow(kappa, c);
  auto f = [c, norm](double x) { return std::pow(x, -c) / norm; };
  PolyApprox p = cheb_fit(f, 1.0 / kappa, 1.0, eps, k.degree_cap, PolyTarget::kNegPower);
  p.power = c;
  p.kappa = kappa;
  p.input_precision = neg_power_input_precision(c, kappa, eps);
  return p;
}

namespace {

CMatrix require_hermitian(const CMatrix& m, const char* what) {
  const double scale = std::max(1.0, m.frobenius());
  if (m.max_asymmetry() > 1e-10 * scale) {
    std::ostringstream os;
    os << "polynomial transform needs a Hermitian " << what << " block (asymmetry " << m.max_asymmetry() << ")";
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  CMatrix sym(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) sym(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return sym;
}

double subnorm_factor(const PolyApprox& p) {
  switch (p.tag()) {
    case PolyTarget::kPosPower:
      return 2.0;
    case PolyTarget::kNegPower:
      return 2.0 * std::pow(p.kappa, p.power);
    case PolyTarget::kLogScaled:
      return 2.0 * std::log(1.0 / p.beta);
    case PolyTarget::kCustom:
      break;
  }
  return 1.0;
}

// Max |p'| on [a, b] sampled on a Chebyshev extrema grid.
double lipschitz(const PolyApprox& p, double a, double b) {
  if (b <= a) return std::abs(p.derivative(a));
  const std::size_t n = grid_size(p.degree()) + 2 * static_cast<std::size_t>(p.degree());
  double worst = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(std::numbers::pi * static_cast<double>(i) / n);
    worst = std::max(worst, std::abs(p.derivative(x)));
  }
  return worst;
}

}  // namespace

BlockEncoding apply_poly(const BlockEncoding& be, const PolyApprox& p) {
  const double eta = be.eta();
  const double slack = eta + 1e-12;
  const double zero_band = eta + Tolerances::rank_cutoff;

  const Spectrum ts = hermitian_eig(HermMatrix(require_hermitian(be.target(), "target")));
  const Spectrum es = hermitian_eig(HermMatrix(require_hermitian(be.encoded(), "encoded")));

  bool has_zero = false;
  double off_domain_err = 0.0;  // |p - f| at target eigenvalues just outside the domain
  for (double lam : ts.eigenvalues) {
    if (std::abs(lam) <= Tolerances::rank_cutoff) {
      has_zero = true;
      continue;
    }
    if (lam < p.lo() - slack || lam > p.hi() + slack) {
      std::ostringstream os;
      os << "target eigenvalue " << lam << " lies outside the polynomial domain [" << p.lo() << ", " << p.hi()
         << "] by more than eta = " << eta;
      fail(ErrorCode::kDomain, os.str());
    }
    if (lam < p.lo() || lam > p.hi()) off_domain_err = std::max(off_domain_err, std::abs(p(lam) - p.target(lam)));
  }
  if (has_zero && (p.tag() == PolyTarget::kNegPower || p.tag() == PolyTarget::kLogScaled)) {
    fail(ErrorCode::kDomain,
         "target has eigenvalue 0, where negative powers and logarithms are undefined; project onto the support first");
  }

  // Target side: the intended function, extended by 0 (powers) at eigenvalue 0.
  auto target_fn = [&](double lam) {
    if (std::abs(lam) <= Tolerances::rank_cutoff) return p.tag() == PolyTarget::kPosPower ? 0.0 : p.target(0.0);
    return p.target(lam);
  };
  // Realized side: the polynomial, except that eigenvalues in the zero band
  // of a power transform follow the continuous extension of x^c / 2.
  double lo_seen = p.lo(), hi_seen = p.hi();
  auto encoded_fn = [&](double mu) {
    if (has_zero && std::abs(mu) <= zero_band && p.tag() == PolyTarget::kPosPower) {
      return mu > 0.0 ? 0.5 * std::pow(mu, p.power) : 0.0;
    }
    lo_seen = std::min(lo_seen, mu);
    hi_seen = std::max(hi_seen, mu);
    return p(mu);
  };

  const HermMatrix new_target = mat_fun(ts, target_fn);
  const HermMatrix new_encoded = mat_fun(es, encoded_fn);

  double eta_new = std::max(p.eps(), off_domain_err);
  if (eta > 0.0) {
    const double lo_all = std::min(lo_seen, p.lo() - slack);
    const double hi_all = std::max(hi_seen, p.hi() + slack);
    eta_new += lipschitz(p, lo_all, hi_all) * eta;
    if (has_zero) {
      if (p.tag() == PolyTarget::kPosPower) {
        // ||A^c - B^c|| <= ||A - B||^c for PSD A, B.
        eta_new += 0.5 * std::pow(zero_band, p.power);
      } else {
        eta_new += std::abs(p(0.0) - p.target(0.0)) + lipschitz(p, -zero_band, zero_band) * zero_band;
      }
    }
  } else if (has_zero && p.tag() == PolyTarget::kCustom) {
    eta_new = std::max(eta_new, std::abs(p(0.0) - p.target(0.0)));
  }

  const double cost = be.sample_cost() * std::max(1.0, 2.0 * p.degree());
  return BlockEncoding(new_encoded.matrix(), new_target.matrix(), be.subnorm() * subnorm_factor(p), be.ancillas() + 1,
                       eta_new, cost);
}

double MonomialPoly::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

double MonomialPoly::abs_sum(std::size_t from) const {
  double s = 0.0;
  for (std::size_t i = from; i < coeffs.size(); ++i) s += std::abs(coeffs[i]);
  return s;
}

MonomialPoly to_monomial(const PolyApprox& p, const Constants& k) {
  const int degree = p.degree();
  if (degree > k.monomial_max_degree) {
    std::ostringstream os;
    os << "degree " << degree << " exceeds the monomial conversion cap " << k.monomial_max_degree
       << "; the von Neumann QSVT path avoids the expansion";
    fail(ErrorCode::kCapacity, os.str());
  }
  const double scale = p.tag() == PolyTarget::kLogScaled ? 2.0 * std::log(1.0 / p.beta) : 1.0;
  const std::size_t m = static_cast<std::size_t>(degree) + 1;

  // t = a x + b; build T_j(t) as monomials in x by the three-term recurrence.
  using LD = long double;
  const LD a = p.hi() > p.lo() ? LD(2) / (LD(p.hi()) - LD(p.lo())) : LD(0);
  const LD b = p.hi() > p.lo() ? -(LD(p.hi()) + LD(p.lo())) / (LD(p.hi()) - LD(p.lo())) : LD(0);
  std::vector<LD> prev(m, 0), cur(m, 0), acc(m, 0);
  prev[0] = 1;  // T_0
  if (m > 1) {
    cur[0] = b;
    cur[1] = a;
  }
  for (std::size_t i = 0; i < m; ++i) acc[i] += LD(p.coeffs()[0]) * prev[i];
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) acc[i] += LD(p.coeffs()[j]) * cur[i];
    if (j + 1 == m) break;
    std::vector<LD> next(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      next[i] = 2 * b * cur[i] - prev[i];
      if (i > 0) next[i] += 2 * a * cur[i - 1];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }

  MonomialPoly out;
  out.coeffs.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.coeffs[i] = static_cast<double>(acc[i] * LD(scale));

  const std::size_t n = grid_size(degree);
  double worst = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = p.lo() + (p.hi() - p.lo()) * 0.5 * (1.0 + std::cos(std::numbers::pi * static_cast<double>(i) / n));
    worst = std::max(worst, std::abs(out(x) - scale * p(x)));
  }
  if (worst > Tolerances::monomial_agreement) {
    std::ostringstream os;
    os << "monomial conversion lost accuracy (" << worst << "); use a lower degree";
    fail(ErrorCode::kNumeric, os.str());
  }
  return out;
}

std::string poly_to_text(const PolyApprox& p) {
  std::string out = "domain " + format_double(p.lo()) + " " + format_double(p.hi()) + "\n";
  out += "eps " + format_double(p.eps()) + "\n";
  for (double c : p.coeffs()) out += format_double(c) + "\n";
  return out;
}

PolyApprox poly_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string word, lo, hi, eps;
  if (!(in >> word >> lo >> hi) || word != "domain") fail(ErrorCode::kIo, "expected 'domain lo hi'");
  if (!(in >> word >> eps) || word != "eps") fail(ErrorCode::kIo, "expected 'eps e'");
  std::vector<double> coeffs;
  std::string token;
  while (in >> token) coeffs.push_back(parse_number(token));
  if (coeffs.empty()) fail(ErrorCode::kIo, "polynomial has no coefficients");
  const double l = parse_number(lo), h = parse_number(hi);
  // The target function is not stored; the loaded polynomial is its own target.
  auto self = [coeffs, l, h](double x) { return clenshaw(coeffs, to_unit(x, l, h)); };
  return PolyApprox(coeffs, l, h, parse_number(eps), PolyTarget::kCustom, self);
}

}  // namespace entropybench
