#pragma once

// Grünwald and weighted-shifted Grünwald (WSGD) coefficients, the dense
// symmetric operator matrix of the discrete fractional Laplacian, and the
// Fourier symbols used to bound it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fgle/errors.hpp"
#include "fgle/linalg.hpp"
#include "fgle/types.hpp"

namespace fgle {

namespace detail {
template <typename Real>
Real pi() {
  using std::acos;
  return acos(Real(-1));
}

// cos(alpha*pi/2); exact -1 at alpha == 2 for every scalar type.
template <typename Real>
Real half_turn_cos(const Real& alpha) {
  using std::cos;
  if (alpha == Real(2)) return Real(-1);
  return cos(alpha * pi<Real>() / Real(2));
}
}  // namespace detail

/// Coefficients g_0..g_L of the power series of (1 - z)^alpha.
template <typename Real>
Vector<Real> grunwald_coeffs(const Real& alpha, Eigen::Index L) {
  require_alpha(alpha);
  if (L < 2) throw DomainError("grunwald_coeffs: L must be at least 2");
  Vector<Real> g(L + 1);
  g(0) = Real(1);
  for (Eigen::Index l = 1; l <= L; ++l) g(l) = (Real(1) - (alpha + Real(1)) / Real(l)) * g(l - 1);
  return g;
}

template <typename Real>
struct WsgdWeights {
  Real alpha{2};
  Real lambda1{1};
  Real lambda0{0};
  Real lambda_m1{0};
  Vector<Real> g;  // Grünwald coefficients, length L+1
  Vector<Real> w;  // WSGD weights, length L+1

  Eigen::Index length() const { return w.size(); }
};

template <typename Real>
WsgdWeights<Real> wsgd_weights(const Real& alpha, Eigen::Index L) {
  WsgdWeights<Real> out;
  out.alpha = alpha;
  out.g = grunwald_coeffs(alpha, L);
  const Real a2 = alpha * alpha;
  out.lambda1 = (a2 + Real(3) * alpha + Real(2)) / Real(12);
  out.lambda0 = (Real(4) - a2) / Real(6);
  out.lambda_m1 = (a2 - Real(3) * alpha + Real(2)) / Real(12);

  const auto& g = out.g;
  out.w.resize(L + 1);
  out.w(0) = out.lambda1 * g(0);
  out.w(1) = out.lambda1 * g(1) + out.lambda0 * g(0);
  for (Eigen::Index l = 2; l <= L; ++l)
    out.w(l) = out.lambda1 * g(l) + out.lambda0 * g(l - 1) + out.lambda_m1 * g(l - 2);
  return out;
}

struct PropertyCheck {
  std::string name;
  bool passed{false};
  double margin{0};  // signed distance to violation; negative means violated
  long index{-1};    // first violating index for sequence checks, -1 if none
};

struct WeightPropertyReport {
  double alpha{0};
  std::vector<PropertyCheck> checks;
  double total_sum{0};  // sum_{l=0}^{L} w_l
  double tail_bound{0};  // eps_tail

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  const PropertyCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Bound on |sum_{l>L} w_l|: the next 4L terms summed explicitly plus an
/// integral bound 2*K*w_K/alpha for the remainder beyond K = 5L, using the
/// asymptotic decay w_l ~ c*l^(-alpha-1).
template <typename Real>
Real weight_tail_bound(const WsgdWeights<Real>& w) {
  using std::abs;
  const Eigen::Index L = w.length() - 1;
  const Eigen::Index K = 5 * L;
  const auto ext = wsgd_weights(w.alpha, K);
  Real partial(0);
  for (Eigen::Index l = L + 1; l <= K; ++l) partial += ext.w(l);
  const Real remainder = Real(2) * Real(K) * abs(ext.w(K)) / w.alpha;
  return abs(partial) + remainder;
}

/// Evaluates the sign pattern of the WSGD weights on the stored (possibly
/// perturbed) sequence. Inequalities are strict for alpha < 2 and non-strict
/// at alpha == 2.
template <typename Real>
WeightPropertyReport check_weight_properties(const WsgdWeights<Real>& wts) {
  const auto& w = wts.w;
  const Eigen::Index L = w.size() - 1;
  const bool strict = wts.alpha < Real(2);
  auto ok = [strict](double margin) { return strict ? margin > 0 : margin >= 0; };

  WeightPropertyReport rep;
  rep.alpha = static_cast<double>(wts.alpha);

  auto add = [&](std::string name, double margin) {
    rep.checks.push_back({std::move(name), ok(margin), margin, -1});
  };
  add("w0_positive", static_cast<double>(w(0)));
  add("w1_negative", static_cast<double>(-w(1)));
  if (L >= 3) {
    double m = static_cast<double>(w(3));
    for (Eigen::Index l = 4; l <= L; ++l) m = std::min(m, static_cast<double>(w(l)));
    add("wl_positive_l_ge_3", m);
  }
  add("w0_plus_w2_positive", static_cast<double>(w(0) + w(2)));

  Real partial = w(0);
  double worst = std::numeric_limits<double>::infinity();
  long first_bad = -1;
  for (Eigen::Index m = 1; m <= L; ++m) {
    partial += w(m);
    worst = std::min(worst, static_cast<double>(-partial));
    if (first_bad < 0 && !ok(static_cast<double>(-partial))) first_bad = static_cast<long>(m);
  }
  // Every partial sum for m >= 1 must be negative (non-positive at alpha == 2).
  add("partial_sums_negative", worst);
  rep.checks.back().index = first_bad;

  rep.total_sum = static_cast<double>(partial);
  rep.tail_bound = static_cast<double>(weight_tail_bound(wts));
  const double tail_margin = std::min(-rep.total_sum, rep.total_sum + rep.tail_bound);
  const bool tail_ok = rep.total_sum <= 0 &&
                       (rep.total_sum > -rep.tail_bound || (rep.tail_bound == 0 && rep.total_sum == 0));
  rep.checks.push_back({"total_sum_within_tail", tail_ok, tail_margin, -1});
  return rep;
}

/// Dense symmetric matrix C with Delta_h^alpha u = h^(-alpha) C u on the
/// interior nodes, together with its Cholesky factor R (C = R^T R).
template <typename Real>
struct OperatorMatrix {
  Real alpha{2};
  Matrix<Real> C;
  std::optional<Matrix<Real>> chol;  // upper-triangular R

  Eigen::Index size() const { return C.rows(); }
};

/// Toeplitz matrix W with first column (w_1..w_{M-1}) and first row (w_1, w_0, 0, ...).
template <typename Real>
Matrix<Real> wsgd_toeplitz(const WsgdWeights<Real>& w, Eigen::Index M) {
  const Eigen::Index n = M - 1;
  Matrix<Real> W = Matrix<Real>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= std::min(i + 1, n - 1); ++j) W(i, j) = w.w(i - j + 1);
  return W;
}

template <typename Real>
OperatorMatrix<Real> assemble_operator(const WsgdWeights<Real>& w, Eigen::Index M) {
  if (M < 3) throw DomainError("assemble_operator: M must be at least 3");
  if (w.length() < M) throw DomainError("assemble_operator: need weights w_0..w_{M-1}");
  const Matrix<Real> W = wsgd_toeplitz(w, M);
  OperatorMatrix<Real> op;
  op.alpha = w.alpha;
  op.C = (W + W.transpose()) / (Real(2) * detail::half_turn_cos(w.alpha));
  op.C = (op.C + op.C.transpose()) / Real(2);
  op.chol = cholesky<Real>(op.C);
  return op;
}

template <typename Real>
OperatorMatrix<Real> assemble_operator(const Real& alpha, Eigen::Index M) {
  return assemble_operator(wsgd_weights(alpha, std::max<Eigen::Index>(M - 1, 2)), M);
}

/// Delta_h^alpha u by the direct double sum over the zero-extended field.
template <typename Real>
ComplexVector<Real> apply_fractional_laplacian(const ComplexVector<Real>& u, const WsgdWeights<Real>& w,
                                               const Real& h) {
  using std::pow;
  using Cx = std::complex<Real>;
  const Eigen::Index n = u.size();
  const Eigen::Index M = n + 1;
  if (n < 1) throw DomainError("apply_fractional_laplacian: empty field");
  if (w.length() < M) throw DomainError("apply_fractional_laplacian: weight sequence shorter than M");
  // u_j for 1-based j; zero outside 1..M-1
  auto at = [&](Eigen::Index j) { return (j >= 1 && j <= n) ? u(j - 1) : Cx(0); };

  const Real scale = Real(1) / (pow(h, w.alpha) * Real(2) * detail::half_turn_cos(w.alpha));
  ComplexVector<Real> out(n);
  for (Eigen::Index j = 1; j <= n; ++j) {
    Cx left(0), right(0);
    for (Eigen::Index l = 0; l <= j + 1 && l < w.length(); ++l) left += w.w(l) * at(j - l + 1);
    for (Eigen::Index l = 0; l <= M - j + 1 && l < w.length(); ++l) right += w.w(l) * at(j + l - 1);
    out(j - 1) = scale * (left + right);
  }
  return out;
}

/// The trigonometric factor of the WSGD symbol, omega in [0, pi].
template <typename Real>
Real h_function(const Real& alpha, const Real& omega) {
  using std::cos;
  require_alpha(alpha);
  if (!(omega >= Real(0) && omega <= detail::pi<Real>())) throw DomainError("h_function: omega must lie in [0,pi]");
  const Real a2 = alpha * alpha;
  const Real l1 = (a2 + Real(3) * alpha + Real(2)) / Real(12);
  const Real l0 = (Real(4) - a2) / Real(6);
  const Real lm1 = (a2 - Real(3) * alpha + Real(2)) / Real(12);
  const Real phase = alpha / Real(2) * (omega - detail::pi<Real>());
  return l1 * cos(phase - omega) + l0 * cos(phase) + lm1 * cos(phase + omega);
}

template <typename Real>
struct SymbolValue {
  Real closed_form;
  Real series;
};

/// Symbol f(alpha, theta) of h^alpha * Delta_h^alpha at theta = h*k: the closed
/// form through h_function, and the truncated weight series with L+1 terms.
template <typename Real>
SymbolValue<Real> symbol_f(const Real& alpha, const Real& theta, Eigen::Index L) {
  using std::cos;
  using std::pow;
  using std::sin;
  const Real c = detail::half_turn_cos(alpha);
  SymbolValue<Real> out;
  out.closed_form = pow(Real(2) * sin(theta / Real(2)), alpha) / c * h_function(alpha, theta);

  const auto w = wsgd_weights(alpha, std::max<Eigen::Index>(L, 2));
  Real s(0);
  for (Eigen::Index j = 0; j <= L; ++j) s += w.w(j) * cos(Real(j - 1) * theta);
  out.series = s / c;
  return out;
}

/// Lower spectral-equivalence constant 2^a (1 - a^2) / (3 pi^a cos(a pi / 2)).
template <typename Real>
Real c_alpha(const Real& alpha) {
  using std::pow;
  require_alpha(alpha);
  return pow(Real(2), alpha) * (Real(1) - alpha * alpha) /
         (Real(3) * pow(detail::pi<Real>(), alpha) * detail::half_turn_cos(alpha));
}

}  // namespace fgle
