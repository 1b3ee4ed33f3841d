#pragma once

// Semi-discrete Fourier transform of interior grid functions and the
// fractional Sobolev (semi-)norms built on it, plus executable checks of the
// norm inequalities satisfied by the WSGD operator.

#include <cmath>
#include <complex>

#include <boost/math/quadrature/gauss.hpp>
#include <Eigen/Core>

#include "fgle/errors.hpp"
#include "fgle/linalg.hpp"
#include "fgle/types.hpp"
#include "fgle/wsgd.hpp"

namespace fgle {

template <typename Real>
struct SobolevNormSpec {
  Real sigma{0};
  Eigen::Index quadrature_points{0};
  Real h{1};

  /// Default resolution: 16 nodes per interior grid node.
  static SobolevNormSpec standard(const Real& sigma, const Real& h, Eigen::Index interior_nodes) {
    return {sigma, 16 * interior_nodes, h};
  }

  void validate(Eigen::Index interior_nodes) const {
    if (!(sigma >= Real(0) && sigma <= Real(1))) throw DomainError("sigma must lie in [0,1]");
    if (quadrature_points < 8 * interior_nodes)
      throw DomainError("quadrature_points must be at least 8 per grid node");
    if (!(h > Real(0))) throw DomainError("h must be positive");
  }
};

/// u_hat(k) = (2 pi)^(-1/2) h sum_j u_j exp(-i k x_j) with x_j = origin + j h, j = 1..n.
template <typename Real>
std::complex<Real> semidiscrete_fourier(const ComplexVector<Real>& u, const Real& h, const Real& k,
                                        const Real& origin = Real(0)) {
  using std::abs;
  using std::cos;
  using std::sin;
  using std::sqrt;
  using Cx = std::complex<Real>;
  if (abs(k) > detail::pi<Real>() / h * (Real(1) + Real(8) * std::numeric_limits<Real>::epsilon()))
    throw DomainError("semidiscrete_fourier: |k| must not exceed pi/h");
  const Cx z(cos(k * h), -sin(k * h));
  Cx s(0);
  for (Eigen::Index j = u.size() - 1; j >= 0; --j) s = s * z + u(j);
  s *= z;  // lowest index is j = 1
  if (origin != Real(0)) s *= Cx(cos(k * origin), -sin(k * origin));
  return h / sqrt(Real(2) * detail::pi<Real>()) * s;
}

template <typename Real>
std::complex<Real> semidiscrete_fourier(const ComplexField<Real>& u, const Real& k) {
  return semidiscrete_fourier(u.values, u.h, k);
}

namespace detail {

constexpr int kGaussOrder = 20;
constexpr int kGradedLevels = 40;

// Integral over [0, K] of k^(2 sigma) g(k) for smooth g. Uniform Gauss-Legendre
// panels; the first panel is refined geometrically toward 0 to absorb the
// power singularity of the weight.
template <typename Real, typename F>
Real weighted_half_line_integral(F&& g, const Real& K, const Real& sigma, Eigen::Index nominal_points) {
  using std::pow;
  using Rule = boost::math::quadrature::gauss<Real, kGaussOrder>;
  const Eigen::Index panels = std::max<Eigen::Index>(1, (nominal_points + kGaussOrder - 1) / kGaussOrder);
  const Real width = K / Real(panels);
  auto integrand = [&](Real k) { return (sigma == Real(0) ? Real(1) : pow(k, Real(2) * sigma)) * g(k); };

  Real total(0);
  for (Eigen::Index p = panels - 1; p >= 1; --p)
    total += Rule::integrate(integrand, width * Real(p), width * Real(p + 1));
  Real hi = width;
  for (int level = 0; level < kGradedLevels; ++level) {
    const Real lo = hi / Real(2);
    total += Rule::integrate(integrand, lo, hi);
    hi = lo;
  }
  total += Rule::integrate(integrand, Real(0), hi);
  return total;
}

}  // namespace detail

/// |u|^2_{H^sigma_h} = integral over [-pi/h, pi/h] of |k|^(2 sigma) |u_hat(k)|^2.
template <typename Real>
Real sobolev_seminorm_sq(const ComplexVector<Real>& u, const SobolevNormSpec<Real>& spec) {
  using std::norm;
  spec.validate(u.size());
  const Real K = detail::pi<Real>() / spec.h;
  const bool real_field = u.imag().isZero(Real(0));
  auto folded = [&](Real k) {
    const Real plus = norm(semidiscrete_fourier(u, spec.h, k));
    if (real_field) return Real(2) * plus;
    return plus + norm(semidiscrete_fourier(u, spec.h, Real(-k)));
  };
  return detail::weighted_half_line_integral<Real>(folded, K, spec.sigma, spec.quadrature_points);
}

template <typename Real>
Real sobolev_seminorm(const ComplexField<Real>& u, const SobolevNormSpec<Real>& spec) {
  using std::sqrt;
  return sqrt(sobolev_seminorm_sq(u.values, spec));
}

/// ||u||^2_{H^sigma_h} = ||u||_h^2 + |u|^2_{H^sigma_h}
template <typename Real>
Real sobolev_norm_sq(const ComplexField<Real>& u, const SobolevNormSpec<Real>& spec) {
  return l2_norm_sq(u.values, u.h) + sobolev_seminorm_sq(u.values, spec);
}

struct EnergyEquivalenceReport {
  double energy_real{0};  // Re (Delta_h^alpha u, u)_h
  double energy_imag{0};
  double seminorm_sq{0};  // |u|^2_{H^{alpha/2}_h}
  double c_alpha{0};
  double lower_margin{0};
  double upper_margin{0};
  double tolerance{0};

  bool passed() const {
    return lower_margin >= -tolerance && upper_margin >= -tolerance && energy_real > 0;
  }
};

/// Evaluates C_alpha |u|^2 <= (Delta_h^alpha u, u)_h <= |u|^2 in the H^{alpha/2}_h seminorm.
template <typename Real>
EnergyEquivalenceReport verify_energy_equivalence(const ComplexField<Real>& u, const WsgdWeights<Real>& w,
                                                  Eigen::Index quadrature_points = 0) {
  const ComplexField<Real> lap(apply_fractional_laplacian(u.values, w, u.h), u.h);
  const auto energy = inner_product(lap, u);
  auto spec = SobolevNormSpec<Real>::standard(w.alpha / Real(2), u.h, u.size());
  if (quadrature_points > 0) spec.quadrature_points = quadrature_points;
  const Real semi = sobolev_seminorm_sq(u.values, spec);
  const Real ca = c_alpha(w.alpha);

  EnergyEquivalenceReport rep;
  rep.energy_real = static_cast<double>(energy.real());
  rep.energy_imag = static_cast<double>(energy.imag());
  rep.seminorm_sq = static_cast<double>(semi);
  rep.c_alpha = static_cast<double>(ca);
  rep.lower_margin = static_cast<double>(energy.real() - ca * semi);
  rep.upper_margin = static_cast<double>(semi - energy.real());
  rep.tolerance = 1e-9 * rep.seminorm_sq;
  return rep;
}

struct InterpolationReport {
  double lhs{0};  // ||u||_{H^sigma0_h}
  double rhs{0};  // sqrt(2) ||u||_{H^sigma_h}^{theta} ||u||_h^{1-theta}
  bool holds{false};
};

/// ||u||_{H^s0} <= sqrt(2) ||u||_{H^s}^{s0/s} ||u||_h^{1 - s0/s} for 0 <= s0 <= s <= 1.
template <typename Real>
InterpolationReport verify_interpolation(const ComplexField<Real>& u, const Real& sigma0, const Real& sigma) {
  using std::pow;
  using std::sqrt;
  if (!(Real(0) <= sigma0 && sigma0 <= sigma && sigma <= Real(1)))
    throw DomainError("verify_interpolation: need 0 <= sigma0 <= sigma <= 1");
  const Real theta = sigma == Real(0) ? Real(1) : sigma0 / sigma;
  const Real lhs = sqrt(sobolev_norm_sq(u, SobolevNormSpec<Real>::standard(sigma0, u.h, u.size())));
  const Real hs = sqrt(sobolev_norm_sq(u, SobolevNormSpec<Real>::standard(sigma, u.h, u.size())));
  const Real rhs = sqrt(Real(2)) * pow(hs, theta) * pow(l2_norm(u), Real(1) - theta);
  InterpolationReport rep{static_cast<double>(lhs), static_cast<double>(rhs), false};
  rep.holds = rep.lhs <= rep.rhs * (1 + 1e-12);
  return rep;
}

/// Empirical ratio ||u||_{l^p_h} / (||u||_{H^sigma}^{s0/s} ||u||_h^{1-s0/s}).
/// Diagnostic only: the constant bounding it is not known numerically.
template <typename Real>
Real gagliardo_nirenberg_ratio(const ComplexField<Real>& u, const Real& p, const Real& sigma0, const Real& sigma) {
  using std::isinf;
  using std::pow;
  using std::sqrt;
  if (!(Real(0) < sigma0 && sigma0 <= sigma && sigma <= Real(1)))
    throw DomainError("gagliardo_nirenberg_ratio: need 0 < sigma0 <= sigma <= 1");
  const Real lp = isinf(p) ? linf_norm(u) : lp_norm(u, p);
  const Real hs = sqrt(sobolev_norm_sq(u, SobolevNormSpec<Real>::standard(sigma, u.h, u.size())));
  const Real theta = sigma0 / sigma;
  return lp / (pow(hs, theta) * pow(l2_norm(u), Real(1) - theta));
}

}  // namespace fgle
