#pragma once

// Numerical studies: exact-solution and self-convergence tables, norm decay
// against gamma, alpha-dependence of profiles, the inviscid limit toward the
// fractional Schrodinger equation, and the spatial order of the operator.

#include <cmath>
#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "fgle/stepper.hpp"

namespace fgle {

/// Coefficients of the sech-profile test problem: eta = 1/2, zeta = -1, gamma = 0
/// and kappa = -upsilon (3 sqrt(1 + 4 upsilon^2) - 1) / (2 (2 + 9 upsilon^2)).
template <typename Real>
Real sech_problem_kappa(const Real& upsilon) {
  using std::sqrt;
  const Real s = sqrt(Real(1) + Real(4) * upsilon * upsilon);
  return -upsilon * (Real(3) * s - Real(1)) / (Real(2) * (Real(2) + Real(9) * upsilon * upsilon));
}

template <typename Real>
struct SechProfile {
  Real F, d, omega;
};

template <typename Real>
SechProfile<Real> sech_profile_constants(const Real& upsilon) {
  using std::sqrt;
  const Real s = sqrt(Real(1) + Real(4) * upsilon * upsilon);
  const Real d = (s - Real(1)) / (Real(2) * upsilon);
  const Real F = sqrt(d * s / (Real(-2) * sech_problem_kappa(upsilon)));
  const Real omega = -d * (Real(1) + Real(4) * upsilon * upsilon) / (Real(2) * upsilon);
  return {F, d, omega};
}

/// Exact solution a(x) exp(i d ln a(x) - i omega t), a(x) = F sech(x), valid for alpha = 2.
template <typename Real>
std::complex<Real> exact_solution_alpha2(const Real& x, const Real& t, const Real& upsilon) {
  using std::cos;
  using std::cosh;
  using std::log;
  using std::sin;
  const auto c = sech_profile_constants(upsilon);
  const Real amp = c.F / cosh(x);
  const Real phase = c.d * log(amp) - c.omega * t;
  return {amp * cos(phase), amp * sin(phase)};
}

/// Model coefficients of the sech-profile problem at the given alpha (upsilon = 0.3).
ModelParams sech_problem_params(double alpha, double upsilon = 0.3);

/// Coefficients of the Gaussian-data study: upsilon = eta = kappa = 1, zeta = 2.
ModelParams gaussian_problem_params(double alpha, double gamma);

/// exp(-2 x^2)
Complex gaussian_initial(double x);

struct ErrorNorms {
  double l2{0};
  double linf{0};
};

ErrorNorms error_norms(const Field& u, const Field& v);

/// Fine-grid field sampled at the nodes of a nested coarse grid on the same interval.
Field restrict_to_coarse(const Field& fine, const GridSpec& fine_grid, const GridSpec& coarse_grid);

struct ConvergenceRow {
  double tau{0};
  double h{0};
  double err_l2{0};
  double err_linf{0};
  std::optional<double> order1;
  std::optional<double> order2;
};

/// log2(coarse / fine)
double observed_order(double coarse_error, double fine_error);

/// Fills order1/order2 from consecutive rows.
void fill_orders(std::vector<ConvergenceRow>& rows);

struct ExactReference {};
struct FineGridReference {
  double h_ref{0.025};
  double tau_ref{0.0005};
};
using Reference = std::variant<ExactReference, FineGridReference>;

struct ConvergenceSpec {
  double base_tau{0.02};
  double base_h{0.2};
  int levels{3};
  Reference reference{ExactReference{}};
  double a{-16};
  double b{16};
  double T{1};
};

/// Runs each level (tau and h halved per level) and measures the error at T
/// against the exact solution or a nested fine-grid run.
std::vector<ConvergenceRow> convergence_study(const ConvergenceSpec& spec, const ModelParams& p,
                                              const SolverSettings& s = {});

struct NormSeries {
  double gamma{0};
  std::vector<double> times;
  std::vector<double> norm_sq;
};

/// ||u^n||_h^2 over time for each gamma, all other coefficients from `base`.
std::vector<NormSeries> norm_decay_study(const ModelParams& base, const std::vector<double>& gammas,
                                         const GridSpec& g, const TimeGrid& t, const SolverSettings& s = {});

struct ProfileSample {
  double alpha{0};
  Field u;
};

/// |u| at T for each alpha, other coefficients from `base`.
std::vector<ProfileSample> alpha_profile_study(const ModelParams& base, const std::vector<double>& alphas,
                                               const GridSpec& g, const TimeGrid& t, const SolverSettings& s = {});

struct InviscidPoint {
  double upsilon{0};
  double kappa{0};
  double deviation{0};  // ||u_FGLE - u_FSE||_h at T
};

struct InviscidResult {
  Field fse;
  std::vector<InviscidPoint> points;
  std::vector<Field> profiles;
};

/// Runs the FGLE for each (upsilon_k, kappa_k) and the FSE (upsilon = kappa = 0)
/// with the same eta, zeta, gamma, alpha, and reports the l2_h deviation at T.
InviscidResult inviscid_limit_study(const ModelParams& fse_params,
                                    const std::vector<std::pair<double, double>>& upsilon_kappa,
                                    const GridSpec& g, const TimeGrid& t, const SolverSettings& s = {});

/// (-Delta)^{alpha/2} exp(-a x^2) on the whole line,
/// (1/pi) sqrt(pi/a) int_0^inf xi^alpha exp(-xi^2/(4a)) cos(xi x) dxi, in closed form.
double gaussian_fractional_laplacian(double alpha, double a, double x);

struct OperatorOrderResult {
  double alpha{0};
  std::vector<double> h;
  double richardson_order{0};          // log2 |D_h - D_{h/2}| / |D_{h/2} - D_{h/4}|
  std::vector<double> exact_errors;     // l2_h error against the exact fractional Laplacian
  std::vector<double> exact_orders;
};

/// Applies Delta_h^alpha to exp(-2 x^2) on [a, b] for h, h/2, h/4 and measures
/// the observed order on the coarse nodes.
OperatorOrderResult operator_order_study(double alpha, double h, double a = -10, double b = 10);

}  // namespace fgle
