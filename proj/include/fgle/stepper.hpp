#pragma once

// Implicit midpoint time integration of the truncated fractional
// Ginzburg-Landau equation
//
//   u_t + (upsilon + i eta) (-Delta)^{alpha/2} u + (kappa + i zeta) |u|^2 u - gamma u = 0
//
// on (a, b) with u = 0 outside, using the WSGD operator in space. Each step
// solves the midpoint equation for z = u^{n+1/2} by a linearized fixed-point
// iteration whose linear part A is constant in time and factorized once.

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "fgle/linalg.hpp"
#include "fgle/types.hpp"
#include "fgle/wsgd.hpp"

namespace fgle {

using Complex = std::complex<double>;
using Field = ComplexField<double>;

struct ModelParams {
  double upsilon{1};
  double eta{0};
  double kappa{0};
  double zeta{0};
  double gamma{0};
  double alpha{2};

  Complex diffusion() const { return {upsilon, eta}; }
  Complex nonlinearity() const { return {kappa, zeta}; }
  void validate() const;
};

struct GridSpec {
  double a{-10};
  double b{10};
  long M{200};

  double h() const { return (b - a) / static_cast<double>(M); }
  double node(long j) const { return a + static_cast<double>(j) * h(); }
  Eigen::Index interior_size() const { return M - 1; }
  /// x_1 .. x_{M-1}
  Vector<double> interior_nodes() const;
  void validate() const;

  /// Grid on [a, b] whose spacing is `h`; throws unless (b - a)/h is an integer.
  static GridSpec with_spacing(double a, double b, double h);
};

struct TimeGrid {
  double T{1};
  long N{20};

  double tau() const { return T / static_cast<double>(N); }
  double time(long n) const { return static_cast<double>(n) * T / static_cast<double>(N); }
  void validate() const;

  static TimeGrid with_step(double T, double tau);
};

struct SolverSettings {
  double iter_tol{1e-14};
  int max_iters{100};

  void validate() const;
};

struct StepDiagnostics {
  int iterations{0};
  double final_increment{0};
  double energy_identity_residual{0};
  double norm_sq{0};  // ||u^{n+1}||_h^2
};

/// Samples u0 on the interior nodes of `grid`.
Field sample_field(const GridSpec& grid, const std::function<Complex(double)>& u0);

/// A = (1 - tau gamma / 2) I + (tau / 2)(upsilon + i eta) h^{-alpha} C.
ComplexMatrix<double> system_matrix(const ModelParams& p, const GridSpec& g, double tau,
                                    const OperatorMatrix<double>& op);

FactorizedSystem<double> build_system_matrix(const ModelParams& p, const GridSpec& g, double tau,
                                             const OperatorMatrix<double>& op);

/// Everything a step needs that stays fixed over a run.
class MidpointSystem {
 public:
  MidpointSystem(const ModelParams& p, const GridSpec& g, double tau);

  const ModelParams& params() const { return params_; }
  const GridSpec& grid() const { return grid_; }
  double tau() const { return tau_; }
  const WsgdWeights<double>& weights() const { return weights_; }
  const OperatorMatrix<double>& op() const { return op_; }
  const FactorizedSystem<double>& factors() const { return factors_; }

  /// Delta_h^alpha u = h^{-alpha} C u
  ComplexVector<double> laplacian(const ComplexVector<double>& u) const;
  /// ||Lambda^alpha u||_h^2 with Lambda^alpha = h^{-alpha/2} R, C = R^T R
  double lambda_norm_sq(const ComplexVector<double>& u) const;

 private:
  ModelParams params_;
  GridSpec grid_;
  double tau_;
  WsgdWeights<double> weights_;
  OperatorMatrix<double> op_;
  FactorizedSystem<double> factors_;
};

struct StepResult {
  Field u_next;
  StepDiagnostics diagnostics;
};

/// Residual of the discrete energy identity
///   (||u1||^2 - ||u0||^2)/(2 tau) + upsilon ||Lambda z||^2 + kappa ||z||_{l4}^4 - gamma ||z||^2,
/// with z = (u0 + u1)/2.
double energy_identity_residual(const MidpointSystem& sys, const ComplexVector<double>& u0,
                                const ComplexVector<double>& u1);

/// One implicit midpoint step. `u_prev` selects the extrapolated predictor
/// (n >= 1); without it the explicit n = 0 predictor is used.
StepResult fixed_point_step(const MidpointSystem& sys, const Field& u_n, const std::optional<Field>& u_prev,
                            const SolverSettings& s);

struct OutputPolicy {
  std::vector<double> snapshot_times;  // mapped to the nearest time level
  bool keep_diagnostics{true};
};

struct Snapshot {
  double t{0};
  long step{0};
  Field u;
};

struct Trajectory {
  GridSpec grid;
  TimeGrid time;
  std::vector<double> times;    // t_0 .. t_N
  std::vector<double> norm_sq;  // ||u^n||_h^2, n = 0..N
  std::vector<StepDiagnostics> diagnostics;  // one per step, n = 0..N-1
  std::vector<Snapshot> snapshots;
  Field final_state;
};

Trajectory run_simulation(const ModelParams& p, const GridSpec& g, const TimeGrid& t, const Field& u0,
                          const SolverSettings& s, const OutputPolicy& probes = {});

Trajectory run_simulation(const ModelParams& p, const GridSpec& g, const TimeGrid& t,
                          const std::function<Complex(double)>& u0, const SolverSettings& s,
                          const OutputPolicy& probes = {});

}  // namespace fgle
