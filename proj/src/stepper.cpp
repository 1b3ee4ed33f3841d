#include "fgle/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fgle {

void ModelParams::validate() const {
  require_alpha(alpha);
  // upsilon == 0 is admitted for the fractional Schrodinger limit.
  if (!(upsilon >= 0)) throw DomainError("upsilon must be non-negative");
  for (double v : {upsilon, eta, kappa, zeta, gamma})
    if (!std::isfinite(v)) throw DomainError("model coefficients must be finite");
}

Vector<double> GridSpec::interior_nodes() const {
  Vector<double> x(interior_size());
  for (long j = 1; j < M; ++j) x(j - 1) = node(j);
  return x;
}

void GridSpec::validate() const {
  if (!(b > a)) throw DomainError("grid requires b > a");
  if (M < 3) throw DomainError("grid requires M >= 3");
}

GridSpec GridSpec::with_spacing(double a, double b, double h) {
  if (!(h > 0)) throw DomainError("grid spacing must be positive");
  const double ratio = (b - a) / h;
  const double M = std::round(ratio);
  if (std::abs(ratio - M) > 1e-9 * std::max(1.0, ratio))
    throw DomainError("grid spacing " + std::to_string(h) + " does not divide [a,b]");
  GridSpec g{a, b, static_cast<long>(M)};
  g.validate();
  return g;
}

void TimeGrid::validate() const {
  if (!(T > 0)) throw DomainError("final time T must be positive");
  if (N < 1) throw DomainError("number of time steps N must be at least 1");
}

TimeGrid TimeGrid::with_step(double T, double tau) {
  if (!(tau > 0)) throw DomainError("time step must be positive");
  const double ratio = T / tau;
  const double N = std::round(ratio);
  if (std::abs(ratio - N) > 1e-9 * std::max(1.0, ratio))
    throw DomainError("time step " + std::to_string(tau) + " does not divide T");
  TimeGrid t{T, static_cast<long>(N)};
  t.validate();
  return t;
}

void SolverSettings::validate() const {
  if (!(iter_tol > 0)) throw DomainError("iter_tol must be positive");
  if (max_iters < 1) throw DomainError("max_iters must be at least 1");
}

Field sample_field(const GridSpec& grid, const std::function<Complex(double)>& u0) {
  grid.validate();
  ComplexVector<double> v(grid.interior_size());
  for (long j = 1; j < grid.M; ++j) v(j - 1) = u0(grid.node(j));
  return {std::move(v), grid.h()};
}

ComplexMatrix<double> system_matrix(const ModelParams& p, const GridSpec& g, double tau,
                                    const OperatorMatrix<double>& op) {
  if (op.size() != g.interior_size()) throw DomainError("operator size does not match grid");
  const Complex coupling = 0.5 * tau * p.diffusion() * std::pow(g.h(), -p.alpha);
  ComplexMatrix<double> A = coupling * op.C.cast<Complex>();
  A.diagonal().array() += Complex(1.0 - 0.5 * tau * p.gamma, 0.0);
  return A;
}

FactorizedSystem<double> build_system_matrix(const ModelParams& p, const GridSpec& g, double tau,
                                             const OperatorMatrix<double>& op) {
  return FactorizedSystem<double>(system_matrix(p, g, tau, op));
}

MidpointSystem::MidpointSystem(const ModelParams& p, const GridSpec& g, double tau)
    : params_((p.validate(), p)),
      grid_((g.validate(), g)),
      tau_(tau),
      weights_(wsgd_weights(p.alpha, std::max<Eigen::Index>(g.M - 1, 2))),
      op_(assemble_operator(weights_, g.M)),
      factors_(build_system_matrix(p, g, tau, op_)) {
  if (!(tau >= 0)) throw DomainError("time step must be non-negative");
}

namespace {

// Stacks real and imaginary parts as two columns so real matrices act on both at once.
Eigen::MatrixX2d split(const ComplexVector<double>& u) {
  Eigen::MatrixX2d X(u.size(), 2);
  X.col(0) = u.real();
  X.col(1) = u.imag();
  return X;
}

}  // namespace

ComplexVector<double> MidpointSystem::laplacian(const ComplexVector<double>& u) const {
  const Eigen::MatrixX2d Y = op_.C * split(u);
  const double scale = std::pow(grid_.h(), -params_.alpha);
  ComplexVector<double> out(u.size());
  out.real() = scale * Y.col(0);
  out.imag() = scale * Y.col(1);
  return out;
}

double MidpointSystem::lambda_norm_sq(const ComplexVector<double>& u) const {
  const Eigen::MatrixX2d Y = op_.chol->triangularView<Eigen::Upper>() * split(u);
  return std::pow(grid_.h(), 1.0 - params_.alpha) * Y.squaredNorm();
}

double energy_identity_residual(const MidpointSystem& sys, const ComplexVector<double>& u0,
                                const ComplexVector<double>& u1) {
  const auto& p = sys.params();
  const double h = sys.grid().h();
  const ComplexVector<double> z = 0.5 * (u0 + u1);
  const double z_sq = l2_norm_sq(z, h);
  const double z_l4 = h * z.cwiseAbs2().squaredNorm();
  const double rate = (l2_norm_sq(u1, h) - l2_norm_sq(u0, h)) / (2.0 * sys.tau());
  return rate + p.upsilon * sys.lambda_norm_sq(z) + p.kappa * z_l4 - p.gamma * z_sq;
}

StepResult fixed_point_step(const MidpointSystem& sys, const Field& u_n, const std::optional<Field>& u_prev,
                            const SolverSettings& s) {
  const auto& p = sys.params();
  const double tau = sys.tau();
  const Complex nl = p.nonlinearity();
  const ComplexVector<double>& un = u_n.values;
  if (un.size() != sys.grid().interior_size()) throw DomainError("fixed_point_step: field size mismatch");

  ComplexVector<double> z;
  if (u_prev) {
    if (u_prev->size() != un.size()) throw DomainError("fixed_point_step: previous field size mismatch");
    z = 1.5 * un - 0.5 * u_prev->values;
  } else {
    const ComplexVector<double> cubic = un.cwiseAbs2().cast<Complex>().cwiseProduct(un);
    z = un - 0.5 * tau * (p.diffusion() * sys.laplacian(un) + nl * cubic - p.gamma * un);
  }

  StepDiagnostics d;
  bool converged = false;
  for (int it = 1; it <= s.max_iters; ++it) {
    const ComplexVector<double> rhs = un - (0.5 * tau) * nl * z.cwiseAbs2().cast<Complex>().cwiseProduct(z);
    ComplexVector<double> next = sys.factors().solve(rhs);
    if (!next.allFinite()) throw NonConvergence("fixed-point iterate is not finite after " + std::to_string(it) + " iterations");
    d.iterations = it;
    d.final_increment = linf_norm<double>(next - z);
    z = std::move(next);
    if (d.final_increment <= s.iter_tol * std::max(1.0, linf_norm(z))) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NonConvergence("fixed-point iteration did not converge in " + std::to_string(s.max_iters) +
                         " iterations (last increment " + std::to_string(d.final_increment) + ")");

  Field u_next(2.0 * z - un, u_n.h);
  d.norm_sq = l2_norm_sq(u_next.values, u_next.h);
  d.energy_identity_residual = std::abs(energy_identity_residual(sys, un, u_next.values));
  return {std::move(u_next), d};
}

Trajectory run_simulation(const ModelParams& p, const GridSpec& g, const TimeGrid& t, const Field& u0,
                          const SolverSettings& s, const OutputPolicy& probes) {
  // N = 0 returns the sampled initial data; the grid type itself requires N >= 1.
  if (t.N != 0) t.validate();
  else if (!(t.T > 0)) throw DomainError("final time T must be positive");
  s.validate();
  if (u0.size() != g.interior_size()) throw DomainError("initial field does not match grid");
  if (!u0.all_finite()) throw DomainError("initial field has non-finite entries");

  Trajectory traj;
  traj.grid = g;
  traj.time = t;

  std::vector<std::pair<long, double>> wanted;
  for (double ts : probes.snapshot_times) {
    if (!(ts >= -1e-12 && ts <= t.T * (1 + 1e-12))) throw DomainError("snapshot time outside [0,T]");
    wanted.emplace_back(t.N == 0 ? 0 : std::lround(ts / t.tau()), ts);
  }
  auto capture = [&](long n, const Field& u) {
    for (const auto& [step, ts] : wanted)
      if (step == n) traj.snapshots.push_back({ts, n, u});
  };

  Field current(u0.values, g.h());
  traj.times.push_back(0.0);
  traj.norm_sq.push_back(l2_norm_sq(current.values, current.h));
  capture(0, current);

  if (t.N > 0) {
    const MidpointSystem sys(p, g, t.tau());
    std::optional<Field> previous;
    for (long n = 0; n < t.N; ++n) {
      StepResult r;
      try {
        r = fixed_point_step(sys, current, previous, s);
      } catch (const NonConvergence& e) {
        throw NonConvergence(std::string(e.what()) + " at step " + std::to_string(n), n);
      }
      previous = std::move(current);
      current = std::move(r.u_next);
      traj.times.push_back(t.time(n + 1));
      traj.norm_sq.push_back(r.diagnostics.norm_sq);
      if (probes.keep_diagnostics) traj.diagnostics.push_back(r.diagnostics);
      capture(n + 1, current);
    }
  }
  traj.final_state = std::move(current);
  return traj;
}

Trajectory run_simulation(const ModelParams& p, const GridSpec& g, const TimeGrid& t,
                          const std::function<Complex(double)>& u0, const SolverSettings& s,
                          const OutputPolicy& probes) {
  return run_simulation(p, g, t, sample_field(g, u0), s, probes);
}

}  // namespace fgle
