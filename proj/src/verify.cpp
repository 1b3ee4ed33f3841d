#include "fgle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fgle/experiments.hpp"
#include "fgle/spectral.hpp"
#include "fgle/stepper.hpp"

namespace fgle {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name + " (alpha=" + std::to_string(c.alpha) + ")");
  return out;
}

namespace {

ComplexVector<double> random_field(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  ComplexVector<double> v(n);
  for (Eigen::Index j = 0; j < n; ++j) v(j) = Complex(normal(rng), normal(rng));
  return v;
}

void weight_checks(VerifyReport& rep, const WsgdWeights<double>& w) {
  const auto props = check_weight_properties(w);
  for (const auto& c : props.checks) rep.checks.push_back({w.alpha, "weights." + c.name, c.passed, c.margin});
}

void symbol_checks(VerifyReport& rep, double alpha, int samples) {
  const double pi = std::numbers::pi;
  const double cosine = alpha == 2.0 ? -1.0 : std::cos(alpha * pi / 2);
  const double at0 = h_function(alpha, 0.0);
  const double atpi = h_function(alpha, pi);
  rep.checks.push_back({alpha, "h_function.at_zero", std::abs(at0 - cosine) <= 1e-14, std::abs(at0 - cosine)});
  const double endpoint = (1 - alpha * alpha) / 3;
  rep.checks.push_back({alpha, "h_function.at_pi", std::abs(atpi - endpoint) <= 1e-14, std::abs(atpi - endpoint)});

  double worst_step = std::numeric_limits<double>::infinity();
  double worst_const = 0;
  double prev = at0;
  for (int i = 1; i < samples; ++i) {
    const double omega = pi * i / (samples - 1);
    const double v = h_function(alpha, std::min(omega, pi));
    worst_step = std::min(worst_step, v - prev);
    worst_const = std::max(worst_const, std::abs(v + 1.0));
    prev = v;
  }
  rep.checks.push_back({alpha, "h_function.nondecreasing", worst_step >= -1e-12, worst_step});
  if (alpha == 2.0) rep.checks.push_back({alpha, "h_function.constant_at_alpha_2", worst_const <= 1e-14, worst_const});

  const double ca = c_alpha(alpha);
  double worst_lower = std::numeric_limits<double>::infinity();
  double worst_upper = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 200; ++i) {
    const double theta = pi * i / 200;
    const double f = symbol_f(alpha, theta, 2).closed_form;
    const double ta = std::pow(theta, alpha);
    worst_lower = std::min(worst_lower, f - ca * ta);
    worst_upper = std::min(worst_upper, ta - f);
  }
  rep.checks.push_back({alpha, "symbol.lower_bound", worst_lower >= -1e-12, worst_lower});
  rep.checks.push_back({alpha, "symbol.upper_bound", worst_upper >= -1e-12, worst_upper});
  rep.checks.push_back({alpha, "c_alpha.positive", ca > 0, ca});
}

void operator_checks(VerifyReport& rep, const WsgdWeights<double>& w, const VerifyOptions& opts,
                     std::mt19937_64& rng) {
  const double alpha = w.alpha;
  const Eigen::Index M = opts.operator_size;
  OperatorMatrix<double> op;
  try {
    op = assemble_operator(w, M);
  } catch (const NotPositiveDefinite& e) {
    rep.checks.push_back({alpha, "operator.positive_definite", false, -1});
    return;
  }
  rep.checks.push_back({alpha, "operator.symmetric", op.C == op.C.transpose(), 0});
  rep.checks.push_back({alpha, "operator.positive_definite", true, op.chol->diagonal().minCoeff()});

  const double h = 20.0 / static_cast<double>(M);
  double worst_identity = 0;
  double worst_lower = std::numeric_limits<double>::infinity();
  double worst_upper = std::numeric_limits<double>::infinity();
  bool equivalence_ok = true;
  for (int k = 0; k < opts.random_vectors; ++k) {
    const Field u(random_field(rng, M - 1), h);
    const Field lap(apply_fractional_laplacian(u.values, w, h), h);
    const double direct = inner_product(lap, u).real();
    const ComplexVector<double> Ru = op.chol->triangularView<Eigen::Upper>() * u.values;
    const double via_factor = std::pow(h, 1.0 - alpha) * Ru.squaredNorm();
    worst_identity = std::max(worst_identity, std::abs(direct - via_factor) / std::abs(via_factor));

    const auto eq = verify_energy_equivalence(u, w);
    equivalence_ok = equivalence_ok && eq.passed();
    worst_lower = std::min(worst_lower, eq.lower_margin / eq.seminorm_sq);
    worst_upper = std::min(worst_upper, eq.upper_margin / eq.seminorm_sq);
  }
  rep.checks.push_back({alpha, "cholesky.energy_identity", worst_identity <= 1e-10, worst_identity});
  rep.checks.push_back({alpha, "equivalence.lower", equivalence_ok && worst_lower >= -1e-9, worst_lower});
  rep.checks.push_back({alpha, "equivalence.upper", equivalence_ok && worst_upper >= -1e-9, worst_upper});
}

void stepper_checks(VerifyReport& rep, double alpha) {
  const GridSpec g{-10.0, 10.0, 200};
  const TimeGrid t{0.25, 5};
  const auto traj = run_simulation(gaussian_problem_params(alpha, 0.0), g, t, gaussian_initial, SolverSettings{});
  double worst = 0;
  for (const auto& d : traj.diagnostics) worst = std::max(worst, d.energy_identity_residual);
  rep.checks.push_back({alpha, "stepper.energy_identity", worst <= 1e-10, worst});
}

}  // namespace

VerifyReport verify_suite(const VerifyOptions& opts) {
  VerifyReport rep;
  std::mt19937_64 rng(opts.seed);
  for (double alpha : opts.alphas) {
    require_alpha(alpha);
    auto w = wsgd_weights(alpha, std::max<Eigen::Index>(opts.weight_length, opts.operator_size));
    if (opts.perturb_weights) opts.perturb_weights(w);
    weight_checks(rep, w);
    symbol_checks(rep, alpha, opts.monotonicity_samples);
    operator_checks(rep, w, opts, rng);
    stepper_checks(rep, alpha);
  }
  return rep;
}

}  // namespace fgle
