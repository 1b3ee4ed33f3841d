#include "fgle/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>

namespace fgle {

ModelParams sech_problem_params(double alpha, double upsilon) {
  ModelParams p;
  p.alpha = alpha;
  p.upsilon = upsilon;
  p.eta = 0.5;
  p.kappa = sech_problem_kappa(upsilon);
  p.zeta = -1.0;
  p.gamma = 0.0;
  return p;
}

ModelParams gaussian_problem_params(double alpha, double gamma) {
  ModelParams p;
  p.alpha = alpha;
  p.upsilon = 1.0;
  p.eta = 1.0;
  p.kappa = 1.0;
  p.zeta = 2.0;
  p.gamma = gamma;
  return p;
}

Complex gaussian_initial(double x) { return {std::exp(-2.0 * x * x), 0.0}; }

ErrorNorms error_norms(const Field& u, const Field& v) {
  if (u.size() != v.size() || u.h != v.h) throw DomainError("error_norms: fields live on different grids");
  const ComplexVector<double> e = u.values - v.values;
  return {std::sqrt(l2_norm_sq(e, u.h)), linf_norm(e)};
}

Field restrict_to_coarse(const Field& fine, const GridSpec& fine_grid, const GridSpec& coarse_grid) {
  if (fine.size() != fine_grid.interior_size()) throw DomainError("restrict_to_coarse: field does not match fine grid");
  if (fine_grid.a != coarse_grid.a || fine_grid.b != coarse_grid.b)
    throw DomainError("restrict_to_coarse: grids cover different intervals");
  if (coarse_grid.M <= 0 || fine_grid.M % coarse_grid.M != 0)
    throw DomainError("restrict_to_coarse: grids are not nested");
  const long r = fine_grid.M / coarse_grid.M;
  ComplexVector<double> v(coarse_grid.interior_size());
  for (long j = 1; j < coarse_grid.M; ++j) v(j - 1) = fine.values(j * r - 1);
  return {std::move(v), coarse_grid.h()};
}

double observed_order(double coarse_error, double fine_error) { return std::log2(coarse_error / fine_error); }

void fill_orders(std::vector<ConvergenceRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == 0) {
      rows[i].order1.reset();
      rows[i].order2.reset();
      continue;
    }
    rows[i].order1 = observed_order(rows[i - 1].err_l2, rows[i].err_l2);
    rows[i].order2 = observed_order(rows[i - 1].err_linf, rows[i].err_linf);
  }
}

namespace {

long nesting_ratio(double coarse, double fine, const char* what) {
  const double r = coarse / fine;
  const double n = std::round(r);
  if (n < 1 || std::abs(r - n) > 1e-9 * r)
    throw DomainError(std::string("convergence_study: reference ") + what + " does not divide the level " + what);
  return static_cast<long>(n);
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(const ConvergenceSpec& spec, const ModelParams& p,
                                              const SolverSettings& s) {
  if (spec.levels < 1) throw DomainError("convergence_study: need at least one level");
  p.validate();
  const double upsilon = p.upsilon;
  auto initial = [upsilon](double x) { return exact_solution_alpha2(x, 0.0, upsilon); };

  std::vector<GridSpec> grids;
  std::vector<TimeGrid> times;
  for (int i = 0; i < spec.levels; ++i) {
    const double scale = std::ldexp(1.0, -i);
    grids.push_back(GridSpec::with_spacing(spec.a, spec.b, spec.base_h * scale));
    times.push_back(TimeGrid::with_step(spec.T, spec.base_tau * scale));
  }

  std::optional<Trajectory> reference;
  if (const auto* fine = std::get_if<FineGridReference>(&spec.reference)) {
    const GridSpec ref_grid = GridSpec::with_spacing(spec.a, spec.b, fine->h_ref);
    const TimeGrid ref_time = TimeGrid::with_step(spec.T, fine->tau_ref);
    for (int i = 0; i < spec.levels; ++i) {
      nesting_ratio(grids[i].h(), ref_grid.h(), "h");
      nesting_ratio(times[i].tau(), ref_time.tau(), "tau");
      if (ref_grid.M % grids[i].M != 0) throw DomainError("convergence_study: grids are not nested");
    }
    reference = run_simulation(p, ref_grid, ref_time, initial, s, {{}, false});
  } else if (p.alpha != 2.0) {
    throw DomainError("convergence_study: the exact reference exists only for alpha = 2");
  }

  std::vector<ConvergenceRow> rows;
  for (int i = 0; i < spec.levels; ++i) {
    const auto traj = run_simulation(p, grids[i], times[i], initial, s, {{}, false});
    Field ref;
    if (reference) {
      ref = restrict_to_coarse(reference->final_state, reference->grid, grids[i]);
    } else {
      ref = sample_field(grids[i], [&](double x) { return exact_solution_alpha2(x, spec.T, upsilon); });
    }
    const auto err = error_norms(ref, traj.final_state);
    rows.push_back({times[i].tau(), grids[i].h(), err.l2, err.linf, std::nullopt, std::nullopt});
  }
  fill_orders(rows);
  return rows;
}

std::vector<NormSeries> norm_decay_study(const ModelParams& base, const std::vector<double>& gammas,
                                         const GridSpec& g, const TimeGrid& t, const SolverSettings& s) {
  std::vector<NormSeries> out;
  for (double gamma : gammas) {
    ModelParams p = base;
    p.gamma = gamma;
    auto traj = run_simulation(p, g, t, gaussian_initial, s, {{}, false});
    out.push_back({gamma, std::move(traj.times), std::move(traj.norm_sq)});
  }
  return out;
}

std::vector<ProfileSample> alpha_profile_study(const ModelParams& base, const std::vector<double>& alphas,
                                               const GridSpec& g, const TimeGrid& t, const SolverSettings& s) {
  std::vector<ProfileSample> out;
  for (double alpha : alphas) {
    ModelParams p = base;
    p.alpha = alpha;
    auto traj = run_simulation(p, g, t, gaussian_initial, s, {{}, false});
    out.push_back({alpha, std::move(traj.final_state)});
  }
  return out;
}

InviscidResult inviscid_limit_study(const ModelParams& fse_params,
                                    const std::vector<std::pair<double, double>>& upsilon_kappa,
                                    const GridSpec& g, const TimeGrid& t, const SolverSettings& s) {
  ModelParams fse = fse_params;
  fse.upsilon = 0.0;
  fse.kappa = 0.0;
  InviscidResult out;
  out.fse = run_simulation(fse, g, t, gaussian_initial, s, {{}, false}).final_state;
  for (const auto& [upsilon, kappa] : upsilon_kappa) {
    ModelParams p = fse;
    p.upsilon = upsilon;
    p.kappa = kappa;
    auto traj = run_simulation(p, g, t, gaussian_initial, s, {{}, false});
    out.points.push_back({upsilon, kappa, error_norms(traj.final_state, out.fse).l2});
    out.profiles.push_back(std::move(traj.final_state));
  }
  return out;
}

double gaussian_fractional_laplacian(double alpha, double a, double x) {
  // int_0^inf t^mu exp(-p t^2) cos(b t) dt = Gamma((mu+1)/2) / (2 p^((mu+1)/2)) 1F1((mu+1)/2; 1/2; -b^2/(4p))
  const double m = 0.5 * (alpha + 1.0);
  const double integral = 0.5 * boost::math::tgamma(m) * std::pow(4.0 * a, m) *
                          boost::math::hypergeometric_1F1(m, 0.5, -a * x * x);
  return std::sqrt(std::numbers::pi / a) / std::numbers::pi * integral;
}

OperatorOrderResult operator_order_study(double alpha, double h, double a, double b) {
  OperatorOrderResult res;
  res.alpha = alpha;
  std::vector<GridSpec> grids;
  std::vector<ComplexVector<double>> applied;
  for (int i = 0; i < 3; ++i) {
    const GridSpec g = GridSpec::with_spacing(a, b, h * std::ldexp(1.0, -i));
    const Field u = sample_field(g, gaussian_initial);
    const auto w = wsgd_weights(alpha, g.M - 1);
    applied.push_back(apply_fractional_laplacian(u.values, w, g.h()));
    grids.push_back(g);
    res.h.push_back(g.h());
  }
  const GridSpec& coarse = grids.front();
  auto on_coarse = [&](int level) {
    return restrict_to_coarse(Field(applied[level], grids[level].h()), grids[level], coarse);
  };
  const Field d0 = on_coarse(0), d1 = on_coarse(1), d2 = on_coarse(2);
  res.richardson_order = observed_order(error_norms(d0, d1).l2, error_norms(d1, d2).l2);

  const Field exact = sample_field(coarse, [&](double x) { return Complex(gaussian_fractional_laplacian(alpha, 2.0, x), 0.0); });
  for (const Field* d : {&d0, &d1, &d2}) res.exact_errors.push_back(error_norms(*d, exact).l2);
  for (std::size_t i = 1; i < res.exact_errors.size(); ++i)
    res.exact_orders.push_back(observed_order(res.exact_errors[i - 1], res.exact_errors[i]));
  return res;
}

}  // namespace fgle
