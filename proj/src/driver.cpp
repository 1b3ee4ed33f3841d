#include "fgle/driver.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "fgle/csv.hpp"
#include "fgle/experiments.hpp"
#include "fgle/verify.hpp"

namespace fgle {

namespace {

namespace fs = std::filesystem;

std::string in_dir(const fs::path& dir, const std::string& name) { return (dir / name).string(); }

int simulate(const RunConfig& c, const fs::path& dir, std::ostream& log) {
  const auto traj = run_simulation(c.model, c.grid, c.time, gaussian_initial, c.solver, {c.snapshot_times, true});
  write_norms_csv(in_dir(dir, "norms.csv"), traj.times, traj.norm_sq);
  write_diagnostics_csv(in_dir(dir, "diagnostics.csv"), traj.diagnostics);
  for (const auto& s : traj.snapshots) write_snapshot_csv(in_dir(dir, snapshot_filename(s.t)), c.grid, s.u);

  bool ok = true;
  for (std::size_t n = 0; n < traj.diagnostics.size(); ++n) {
    const double bound = std::max(1e-10, 10 * c.solver.iter_tol * traj.norm_sq[n] / c.time.tau());
    if (traj.diagnostics[n].energy_identity_residual > bound) {
      log << "energy identity residual " << traj.diagnostics[n].energy_identity_residual << " exceeds " << bound
          << " at step " << n << "\n";
      ok = false;
    }
  }
  log << "simulate: " << c.time.N << " steps, final ||u||_h^2 = " << format_real(traj.norm_sq.back()) << "\n";
  return ok ? 0 : 1;
}

int convergence(const RunConfig& c, const CommandOptions& opts, const fs::path& dir, std::ostream& log) {
  ConvergenceSpec spec;
  spec.base_tau = c.convergence.base_tau;
  spec.base_h = c.convergence.base_h;
  spec.levels = c.convergence.levels;
  spec.a = c.grid.a;
  spec.b = c.grid.b;
  spec.T = c.time.T;
  if (c.convergence.exact_reference) {
    spec.reference = ExactReference{};
  } else if (opts.full_reference) {
    spec.reference = FineGridReference{0.0125, 0.0001};
  } else {
    spec.reference = FineGridReference{c.convergence.h_ref, c.convergence.tau_ref};
  }
  const auto rows = convergence_study(spec, c.model, c.solver);
  write_convergence_csv(in_dir(dir, "convergence.csv"), rows);

  bool ok = true;
  for (const auto& r : rows) {
    log << "tau=" << r.tau << " h=" << r.h << " err_l2=" << r.err_l2 << " err_linf=" << r.err_linf;
    if (r.order1) log << " order1=" << *r.order1 << " order2=" << *r.order2;
    log << "\n";
    for (const auto& o : {r.order1, r.order2})
      if (o && !(*o >= 1.85 && *o <= 2.25)) ok = false;
  }
  return ok ? 0 : 1;
}

int decay(const RunConfig& c, const fs::path& dir, std::ostream& log) {
  auto gammas = c.gammas;
  const auto series = norm_decay_study(c.model, gammas, c.grid, c.time, c.solver);
  bool ok = true;
  for (const auto& s : series) {
    write_norms_csv(in_dir(dir, "norms_gamma" + format_short(s.gamma) + ".csv"), s.times, s.norm_sq);
    if (s.gamma <= 0 && c.model.kappa >= 0)
      for (std::size_t n = 1; n < s.norm_sq.size(); ++n)
        if (std::sqrt(s.norm_sq[n]) > std::sqrt(s.norm_sq[n - 1]) + 1e-10) ok = false;
    log << "gamma=" << s.gamma << " final ||u||_h^2 = " << format_real(s.norm_sq.back()) << "\n";
  }
  // Smaller gamma decays faster.
  for (const auto& lo : series)
    for (const auto& hi : series)
      if (lo.gamma < hi.gamma)
        for (std::size_t n = 1; n < lo.norm_sq.size(); ++n)
          if (lo.norm_sq[n] > hi.norm_sq[n] * (1 + 1e-12)) ok = false;
  return ok ? 0 : 1;
}

int inviscid(const RunConfig& c, const fs::path& dir, std::ostream& log) {
  std::vector<std::pair<double, double>> seq;
  for (std::size_t i = 0; i < c.upsilons.size(); ++i) seq.emplace_back(c.upsilons[i], c.kappas[i]);
  const auto res = inviscid_limit_study(c.model, seq, c.grid, c.time, c.solver);

  std::vector<std::vector<std::string>> cells;
  for (const auto& p : res.points)
    cells.push_back({format_real(p.upsilon), format_real(p.kappa), format_real(p.deviation)});
  write_csv(in_dir(dir, "inviscid.csv"), {"upsilon", "kappa", "deviation"}, cells);
  write_snapshot_csv(in_dir(dir, "profile_fse.csv"), c.grid, res.fse);
  for (std::size_t i = 0; i < res.profiles.size(); ++i)
    write_snapshot_csv(in_dir(dir, "profile_upsilon" + format_short(res.points[i].upsilon) + ".csv"), c.grid,
                       res.profiles[i]);

  bool ok = true;
  for (std::size_t i = 0; i < res.points.size(); ++i) {
    log << "upsilon=" << res.points[i].upsilon << " kappa=" << res.points[i].kappa
        << " deviation=" << format_real(res.points[i].deviation) << "\n";
    if (i > 0 && !(res.points[i].deviation < res.points[i - 1].deviation)) ok = false;
  }
  return ok ? 0 : 1;
}

int verify(const RunConfig& c, const fs::path& dir, std::ostream& log) {
  VerifyOptions opts;
  opts.alphas = c.verify_alphas;
  const auto rep = verify_suite(opts);
  std::vector<std::vector<std::string>> cells;
  for (const auto& ch : rep.checks)
    cells.push_back({format_real(ch.alpha), ch.name, ch.passed ? "pass" : "FAIL", format_real(ch.value)});
  write_csv(in_dir(dir, "verify.csv"), {"alpha", "check", "status", "value"}, cells);
  for (const auto& f : rep.failures()) log << "FAILED: " << f << "\n";
  log << "verify: " << rep.checks.size() << " checks, " << rep.failures().size() << " failed\n";
  return rep.passed() ? 0 : 1;
}

}  // namespace

int run_command(const RunConfig& config, const CommandOptions& opts, std::ostream& log) {
  config.validate();
  const fs::path dir = opts.out_dir.empty() ? fs::path(config.output_dir) : fs::path(opts.out_dir);
  fs::create_directories(dir);
  switch (config.mode) {
    case RunMode::simulate: return simulate(config, dir, log);
    case RunMode::convergence: return convergence(config, opts, dir, log);
    case RunMode::decay: return decay(config, dir, log);
    case RunMode::inviscid: return inviscid(config, dir, log);
    case RunMode::verify: return verify(config, dir, log);
  }
  return 2;
}

}  // namespace fgle
