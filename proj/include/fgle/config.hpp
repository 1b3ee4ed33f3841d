#pragma once

// Run configuration: a flat INI document with one section per concern.
//
//   [run]          mode, output_dir
//   [model]        alpha, upsilon, eta, kappa, zeta, gamma
//   [grid]         a, b, and one of M or h
//   [time]         T, and one of N or tau
//   [solver]       iter_tol, max_iters
//   [output]       snapshot_times (comma separated)
//   [convergence]  base_tau, base_h, levels, reference (exact | fine_grid), h_ref, tau_ref
//   [decay]        gammas (comma separated)
//   [inviscid]     upsilons, kappas (comma separated, equal length)
//   [verify]       alphas (comma separated)
//
// Unknown sections or keys are errors.

#include <string>
#include <vector>

#include "fgle/experiments.hpp"
#include "fgle/stepper.hpp"

namespace fgle {

enum class RunMode { simulate, convergence, decay, inviscid, verify };

std::string to_string(RunMode m);
RunMode parse_mode(const std::string& s);

struct ConvergenceConfig {
  double base_tau{0.02};
  double base_h{0.2};
  int levels{3};
  bool exact_reference{true};
  double h_ref{0.025};
  double tau_ref{0.0005};

  bool operator==(const ConvergenceConfig&) const = default;
};

struct RunConfig {
  RunMode mode{RunMode::simulate};
  ModelParams model{gaussian_problem_params(1.8, 0.0)};
  GridSpec grid{-10.0, 10.0, 400};
  TimeGrid time{1.0, 20};
  SolverSettings solver{};
  std::string output_dir{"out"};
  std::vector<double> snapshot_times{};
  ConvergenceConfig convergence{};
  std::vector<double> gammas{-2.0, -4.0, -6.0};
  std::vector<double> upsilons{0.1, 0.01, 0.001};
  std::vector<double> kappas{0.1, 0.01, 0.001};
  std::vector<double> verify_alphas{1.1, 1.3, 1.5, 1.7, 1.9, 2.0};

  void validate() const;
};

bool operator==(const ModelParams& x, const ModelParams& y);
bool operator==(const GridSpec& x, const GridSpec& y);
bool operator==(const TimeGrid& x, const TimeGrid& y);
bool operator==(const SolverSettings& x, const SolverSettings& y);
bool operator==(const RunConfig& x, const RunConfig& y);

/// Parses and validates. Throws ConfigError naming the line, key, or constraint.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical document; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& c);

}  // namespace fgle
