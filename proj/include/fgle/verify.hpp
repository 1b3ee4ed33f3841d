#pragma once

// Executable invariant suite over a set of fractional orders: WSGD weight
// signs, monotonicity of the symbol factor, symbol bounds, operator
// positivity, the Cholesky energy identity, spectral equivalence, and the
// discrete energy identity of the time stepper.

#include <functional>
#include <string>
#include <vector>

#include "fgle/wsgd.hpp"

namespace fgle {

struct VerifyCheck {
  double alpha{0};
  std::string name;
  bool passed{false};
  double value{0};  // margin or residual, depending on the check
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
  std::vector<std::string> failures() const;
};

struct VerifyOptions {
  std::vector<double> alphas{1.1, 1.3, 1.5, 1.7, 1.9, 2.0};
  Eigen::Index weight_length{2048};
  int monotonicity_samples{1000};
  Eigen::Index operator_size{64};  // M for operator and identity checks
  int random_vectors{20};
  unsigned long seed{20160731};
  /// Applied to every generated weight sequence before the weight-based checks.
  std::function<void(WsgdWeights<double>&)> perturb_weights;
};

VerifyReport verify_suite(const VerifyOptions& opts = {});

}  // namespace fgle
