#pragma once

#include <complex>
#include <random>

#include "fgle/types.hpp"

namespace fgle::testing {

inline ComplexVector<double> random_complex(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  ComplexVector<double> v(n);
  for (Eigen::Index j = 0; j < n; ++j) v(j) = {normal(rng), normal(rng)};
  return v;
}

inline Vector<double> random_real(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  Vector<double> v(n);
  for (Eigen::Index j = 0; j < n; ++j) v(j) = normal(rng);
  return v;
}

inline ComplexVector<double> impulse(Eigen::Index n, Eigen::Index at) {
  ComplexVector<double> v = ComplexVector<double>::Zero(n);
  v(at) = 1.0;
  return v;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace fgle::testing
