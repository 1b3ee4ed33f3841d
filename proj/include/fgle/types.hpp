#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Core>

#include "fgle/errors.hpp"

namespace fgle {

template <typename Real>
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Complex grid function on the interior nodes x_1..x_{M-1}; zero everywhere else.
template <typename Real>
struct ComplexField {
  ComplexVector<Real> values;
  Real h{1};

  ComplexField() = default;
  ComplexField(ComplexVector<Real> v, Real spacing) : values(std::move(v)), h(spacing) {}

  Eigen::Index size() const { return values.size(); }
  bool all_finite() const { return values.allFinite(); }
};

/// Throws DomainError unless alpha lies in (1, 2].
template <typename Real>
inline void require_alpha(const Real& alpha) {
  if (!(alpha > Real(1) && alpha <= Real(2))) throw DomainError("alpha must lie in (1,2]");
}

}  // namespace fgle
