#pragma once

// Dense factorizations and grid-function inner products / norms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/LU>

#include "fgle/errors.hpp"
#include "fgle/types.hpp"

namespace fgle {

/// Upper-triangular R with C = R^T R. Throws NotPositiveDefinite on a
/// non-positive pivot.
template <typename Real>
Matrix<Real> cholesky(const Matrix<Real>& C) {
  if (C.rows() != C.cols()) throw DomainError("cholesky: matrix must be square");
  Eigen::LLT<Matrix<Real>> llt(C);
  if (llt.info() != Eigen::Success) {
    // Locate the first failing pivot for the error message.
    Eigen::Index k = 0;
    for (; k < C.rows(); ++k) {
      Eigen::LLT<Matrix<Real>> lead(C.topLeftCorner(k + 1, k + 1));
      if (lead.info() != Eigen::Success) break;
    }
    throw NotPositiveDefinite(static_cast<std::size_t>(k), std::numeric_limits<double>::quiet_NaN());
  }
  Matrix<Real> R = llt.matrixU();
  for (Eigen::Index i = 0; i < R.rows(); ++i)
    if (!(R(i, i) > Real(0)))
      throw NotPositiveDefinite(static_cast<std::size_t>(i), static_cast<double>(R(i, i)));
  return R;
}

/// LU factorization with partial pivoting of a complex matrix, reused across
/// many right-hand sides. Immutable after construction.
template <typename Real>
class FactorizedSystem {
 public:
  using MatrixType = ComplexMatrix<Real>;

  explicit FactorizedSystem(const MatrixType& A) {
    if (A.rows() != A.cols()) throw DomainError("lu_factor: matrix must be square");
    if (A.rows() == 0) throw DomainError("lu_factor: empty matrix");
    lu_.compute(A);
    using std::abs;
    const auto& LU = lu_.matrixLU();
    for (Eigen::Index i = 0; i < LU.rows(); ++i)
      if (!(abs(LU(i, i)) >= Real(1e-300)))
        throw SingularMatrix("lu_factor: pivot " + std::to_string(i) + " vanishes");
  }

  Eigen::Index size() const { return lu_.rows(); }

  ComplexVector<Real> solve(const ComplexVector<Real>& b) const {
    if (b.size() != size()) throw DomainError("solve: right-hand side has wrong length");
    return lu_.solve(b);
  }

  ComplexField<Real> solve(const ComplexField<Real>& b) const { return {solve(b.values), b.h}; }

  MatrixType reconstruct() const { return lu_.reconstructedMatrix(); }

 private:
  Eigen::PartialPivLU<MatrixType> lu_;
};

template <typename Real>
FactorizedSystem<Real> lu_factor(const ComplexMatrix<Real>& A) {
  return FactorizedSystem<Real>(A);
}

namespace detail {
template <typename Real>
void require_same_grid(const ComplexField<Real>& u, const ComplexField<Real>& v) {
  if (u.size() != v.size()) throw DomainError("grid functions have different lengths");
  if (u.h != v.h) throw DomainError("grid functions have different spacings");
}
}  // namespace detail

/// (u, v)_h = h * sum u_j conj(v_j)
template <typename Real>
std::complex<Real> inner_product(const ComplexField<Real>& u, const ComplexField<Real>& v) {
  detail::require_same_grid(u, v);
  // Eigen's dot conjugates its first argument.
  return u.h * v.values.dot(u.values);
}

template <typename Real>
Real l2_norm_sq(const ComplexVector<Real>& u, const Real& h) {
  return h * u.squaredNorm();
}

template <typename Real>
Real l2_norm(const ComplexField<Real>& u) {
  using std::sqrt;
  return sqrt(l2_norm_sq(u.values, u.h));
}

template <typename Real>
Real lp_norm(const ComplexField<Real>& u, const Real& p) {
  using std::abs;
  using std::pow;
  if (!(p >= Real(1))) throw DomainError("lp_norm: p must be at least 1");
  Real s(0);
  for (Eigen::Index j = 0; j < u.size(); ++j) s += pow(abs(u.values(j)), p);
  return pow(u.h * s, Real(1) / p);
}

template <typename Real>
Real linf_norm(const ComplexVector<Real>& u) {
  return u.size() ? u.cwiseAbs().maxCoeff() : Real(0);
}

template <typename Real>
Real linf_norm(const ComplexField<Real>& u) {
  return linf_norm(u.values);
}

}  // namespace fgle
