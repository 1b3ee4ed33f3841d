#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fgle/spectral.hpp"
#include "test_util.hpp"

using namespace fgle;
using fgle::testing::impulse;
using fgle::testing::random_complex;
using fgle::testing::random_real;
using fgle::testing::rel_diff;

namespace {

using CVec = ComplexVector<double>;
constexpr double pi = std::numbers::pi;

// Direct O(n) transform, no Horner.
std::complex<double> fourier_oracle(const CVec& u, double h, double k) {
  std::complex<double> s = 0;
  for (Eigen::Index j = 0; j < u.size(); ++j) s += u(j) * std::polar(1.0, -k * h * static_cast<double>(j + 1));
  return h / std::sqrt(2 * pi) * s;
}

// u_hat conj(v_hat) is a trigonometric polynomial of period 2 pi / h, so the
// periodic trapezoid rule with more than 2n nodes integrates it exactly.
std::complex<double> parseval_oracle(const CVec& u, const CVec& v, double h) {
  const int nodes = 4 * static_cast<int>(u.size()) + 16;
  const double dk = 2 * pi / h / nodes;
  std::complex<double> s = 0;
  for (int i = 0; i < nodes; ++i) {
    const double k = -pi / h + i * dk;
    s += fourier_oracle(u, h, k) * std::conj(fourier_oracle(v, h, k));
  }
  return s * dk;
}

}  // namespace

TEST_CASE("semi-discrete Fourier transform") {
  std::mt19937_64 rng(1);
  SUBCASE("zero input") {
    for (double k : {-3.0, 0.0, 1.7}) CHECK(semidiscrete_fourier(CVec(CVec::Zero(9)), 1.0, k) == 0.0);
  }
  SUBCASE("impulse, h = 1, has magnitude 1/sqrt(2 pi)") {
    for (double k : {-pi, -1.0, 0.0, 0.3, 2.5, pi})
      CHECK(std::abs(semidiscrete_fourier(impulse(9, 4), 1.0, k)) == doctest::Approx(1 / std::sqrt(2 * pi)).epsilon(1e-15));
  }
  SUBCASE("matches direct summation") {
    const CVec u = random_complex(rng, 40);
    for (double k : {-31.0, -2.0, 0.0, 5.5, 31.4})
      CHECK(std::abs(semidiscrete_fourier(u, 0.1, k) - fourier_oracle(u, 0.1, k)) <= 1e-13 * u.cwiseAbs().sum());
  }
  SUBCASE("Parseval") {
    const double h = 0.2;
    const ComplexField<double> u(random_complex(rng, 49), h), v(random_complex(rng, 49), h);
    const auto expected = inner_product(u, v);
    const auto quad = parseval_oracle(u.values, v.values, h);
    CHECK(std::abs(quad - expected) <= 1e-8 * std::abs(expected));
  }
  SUBCASE("frequency outside the band") {
    CHECK_THROWS_AS(semidiscrete_fourier(CVec(CVec::Ones(3)), 0.5, 2 * pi / 0.5 * 0.51), DomainError);
    CHECK_NOTHROW(semidiscrete_fourier(CVec(CVec::Ones(3)), 0.5, pi / 0.5));
  }
}

TEST_CASE("Sobolev seminorm") {
  std::mt19937_64 rng(2);
  SUBCASE("sigma = 0 gives the l2 norm") {
    for (int k = 0; k < 5; ++k) {
      const ComplexField<double> u(random_complex(rng, 63), 0.3);
      const double semi = sobolev_seminorm_sq(u.values, SobolevNormSpec<double>::standard(0.0, u.h, u.size()));
      CHECK(rel_diff(semi, l2_norm_sq(u.values, u.h)) < 1e-8);
    }
    const ComplexField<double> r(random_real(rng, 63).cast<std::complex<double>>(), 0.3);
    CHECK(rel_diff(sobolev_seminorm_sq(r.values, SobolevNormSpec<double>::standard(0.0, r.h, r.size())),
                   l2_norm_sq(r.values, r.h)) < 1e-8);
  }
  SUBCASE("zero input") {
    CHECK(sobolev_seminorm_sq(CVec(CVec::Zero(20)), SobolevNormSpec<double>::standard(0.7, 0.1, 20)) == 0.0);
  }
  SUBCASE("sigma = 1 on an impulse") {
    for (double h : {0.05, 0.5, 1.0}) {
      // integral of k^2 h^2 / (2 pi) over [-pi/h, pi/h]
      const double expected = pi * pi / (3 * h);
      const double got = sobolev_seminorm_sq(impulse(31, 12), SobolevNormSpec<double>::standard(1.0, h, 31));
      CHECK(rel_diff(got, expected) < 1e-12);
    }
  }
  SUBCASE("real and complex paths agree on real data") {
    const CVec r = random_real(rng, 40).cast<std::complex<double>>();
    CVec tilted = r;
    tilted *= std::complex<double>(0.6, 0.8);  // unit phase, so |u_hat| is unchanged
    const auto spec = SobolevNormSpec<double>::standard(0.65, 0.25, 40);
    CHECK(rel_diff(sobolev_seminorm_sq(r, spec), sobolev_seminorm_sq(tilted, spec)) < 1e-12);
  }
  SUBCASE("doubling the quadrature changes the result by less than 1e-8") {
    for (double sigma : {0.5, 0.55, 0.75, 0.9, 1.0}) {
      for (long n : {31, 63, 127}) {
        const CVec u = random_complex(rng, n);
        const double h = 20.0 / static_cast<double>(n + 1);
        auto spec = SobolevNormSpec<double>::standard(sigma, h, n);
        const double base = sobolev_seminorm_sq(u, spec);
        spec.quadrature_points *= 2;
        CHECK(rel_diff(base, sobolev_seminorm_sq(u, spec)) < 1e-8);
      }
    }
  }
  SUBCASE("invalid specifications") {
    CHECK_THROWS_AS(sobolev_seminorm_sq(CVec(CVec::Ones(10)), SobolevNormSpec<double>{1.2, 160, 1.0}), DomainError);
    CHECK_THROWS_AS(sobolev_seminorm_sq(CVec(CVec::Ones(10)), SobolevNormSpec<double>{0.5, 79, 1.0}), DomainError);
  }
}

TEST_CASE("energy equivalence") {
  std::mt19937_64 rng(3);
  const long M = 64;
  const double h = 20.0 / M;
  for (double alpha : {1.2, 1.5, 1.8, 2.0}) {
    const auto w = wsgd_weights(alpha, M);
    for (int k = 0; k < 100; ++k) {
      const auto rep = verify_energy_equivalence(ComplexField<double>(random_complex(rng, M - 1), h), w);
      CHECK(rep.passed());
      CHECK(rep.energy_real > 0);
      CHECK(std::abs(rep.energy_imag) <= 1e-12 * rep.energy_real);
    }
    const auto rep = verify_energy_equivalence(ComplexField<double>(impulse(M - 1, 20), h), w);
    CHECK(rep.lower_margin >= -rep.tolerance);
    CHECK(rep.upper_margin >= -rep.tolerance);
  }
}

TEST_CASE("interpolation inequality") {
  std::mt19937_64 rng(4);
  const ComplexField<double> u(random_complex(rng, 63), 20.0 / 64);
  SUBCASE("sigma0 = sigma") {
    const auto rep = verify_interpolation(u, 0.6, 0.6);
    CHECK(rep.holds);
    CHECK(rel_diff(rep.rhs, std::sqrt(2.0) * rep.lhs) < 1e-12);
  }
  SUBCASE("sigma0 = 0") {
    const auto rep = verify_interpolation(u, 0.0, 0.8);
    CHECK(rep.holds);
    CHECK(rel_diff(rep.lhs * rep.lhs, 2 * l2_norm_sq(u.values, u.h)) < 1e-8);
  }
  SUBCASE("random data at (0.5, 0.9)") {
    for (int k = 0; k < 20; ++k)
      CHECK(verify_interpolation(ComplexField<double>(random_complex(rng, 63), 20.0 / 64), 0.5, 0.9).holds);
  }
  SUBCASE("ordering") { CHECK_THROWS_AS(verify_interpolation(u, 0.9, 0.5), DomainError); }
}

TEST_CASE("Gagliardo-Nirenberg ratio is a finite diagnostic") {
  std::mt19937_64 rng(6);
  const ComplexField<double> u(random_complex(rng, 63), 20.0 / 64);
  for (double p : {2.0, 4.0, std::numeric_limits<double>::infinity()}) {
    const double r = gagliardo_nirenberg_ratio(u, p, 0.4, 0.8);
    CHECK(std::isfinite(r));
    CHECK(r > 0);
  }
}
