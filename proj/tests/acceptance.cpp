// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fgle/experiments.hpp"
#include "fgle/spectral.hpp"
#include "fgle/stepper.hpp"
#include "fgle/wsgd.hpp"

using namespace fgle;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] AC%d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5g", v);
  return buf;
}

ComplexVector<double> random_field(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  ComplexVector<double> v(n);
  for (Eigen::Index j = 0; j < n; ++j) v(j) = {normal(rng), normal(rng)};
  return v;
}

const GridSpec kGaussGrid{-10.0, 10.0, 400};
const TimeGrid kGaussTime{1.0, 20};

void table1() {
  const double l2[] = {5.5462e-3, 1.3766e-3, 3.4353e-4};
  const double linf[] = {5.5486e-3, 1.3691e-3, 3.4117e-4};
  const double o1[] = {0, 2.0104, 2.0026};
  const double o2[] = {0, 2.0190, 2.0046};
  const auto rows = convergence_study(ConvergenceSpec{}, sech_problem_params(2.0));
  bool ok = rows.size() == 3;
  std::ostringstream d;
  for (std::size_t i = 0; ok && i < 3; ++i) {
    const auto& r = rows[i];
    ok = ok && std::abs(r.err_l2 - l2[i]) <= 5e-3 * l2[i] && std::abs(r.err_linf - linf[i]) <= 5e-3 * linf[i];
    d << "(" << num(r.err_l2) << ", " << num(r.err_linf);
    if (i > 0) {
      ok = ok && std::abs(*r.order1 - o1[i]) <= 0.02 && std::abs(*r.order2 - o2[i]) <= 0.02;
      d << ", " << num(*r.order1) << ", " << num(*r.order2);
    }
    d << ") ";
  }
  report(1, "exact-solution table, alpha = 2", ok, d.str());
}

void table2() {
  struct Expected {
    double alpha, l2[2], linf[2];
  };
  const Expected table[] = {{1.3, {1.2966e-2, 3.1803e-3}, {1.8415e-2, 4.4581e-3}},
                            {1.6, {1.0519e-2, 2.5499e-3}, {1.3001e-2, 3.0928e-3}},
                            {1.9, {6.7430e-3, 1.6458e-3}, {7.0782e-3, 1.7127e-3}}};
  ConvergenceSpec spec;
  spec.levels = 2;
  spec.reference = FineGridReference{0.025, 0.0005};
  bool ok = true;
  std::ostringstream d;
  for (const auto& e : table) {
    const auto rows = convergence_study(spec, sech_problem_params(e.alpha));
    auto within2 = [](double got, double ref) { return got <= 2 * ref && got >= ref / 2; };
    for (int i = 0; i < 2; ++i) ok = ok && within2(rows[i].err_l2, e.l2[i]) && within2(rows[i].err_linf, e.linf[i]);
    for (double o : {*rows[1].order1, *rows[1].order2}) ok = ok && o >= 1.85 && o <= 2.25;
    d << "alpha=" << e.alpha << " errs " << num(rows[0].err_l2) << "/" << num(rows[1].err_l2) << " orders "
      << num(*rows[1].order1) << "," << num(*rows[1].order2) << "; ";
  }
  report(2, "fractional-order convergence orders", ok, d.str());
}

void energy_identity() {
  const auto traj = run_simulation(gaussian_problem_params(1.8, 0.0), kGaussGrid, kGaussTime, gaussian_initial, {});
  double worst = 0;
  for (const auto& s : traj.diagnostics) worst = std::max(worst, s.energy_identity_residual);
  report(3, "discrete energy identity", traj.diagnostics.size() == 20 && worst <= 1e-10,
         "max residual " + num(worst) + " over " + std::to_string(traj.diagnostics.size()) + " steps");
}

void apriori_bound() {
  const auto decay = run_simulation(gaussian_problem_params(1.8, 0.0), kGaussGrid, kGaussTime, gaussian_initial, {});
  double worst_rise = -1e300;
  for (std::size_t n = 1; n < decay.norm_sq.size(); ++n)
    worst_rise = std::max(worst_rise, std::sqrt(decay.norm_sq[n]) - std::sqrt(decay.norm_sq[n - 1]));
  const bool decay_ok = worst_rise <= 1e-10;

  const double gamma = 3.0;
  const auto grow = run_simulation(gaussian_problem_params(1.8, gamma), kGaussGrid, kGaussTime, gaussian_initial, {});
  bool grow_ok = kGaussTime.tau() <= 1 / (2 * gamma);
  double worst_ratio = 0;
  for (std::size_t n = 0; n < grow.norm_sq.size(); ++n) {
    const double bound = std::exp(4 * gamma * grow.times[n]) * grow.norm_sq.front();
    worst_ratio = std::max(worst_ratio, grow.norm_sq[n] / bound);
  }
  // The bound is checked at every t_n, hence also with T in place of t_n.
  grow_ok = grow_ok && worst_ratio <= 1 + 1e-8;
  report(4, "a priori norm bounds", decay_ok && grow_ok,
         "max step rise " + num(worst_rise) + ", max ||u^n||^2/(exp(4 gamma t_n)||u^0||^2) " + num(worst_ratio));
}

void spectral_equivalence() {
  std::mt19937_64 rng(2024);
  double worst = 1e300;
  bool ok = true;
  for (double alpha : {1.2, 1.5, 1.8, 2.0}) {
    for (long M : {32, 128}) {
      const auto w = wsgd_weights(alpha, M);
      const double h = 20.0 / static_cast<double>(M);
      for (int k = 0; k < 100; ++k) {
        const auto rep = verify_energy_equivalence(ComplexField<double>(random_field(rng, M - 1), h), w);
        const double m = std::min(rep.lower_margin, rep.upper_margin) / rep.seminorm_sq;
        worst = std::min(worst, m);
        ok = ok && rep.lower_margin >= -1e-9 * rep.seminorm_sq && rep.upper_margin >= -1e-9 * rep.seminorm_sq;
      }
    }
  }
  report(5, "spectral equivalence of the operator", ok, "min relative margin " + num(worst));
}

void symbol_factor() {
  const double pi = std::numbers::pi;
  double worst_end = 0, worst_step = 1e300, worst_const = 0;
  for (int i = 1; i <= 20; ++i) {
    const double alpha = 1.0 + i / 20.0;
    const double c = alpha == 2.0 ? -1.0 : std::cos(alpha * pi / 2);
    worst_end = std::max({worst_end, std::abs(h_function(alpha, 0.0) - c),
                          std::abs(h_function(alpha, pi) - (1 - alpha * alpha) / 3)});
    double prev = h_function(alpha, 0.0);
    for (int k = 1; k < 1000; ++k) {
      const double v = h_function(alpha, std::min(pi, pi * k / 999));
      worst_step = std::min(worst_step, v - prev);
      if (alpha == 2.0) worst_const = std::max(worst_const, std::abs(v + 1));
      prev = v;
    }
  }
  const bool ok = worst_end <= 1e-14 && worst_step >= -1e-12 && worst_const <= 1e-14;
  report(6, "symbol factor endpoints and monotonicity", ok,
         "endpoint error " + num(worst_end) + ", min increment " + num(worst_step) + ", |h(2,.)+1| " + num(worst_const));
}

void coefficient_properties() {
  bool ok = true;
  std::ostringstream d;
  std::vector<std::string> bad;
  for (int i = 1; i <= 20; ++i) {
    const double alpha = 1.0 + i / 21.0;
    const auto rep = check_weight_properties(wsgd_weights(alpha, 2048));
    const bool total_ok = rep.total_sum <= 0 && rep.total_sum > -rep.tail_bound;
    ok = ok && rep.passed() && total_ok;
    for (const auto& c : rep.checks)
      if (!c.passed) {
        std::ostringstream s;
        s << c.name << "@alpha=" << num(alpha);
        if (c.index >= 0) s << "(m=" << c.index << ")";
        bad.push_back(s.str());
      }
  }
  d << bad.size() << " violations";
  for (const auto& b : bad) d << " " << b;
  report(7, "weight sign pattern and partial sums", ok, d.str());
}

void cholesky_identity() {
  std::mt19937_64 rng(99);
  double worst = 0;
  bool ok = true;
  for (double alpha : {1.2, 1.5, 1.8, 2.0}) {
    for (long M : {32, 128}) {
      const auto w = wsgd_weights(alpha, M);
      const auto op = assemble_operator(w, M);
      const double h = 20.0 / static_cast<double>(M);
      for (int k = 0; k < 100; ++k) {
        const ComplexField<double> u(random_field(rng, M - 1), h);
        const ComplexField<double> lap(apply_fractional_laplacian(u.values, w, h), h);
        const double lhs = inner_product(lap, u).real();
        const ComplexVector<double> Lu = std::pow(h, -alpha / 2) * (op.chol->cast<std::complex<double>>() * u.values);
        const double rhs = l2_norm_sq(Lu, h);
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
      }
    }
  }
  ok = worst <= 1e-10;
  double worst_fact = 0;
  for (double alpha : {1.2, 1.5, 1.8, 2.0}) {
    try {
      const auto op = assemble_operator(alpha, 1024);
      const Matrix<double>& R = *op.chol;
      worst_fact = std::max(worst_fact, (R.transpose() * R - op.C).norm() / op.C.norm());
    } catch (const NotPositiveDefinite&) {
      ok = false;
    }
  }
  ok = ok && worst_fact <= 1e-12;
  report(8, "Cholesky energy identity", ok,
         "max relative mismatch " + num(worst) + ", factor error at M=1024 " + num(worst_fact));
}

void operator_order() {
  bool ok = true;
  std::ostringstream d;
  for (double alpha : {1.3, 1.6, 1.9, 2.0}) {
    const auto r = operator_order_study(alpha, 0.1);
    ok = ok && r.richardson_order >= 1.8 && r.richardson_order <= 2.2;
    d << "alpha=" << alpha << " " << num(r.richardson_order);
    if (alpha == 2.0) {
      for (double o : r.exact_orders) ok = ok && o >= 1.8 && o <= 2.2;
      d << " (vs second derivative: " << num(r.exact_orders[0]) << ", " << num(r.exact_orders[1]) << ")";
    }
    d << "; ";
  }
  report(9, "spatial order of the operator", ok, d.str());
}

void inviscid_limit() {
  bool ok = true;
  std::ostringstream d;
  for (double alpha : {1.1, 1.4, 1.7, 2.0}) {
    ModelParams fse = gaussian_problem_params(alpha, 0.0);
    fse.eta = 1.0;
    fse.zeta = -2.0;
    const auto r = inviscid_limit_study(fse, {{0.1, 0.1}, {0.01, 0.01}, {0.001, 0.001}}, kGaussGrid, kGaussTime);
    d << "alpha=" << alpha;
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      d << " " << num(r.points[i].deviation);
      if (i > 0) ok = ok && r.points[i].deviation < r.points[i - 1].deviation;
    }
    d << "; ";
  }
  report(10, "inviscid limit", ok, d.str());
}

}  // namespace

int main() {
  const std::vector<void (*)()> criteria{table1,         table2,          energy_identity,  apriori_bound,
                                         spectral_equivalence, symbol_factor, coefficient_properties,
                                         cholesky_identity, operator_order, inviscid_limit};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "aborted", false, e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
