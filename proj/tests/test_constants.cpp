#include "shiftgcd/constants.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace shiftgcd;

namespace {
// the defining equation written out independently of the implementation
double equation_gap(int n, double eps, double k) {
  const double lhs = n * (eps * k - 1.0) / (n - 1.0);
  const double rhs = 1.0 / (std::pow(2.0, 2.0 + std::max(1.0, k)) - 4.0);
  return lhs - rhs;
}
}  // namespace

TEST_CASE("gamma_of exact points") {
  CHECK(gamma_of(1.0) == 0.25);
  CHECK(gamma_of(0.5) == 0.25);  // max(1,K) branch
  CHECK(gamma_of(2.0) == 1.0 / 12.0);
  CHECK(gamma_of(3.0) < gamma_of(2.0));
  CHECK_THROWS_AS(gamma_of(0.0), DomainError);
}

TEST_CASE("kappa(2, 0.5) sits in (2.0, 2.1) with a tiny residual") {
  const double k = kappa(2, 0.5);
  CHECK(k > 2.0);
  CHECK(k < 2.1);
  CHECK(constants_report(2, 0.5).residual < 1e-12);
  // bisection cross-check: the equation changes sign around the root
  CHECK(equation_gap(2, 0.5, 2.0) < 0.0);
  CHECK(equation_gap(2, 0.5, 2.1) > 0.0);
  CHECK(equation_gap(2, 0.5, k - 1e-6) < 0.0);
  CHECK(equation_gap(2, 0.5, k + 1e-6) > 0.0);
}

TEST_CASE("kappa/theta across the (n, eps) grid") {
  for (int n = 2; n <= 10; ++n) {
    double prev_kappa = 0.0;
    for (int ie = 1; ie <= 9; ++ie) {
      const double eps = ie / 10.0;
      const ConstantsReport rep = constants_report(n, eps);
      INFO("n=" << n << " eps=" << eps);
      CHECK(rep.residual < 1e-12);
      CHECK(eps * rep.kappa > 1.0);
      CHECK(rep.theta > 0.0);
      CHECK(rep.gamma > 0.0);
      if (ie > 1) CHECK(rep.kappa < prev_kappa);  // decreasing in eps
      prev_kappa = rep.kappa;
    }
  }
  CHECK(constants_report(10, 0.9).residual < 1e-12);
}

TEST_CASE("the equation changes sign exactly once on the search bracket") {
  for (int n : {2, 5, 10}) {
    for (double eps : {0.1, 0.5, 0.9}) {
      const double lo = 1.0 / eps + 1e-12;
      const double hi = 16.0 / eps;  // left side is far above 1/4 = max gamma here
      int sign_changes = 0;
      double prev = equation_gap(n, eps, lo);
      for (int i = 1; i <= 4000; ++i) {
        const double k = lo + (hi - lo) * i / 4000.0;
        const double cur = equation_gap(n, eps, k);
        if ((prev < 0.0) != (cur < 0.0)) ++sign_changes;
        prev = cur;
      }
      INFO("n=" << n << " eps=" << eps);
      CHECK(sign_changes == 1);
    }
  }
}

TEST_CASE("theta worked values and monotonicity in n") {
  const double th = theta(2, 0.5);
  CHECK(th > 0.0);
  CHECK(th < 0.1);
  for (double eps : {0.2, 0.5, 0.8}) CHECK(theta(10, eps) < theta(2, eps));
  CHECK_THROWS_AS(theta(1, 0.5), DomainError);
  CHECK_THROWS_AS(theta(2, 0.0), DomainError);
  CHECK_THROWS_AS(theta(2, 1.0), DomainError);
}

TEST_CASE("plan_parameters closes both defining relations") {
  const ParameterPlan plan = plan_parameters(2, 0.5, 1e6);
  // 2 Q^(1-1/n) R = H
  CHECK(std::abs(2.0 * std::sqrt(plan.Q) * plan.R - plan.H) / plan.H < 1e-9);
  // R = n^(1/2K) H^(1/(eps K))
  const double r_expected =
      std::pow(2.0, 1.0 / (2.0 * plan.K)) * std::pow(1e6, 1.0 / (0.5 * plan.K));
  CHECK(std::abs(plan.R - r_expected) / r_expected < 1e-9);
  // psi^n Q = 1 by construction
  CHECK(std::abs(plan.psi * plan.psi * plan.Q - 1.0) < 1e-12);
  CHECK(plan.q_at_least_one == (plan.Q >= 1.0));

  CHECK_THROWS_AS(plan_parameters(2, 0.5, 1.0), DomainError);
}

TEST_CASE("plan invariants hold across the grid") {
  for (int n = 2; n <= 10; ++n) {
    for (int ie = 1; ie <= 9; ++ie) {
      const double eps = ie / 10.0;
      for (double H : {1e2, 1e6}) {
        const ParameterPlan plan = plan_parameters(n, eps, H);
        INFO("n=" << n << " eps=" << eps << " H=" << H);
        CHECK(std::abs(2.0 * std::pow(plan.Q, 1.0 - 1.0 / n) * plan.R - H) / H < 1e-9);
        const double r_expected = std::pow(static_cast<double>(n), 1.0 / (2.0 * plan.K)) *
                                  std::pow(H, 1.0 / (eps * plan.K));
        CHECK(std::abs(plan.R - r_expected) / r_expected < 1e-9);
        CHECK(std::abs(std::pow(plan.psi, n) * plan.Q - 1.0) < 1e-10);
        // exponent identity gamma/(eps n K) = (eps K - 1)/(eps (n-1) K)
        const double lhs = plan.gamma / (eps * n * plan.K);
        const double rhs = (eps * plan.K - 1.0) / (eps * (n - 1.0) * plan.K);
        CHECK(std::abs(lhs - rhs) / rhs < 1e-9);
      }
    }
  }
}
