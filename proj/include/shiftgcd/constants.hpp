#pragma once

#include "shiftgcd/core.hpp"

namespace shiftgcd {

/// gamma(K) = 1 / (2^(2+max(1,K)) - 4); positive, non-increasing in K.
inline double gamma_of(double K) {
  if (!(K > 0)) throw DomainError("gamma_of: K must be > 0");
  return 1.0 / (std::pow(2.0, 2.0 + std::max(1.0, K)) - 4.0);
}

namespace detail {
inline void check_n_eps(int n, double epsilon) {
  if (n < 2) throw DomainError("n must be >= 2");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("eps must lie in (0,1)");
}

// Signed gap of the defining equation n(eps*k - 1)/(n-1) = gamma(k).
// The left side is strictly increasing, the right side positive and
// non-increasing, so the root is unique and bracketed bisection cannot fail.
inline double kappa_gap(int n, double epsilon, double k) {
  return static_cast<double>(n) * (epsilon * k - 1.0) / (n - 1.0) - gamma_of(k);
}

struct KappaSolution {
  double kappa;
  double residual;
};

inline KappaSolution solve_kappa(int n, double epsilon) {
  check_n_eps(n, epsilon);
  double lo = 1.0 / epsilon + 1e-15;  // left side is <= 0 up to 1/eps
  if (kappa_gap(n, epsilon, lo) >= 0.0)
    return {lo, std::abs(kappa_gap(n, epsilon, lo))};
  double hi = std::max(2.0, 2.0 * lo);
  int expansions = 0;
  while (kappa_gap(n, epsilon, hi) <= 0.0) {
    hi *= 2.0;
    if (++expansions > 200)
      throw InternalError("kappa: failed to bracket the root");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    (kappa_gap(n, epsilon, mid) < 0.0 ? lo : hi) = mid;
  }
  const double k = 0.5 * (lo + hi);
  return {k, std::abs(kappa_gap(n, epsilon, k))};
}
}  // namespace detail

/// Root of n(eps*kappa - 1)/(n-1) = 1/(2^(2+max(1,kappa)) - 4).
inline double kappa(int n, double epsilon) {
  return detail::solve_kappa(n, epsilon).kappa;
}

/// theta(n,eps) = (1 - 1/(eps*kappa)) / (n-1); strictly positive since the
/// root forces eps*kappa > 1.
inline double theta(int n, double epsilon) {
  const double k = kappa(n, epsilon);
  return (1.0 - 1.0 / (epsilon * k)) / (n - 1.0);
}

struct ConstantsReport {
  int n = 0;
  double epsilon = 0.0;
  double kappa = 0.0;
  double theta = 0.0;
  double gamma = 0.0;
  double residual = 0.0;  // |defining equation gap| at the returned kappa
};

inline ConstantsReport constants_report(int n, double epsilon) {
  const auto sol = detail::solve_kappa(n, epsilon);
  ConstantsReport r;
  r.n = n;
  r.epsilon = epsilon;
  r.kappa = sol.kappa;
  r.residual = sol.residual;
  r.gamma = gamma_of(sol.kappa);
  r.theta = (1.0 - 1.0 / (epsilon * sol.kappa)) / (n - 1.0);
  return r;
}

/// The (Q, R, psi) plan behind the shifted-gcd growth bound, with psi_i set
/// to the common value Q^(-1/n).
struct ParameterPlan {
  double H = 0.0;
  double K = 0.0;      // kappa(n, eps)
  double gamma = 0.0;  // gamma(K)
  double A = 0.0;
  double R = 0.0;
  double Q = 0.0;
  double psi = 0.0;
  // Q >= 1 makes the gcd floor height(h) * Q^(1/n) meaningful; flagged,
  // never an error, since the source analysis is asymptotic.
  bool q_at_least_one = false;
  // psi <= (log Q)^(-n) advisory ceiling (meaningful only for Q > 1).
  bool psi_within_log_ceiling = false;
};

/// Solves 2 Q^(1-1/n) R = H together with Q = (0.5)^(n/(n-1)) A^(-1) R^gamma
/// and R = n^(1/2K) H^(1/(eps K)); A is pinned by A^((n-1)/(gamma(n-1)+n))
/// = n^(1/2K) so both relations hold at once.
inline ParameterPlan plan_parameters(int n, double epsilon, double H) {
  detail::check_n_eps(n, epsilon);
  if (!(H >= 2.0)) throw DomainError("plan_parameters: H must be >= 2");
  const auto sol = detail::solve_kappa(n, epsilon);
  ParameterPlan plan;
  plan.H = H;
  plan.K = sol.kappa;
  plan.gamma = gamma_of(sol.kappa);
  const double g = plan.gamma;
  const double denom = g * (n - 1.0) + n;  // = n*gamma - gamma + n
  plan.A = std::pow(static_cast<double>(n), denom / (2.0 * sol.kappa * (n - 1.0)));
  plan.R = std::pow(plan.A, (n - 1.0) / denom) * std::pow(H, n / denom);
  plan.Q = std::pow(0.5, n / (n - 1.0)) * std::pow(plan.R, g) / plan.A;
  plan.psi = std::pow(plan.Q, -1.0 / n);
  plan.q_at_least_one = plan.Q >= 1.0;
  const double logQ = std::log(plan.Q);
  plan.psi_within_log_ceiling = logQ > 0.0 && plan.psi <= std::pow(logQ, -n);
  return plan;
}

}  // namespace shiftgcd
