#pragma once

// Shared generators and comparisons for the test programs.

#include "canspec/types.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace canspec::testing {

inline constexpr std::uint64_t kSeed = 20240917;

/// alphas uniform in (-bound, bound).
inline Vector<double> random_alphas(std::mt19937_64& gen, Index n, double bound = 0.9) {
  std::uniform_real_distribution<double> u(-bound, bound);
  Vector<double> a(n);
  for (Index i = 0; i < n; ++i) a[i] = u(gen);
  return a;
}

/// Moments of lambda * Lebesgue + sum_j w_j (delta_{theta_j} + delta_{-theta_j})/2,
/// normalized to c_0 = 1. The Lebesgue part keeps every J_n positive definite.
inline MomentSequence<double> random_valid_moments(std::mt19937_64& gen, Index n) {
  std::uniform_real_distribution<double> lam(0.2, 1.0), weight(0.05, 1.0),
      angle(0.0, std::numbers::pi);
  std::uniform_int_distribution<int> count(2, 6);
  const double lambda = lam(gen);
  const int atoms = count(gen);
  Vector<double> c = Vector<double>::Zero(n + 1);
  c[0] = lambda;
  for (int j = 0; j < atoms; ++j) {
    const double w = weight(gen), theta = angle(gen);
    for (Index k = 0; k <= n; ++k) c[k] += w * std::cos(static_cast<double>(k) * theta);
  }
  return MomentSequence<double>(c / c[0]);
}

inline double max_abs_diff(const Vector<double>& a, const Vector<double>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}  // namespace canspec::testing
