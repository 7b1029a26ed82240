#pragma once

// Truncated Toeplitz matrices J_n of a real (even) moment sequence.
//
// J_n is (n+1)x(n+1) with entry (i, j) = c_{|j-i|}. Its inverse is carried
// forward one order at a time with the bordering formula of Trench, which
// needs c_0 = 1; callers normalize by c_0 first.

#include "canspec/errors.hpp"
#include "canspec/types.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <optional>

namespace canspec {

/// Smallest admissible Delta_n = det(J_n)/det(J_{n-1}) (normalized moments).
template <typename Scalar>
inline constexpr Scalar positivity_threshold = Scalar(1e-12);

/// Largest matrix the dense oracles accept.
inline constexpr Index oracle_max_size = 12;

template <typename Scalar = double>
struct ToeplitzState {
  Index n = 0;         ///< order: inv is J_n^{-1}, (n+1)x(n+1)
  Matrix<Scalar> inv;  ///< J_n^{-1}, symmetric and persymmetric
  Scalar det = 1;      ///< det(J_n)
  Scalar delta = 1;    ///< Delta_n = det(J_n)/det(J_{n-1}); c_0 for n = 0
};

template <typename Scalar>
Matrix<Scalar> build_toeplitz(const MomentSequence<Scalar>& c, Index n) {
  if (n < 0 || c.size() < n + 1) throw InsufficientMoments(n + 1, c.size());
  Matrix<Scalar> J(n + 1, n + 1);
  for (Index i = 0; i <= n; ++i)
    for (Index j = 0; j <= n; ++j) J(i, j) = c[std::abs(j - i)];
  return J;
}

/// u_n = (c_1, ..., c_n)^T.
template <typename Scalar>
Vector<Scalar> moment_column(const MomentSequence<Scalar>& c, Index n) {
  if (c.size() < n + 1) throw InsufficientMoments(n + 1, c.size());
  return c.values.segment(1, n);
}

/// v_n = (c_n, ..., c_1)^T.
template <typename Scalar>
Vector<Scalar> reversed_moment_column(const MomentSequence<Scalar>& c, Index n) {
  return moment_column(c, n).reverse();
}

/// State for J_0 = [c_0].
template <typename Scalar>
ToeplitzState<Scalar> initial_toeplitz_state(Scalar c0) {
  if (!(c0 > Scalar(0))) throw NotPositiveDefinite(0);
  ToeplitzState<Scalar> s;
  s.n = 0;
  s.inv = Matrix<Scalar>::Constant(1, 1, Scalar(1) / c0);
  s.det = c0;
  s.delta = c0;
  return s;
}

/// det(J_n) = det(J_{n-1}) (c_0 - v_n^T J_{n-1}^{-1} v_n). Nonpositive results
/// are returned as-is; they mean the sequence is not positive definite.
template <typename Scalar>
Scalar det_step(const ToeplitzState<Scalar>& prev, Scalar c0, const Vector<Scalar>& v) {
  eigen_assert(v.size() == prev.inv.rows());
  return prev.det * (c0 - v.dot(prev.inv * v));
}

/// Determinant of the bordered matrix [J_{n-1}, v_n; 1...1, 1].
template <typename Scalar>
Scalar bordered_det(const ToeplitzState<Scalar>& prev, const Vector<Scalar>& v) {
  eigen_assert(v.size() == prev.inv.rows());
  return prev.det * (Scalar(1) - (prev.inv * v).sum());
}

/// J_n^{-1} from J_{n-1}^{-1} and u_n = (c_1..c_n)^T, assuming c_0 = 1.
template <typename Scalar>
ToeplitzState<Scalar> trench_update(const ToeplitzState<Scalar>& prev, const Vector<Scalar>& u) {
  const Index m = prev.inv.rows();
  eigen_assert(u.size() == m);
  const Vector<Scalar> Ju = prev.inv * u;
  const Scalar delta = Scalar(1) - u.dot(Ju);
  if (!(delta > positivity_threshold<Scalar>)) throw NotPositiveDefinite(prev.n + 1);

  ToeplitzState<Scalar> next;
  next.n = prev.n + 1;
  next.delta = delta;
  next.det = prev.det * delta;
  next.inv.resize(m + 1, m + 1);
  next.inv(0, 0) = Scalar(1) / delta;
  next.inv.block(0, 1, 1, m) = -Ju.transpose() / delta;
  next.inv.block(1, 0, m, 1) = -Ju / delta;
  next.inv.block(1, 1, m, m) = prev.inv + (Ju * Ju.transpose()) / delta;
  return next;
}

/// max |inv(i,j) - inv(j,i)| and |inv(i,j) - inv(n-j,n-i)|.
template <typename Derived>
typename Derived::Scalar persymmetry_defect(const Eigen::MatrixBase<Derived>& inv) {
  using Scalar = typename Derived::Scalar;
  const Index n = inv.rows() - 1;
  Scalar worst = 0;
  for (Index i = 0; i <= n; ++i)
    for (Index j = 0; j <= n; ++j) {
      worst = std::max(worst, std::abs(inv(i, j) - inv(j, i)));
      worst = std::max(worst, std::abs(inv(i, j) - inv(n - j, n - i)));
    }
  return worst;
}

struct PositivityReport {
  /// Smallest order n with Delta_n <= threshold, if any.
  std::optional<Index> first_failure;
  /// Largest n for which J_0..J_n were all positive definite (-1 if none).
  Index valid_through = -1;

  bool valid() const { return !first_failure.has_value(); }
};

/// Caratheodory-Toeplitz test run through the Trench recursion.
template <typename Scalar>
PositivityReport check_positive_definite(const MomentSequence<Scalar>& c) {
  PositivityReport report;
  if (c.size() == 0) return report;
  if (!(c[0] > Scalar(0))) {
    report.first_failure = 0;
    return report;
  }
  const MomentSequence<Scalar> normalized(c.values / c[0]);
  ToeplitzState<Scalar> state = initial_toeplitz_state(Scalar(1));
  report.valid_through = 0;
  for (Index n = 1; n < c.size(); ++n) {
    try {
      state = trench_update(state, moment_column(normalized, n));
    } catch (const NotPositiveDefinite&) {
      report.first_failure = n;
      return report;
    }
    report.valid_through = n;
  }
  return report;
}

template <typename Derived>
void require_oracle_size(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("oracle needs a square matrix");
  if (m.rows() > oracle_max_size) throw std::invalid_argument("matrix exceeds oracle size bound");
}

/// Dense pivoted-LU determinant; test oracle.
template <typename Derived>
typename Derived::Scalar brute_det(const Eigen::MatrixBase<Derived>& m) {
  require_oracle_size(m);
  if (m.rows() == 0) return typename Derived::Scalar(1);
  return Eigen::FullPivLU<Matrix<typename Derived::Scalar>>(m).determinant();
}

/// Dense pivoted-LU inverse; test oracle. Throws Singular.
template <typename Derived>
Matrix<typename Derived::Scalar> brute_inverse(const Eigen::MatrixBase<Derived>& m) {
  require_oracle_size(m);
  Eigen::FullPivLU<Matrix<typename Derived::Scalar>> lu(m);
  if (!lu.isInvertible()) throw Singular();
  return lu.inverse();
}

}  // namespace canspec
