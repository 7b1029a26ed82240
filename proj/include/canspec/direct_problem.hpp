#pragma once

// Direct spectral problem for det-normalized diagonal step Hamiltonians:
// step heights h^n = phi_n(1)^2 determine the even spectral measure, either
// through its Verblunsky coefficients or directly through its moments.

#include "canspec/errors.hpp"
#include "canspec/opuc.hpp"
#include "canspec/toeplitz.hpp"
#include "canspec/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>
#include <vector>

namespace canspec {

template <typename Scalar>
void require_heights(const StepHeights<Scalar>& h) {
  for (Index n = 0; n < h.size(); ++n)
    if (!(h[n] > Scalar(0)) || !std::isfinite(h[n])) throw InvalidHeights(n);
}

/// alpha_n = (1 - r)/(1 + r) with r = h^{n+1}/h^n.
template <typename Scalar>
VerblunskySequence<Scalar> recover_verblunsky(const StepHeights<Scalar>& h) {
  require_heights(h);
  const Index N = std::max<Index>(h.size() - 1, 0);
  Vector<Scalar> alphas(N);
  for (Index n = 0; n < N; ++n) alphas[n] = (h[n] - h[n + 1]) / (h[n] + h[n + 1]);
  return VerblunskySequence<Scalar>(alphas);
}

/// Intermediate quantities of one step of the moment recursion, all in the
/// normalized variables (c_0 = 1, h^0 = 1).
template <typename Scalar = double>
struct MomentStep {
  Index n;
  Scalar delta;        ///< 1 - u_n^T J_{n-1}^{-1} u_n
  Scalar cross;        ///< D_n = u_n^T J_{n-1}^{-1} v_n
  Scalar border;       ///< 1 - 1^T J_{n-1}^{-1} u_n
  Scalar next_moment;  ///< normalized c_{n+1}
};

template <typename Scalar = double>
struct MomentRecovery {
  MomentSequence<Scalar> moments;
  std::vector<MomentStep<Scalar>> steps;
};

template <typename Scalar>
MomentRecovery<Scalar> recover_moments_traced(const StepHeights<Scalar>& h) {
  require_heights(h);
  using W = working_t<Scalar>;
  if constexpr (!std::is_same_v<W, Scalar>) {
    const auto wide = recover_moments_traced(StepHeights<W>(h.values.template cast<W>()));
    MomentRecovery<Scalar> out;
    out.moments = MomentSequence<Scalar>(wide.moments.values.template cast<Scalar>());
    for (const auto& s : wide.steps)
      out.steps.push_back({s.n, Scalar(s.delta), Scalar(s.cross), Scalar(s.border),
                           Scalar(s.next_moment)});
    return out;
  }
  MomentRecovery<Scalar> out;
  const Index count = h.size();
  if (count == 0) return out;

  const Scalar h0 = h[0];
  const Vector<Scalar> ht = h.values / h0;
  Vector<Scalar> c = Vector<Scalar>::Zero(count);
  c[0] = 1;
  if (count > 1) c[1] = (Scalar(1) - ht[1]) / (Scalar(1) + ht[1]);

  ToeplitzState<Scalar> state = initial_toeplitz_state(Scalar(1));
  for (Index n = 1; n + 1 < count; ++n) {
    const Vector<Scalar> u = c.segment(1, n);
    const Vector<Scalar> v = u.reverse();
    ToeplitzState<Scalar> next = trench_update(state, u);

    const Scalar delta = next.delta;
    const Vector<Scalar> Ju = state.inv * u;
    const Scalar cross = Ju.dot(v);
    const Scalar border = Scalar(1) - Ju.sum();
    const Scalar height = ht[n + 1];
    const Scalar b2 = border * border;

    // Solves h = b^2 (1 + (D - c)/delta) / (c + delta - D) for c = c_{n+1}.
    c[n + 1] = ((Scalar(1) + cross / delta) * b2 - (delta - cross) * height) /
               (height + b2 / delta);
    out.steps.push_back({n, delta, cross, border, c[n + 1]});
    state = std::move(next);
  }
  out.moments = MomentSequence<Scalar>(c / h0);
  return out;
}

/// Moments c_0..c_N from heights h^0..h^N; c_0 = 1/h^0.
template <typename Scalar>
MomentSequence<Scalar> recover_moments(const StepHeights<Scalar>& h) {
  return recover_moments_traced(h).moments;
}

template <typename Scalar = double>
struct RecoveryReport {
  VerblunskySequence<Scalar> alphas;
  MomentSequence<Scalar> moments;              ///< moment route
  MomentSequence<Scalar> moments_via_alphas;   ///< Verblunsky route
  Scalar max_cross_error = std::numeric_limits<Scalar>::infinity();
  Scalar height_roundtrip_error = std::numeric_limits<Scalar>::infinity();
  PositivityReport positivity;
  bool consistent = false;
};

/// Runs both routes on the same heights and compares them.
template <typename Scalar>
RecoveryReport<Scalar> cross_validate(const StepHeights<Scalar>& h, Scalar tol = Scalar(1e-9)) {
  require_heights(h);
  RecoveryReport<Scalar> report;
  if (h.size() == 0) {
    report.max_cross_error = report.height_roundtrip_error = 0;
    report.consistent = true;
    return report;
  }
  report.alphas = recover_verblunsky(h);
  report.moments_via_alphas = moments_from_verblunsky(report.alphas, Scalar(1) / h[0]);

  const Vector<Scalar> roundtrip = orthonormal_sq_at_one(report.alphas);
  report.height_roundtrip_error =
      ((roundtrip - h.values / h[0]).array().abs() / roundtrip.array()).maxCoeff();

  try {
    report.moments = recover_moments(h);
  } catch (const NotPositiveDefinite& e) {
    report.positivity.first_failure = e.order();
    return report;
  }
  report.max_cross_error =
      (report.moments.values - report.moments_via_alphas.values).cwiseAbs().maxCoeff();
  report.positivity = check_positive_definite(report.moments);
  report.consistent = report.max_cross_error <= tol && report.height_roundtrip_error <= tol &&
                      report.positivity.valid();
  return report;
}

}  // namespace canspec
