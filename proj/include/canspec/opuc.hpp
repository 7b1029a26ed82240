#pragma once

// Orthogonal polynomials on the unit circle for even measures.
//
// Polynomials are dense real coefficient vectors in ascending degree. The
// inner product is <f, g> = (1/2pi) \int f conj(g) d\mu, so <z^k, 1> = c_k.

#include "canspec/errors.hpp"
#include "canspec/toeplitz.hpp"
#include "canspec/types.hpp"

#include <cmath>

namespace canspec {

/// Monic orthogonal polynomial Phi_n and its reverse Phi_n^*.
template <typename Scalar = double>
struct MonicPair {
  Vector<Scalar> phi;
  Vector<Scalar> phi_star;

  Index degree() const { return phi.size() - 1; }

  static MonicPair unit() {
    return {Vector<Scalar>::Ones(1), Vector<Scalar>::Ones(1)};
  }
};

/// P^*(z) = z^n conj(P(1/conj z)); for real coefficients this reverses them.
template <typename Scalar>
Vector<Scalar> reverse_polynomial(const Vector<Scalar>& p) {
  return p.reverse();
}

template <typename Scalar, typename Arg>
auto evaluate_polynomial(const Vector<Scalar>& p, const Arg& z) {
  using Result = decltype(Scalar() * z);
  Result acc(0);
  for (Index k = p.size() - 1; k >= 0; --k) acc = acc * z + p[k];
  return acc;
}

template <typename Scalar>
void require_verblunsky(Scalar alpha, Index index) {
  if (!(std::abs(alpha) < Scalar(1))) throw InvalidVerblunsky(index);
}

template <typename Scalar>
void require_verblunsky(const VerblunskySequence<Scalar>& alphas) {
  for (Index j = 0; j < alphas.size(); ++j) require_verblunsky(alphas[j], j);
}

/// Phi_{n+1} = z Phi_n - alpha Phi_n^*,  Phi_{n+1}^* = Phi_n^* - alpha z Phi_n.
template <typename Scalar>
MonicPair<Scalar> szego_step(const MonicPair<Scalar>& pair, Scalar alpha) {
  require_verblunsky(alpha, pair.degree());
  const Index m = pair.phi.size();
  MonicPair<Scalar> next;
  next.phi = Vector<Scalar>::Zero(m + 1);
  next.phi_star = Vector<Scalar>::Zero(m + 1);
  next.phi.tail(m) = pair.phi;
  next.phi.head(m) -= alpha * pair.phi_star;
  next.phi_star.head(m) = pair.phi_star;
  next.phi_star.tail(m) -= alpha * pair.phi;
  return next;
}

/// Phi_n generated by the first n coefficients.
template <typename Scalar>
MonicPair<Scalar> monic_polynomial(const VerblunskySequence<Scalar>& alphas, Index n) {
  MonicPair<Scalar> pair = MonicPair<Scalar>::unit();
  for (Index j = 0; j < n; ++j) pair = szego_step(pair, alphas[j]);
  return pair;
}

/// ||Phi_n||^2 = prod_{j<n} (1 - alpha_j^2) for the probability measure.
template <typename Scalar>
Scalar monic_norm_sq(const VerblunskySequence<Scalar>& alphas, Index n) {
  if (n > alphas.size()) throw OutOfRange("monic_norm_sq: not enough coefficients");
  Scalar norm(1);
  for (Index j = 0; j < n; ++j) {
    require_verblunsky(alphas[j], j);
    norm *= Scalar(1) - alphas[j] * alphas[j];
  }
  return norm;
}

/// h^n = phi_n(1)^2 for n = 0..N, where N = alphas.size(). Uses phi_n(1) =
/// phi_n^*(1) in the orthonormal Szego recurrence; h^0 = 1.
template <typename Scalar>
Vector<Scalar> orthonormal_sq_at_one(const VerblunskySequence<Scalar>& alphas) {
  require_verblunsky(alphas);
  const Index N = alphas.size();
  Vector<Scalar> h(N + 1);
  Scalar phi_at_one(1);
  h[0] = 1;
  for (Index n = 0; n < N; ++n) {
    const Scalar a = alphas[n];
    phi_at_one = (Scalar(1) - a) * phi_at_one / std::sqrt(Scalar(1) - a * a);
    h[n + 1] = phi_at_one * phi_at_one;
  }
  return h;
}

/// Moments c_0..c_N of the measure with coefficients alpha_0..alpha_{N-1} and
/// total moment c0. Each step fixes the one unknown moment from <Phi_{n+1}, 1> = 0.
template <typename Scalar>
MomentSequence<Scalar> moments_from_verblunsky(const VerblunskySequence<Scalar>& alphas,
                                               Scalar c0 = Scalar(1)) {
  if (!(c0 > Scalar(0))) throw NotPositiveDefinite(0);
  using W = working_t<Scalar>;
  const Index N = alphas.size();
  Vector<W> c(N + 1);
  c[0] = 1;
  MonicPair<W> pair = MonicPair<W>::unit();
  for (Index n = 0; n < N; ++n) {
    pair = szego_step(pair, W(alphas[n]));
    // Leading coefficient of Phi_{n+1} is 1, so it multiplies c_{n+1}.
    c[n + 1] = -pair.phi.head(n + 1).dot(c.head(n + 1));
  }
  return MomentSequence<Scalar>((c * W(c0)).template cast<Scalar>());
}

/// Inverse of moments_from_verblunsky: alpha_n = <z Phi_n, 1> / ||Phi_n||^2.
template <typename Scalar>
VerblunskySequence<Scalar> verblunsky_from_moments(const MomentSequence<Scalar>& c) {
  if (c.size() == 0) return {};
  if (!(c[0] > Scalar(0))) throw NotPositiveDefinite(0);
  using W = working_t<Scalar>;
  const Vector<W> ct = c.values.template cast<W>() / W(c[0]);
  const Index N = c.size() - 1;
  Vector<W> alphas(N);
  MonicPair<W> pair = MonicPair<W>::unit();
  W norm(1);
  for (Index n = 0; n < N; ++n) {
    const W shifted = pair.phi.dot(ct.segment(1, n + 1));
    const W a = shifted / norm;
    if (!(std::abs(a) < W(1))) throw NotPositiveDefinite(n + 1);
    alphas[n] = a;
    pair = szego_step(pair, a);
    norm *= W(1) - a * a;
  }
  return VerblunskySequence<Scalar>(alphas.template cast<Scalar>());
}

template <typename Scalar = double>
struct HeineResult {
  MonicPair<Scalar> pair;
  Scalar norm_sq;  ///< det(J_n)/det(J_{n-1})
};

/// Heine determinant formula for Phi_n (cofactor expansion along the row
/// 1, z, ..., z^n); dense test oracle.
template <typename Scalar>
HeineResult<Scalar> heine_monic_oracle(const MomentSequence<Scalar>& c, Index n) {
  if (n + 1 > oracle_max_size) throw std::invalid_argument("heine oracle: order too large");
  if (c.size() < n + 1) throw InsufficientMoments(n + 1, c.size());
  if (n == 0) {
    if (!(c[0] > Scalar(0))) throw NotPositiveDefinite(0);
    return {MonicPair<Scalar>::unit(), c[0]};
  }
  const Scalar det_prev = brute_det(build_toeplitz(c, n - 1));
  const Scalar det_curr = brute_det(build_toeplitz(c, n));
  if (!(det_prev > Scalar(0))) throw NotPositiveDefinite(n - 1);
  if (!(det_curr > Scalar(0))) throw NotPositiveDefinite(n);

  // Rows 0..n-1 of the Heine determinant; the last row carries the powers of z.
  Matrix<Scalar> top(n, n + 1);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= n; ++j) top(i, j) = c[std::abs(i - j)];

  Vector<Scalar> phi(n + 1);
  for (Index k = 0; k <= n; ++k) {
    Matrix<Scalar> minor(n, n);
    minor << top.leftCols(k), top.rightCols(n - k);
    const Scalar sign = ((n + k) % 2 == 0) ? Scalar(1) : Scalar(-1);
    phi[k] = sign * brute_det(minor) / det_prev;
  }
  return {{phi, reverse_polynomial(phi)}, det_curr / det_prev};
}

}  // namespace canspec
