#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>

namespace canspec {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

/// Real trigonometric moments c_0..c_N of an even measure on the circle,
/// c_n = (1/2pi) \int e^{-inx} d\mu(x).
template <typename Scalar = double>
struct MomentSequence {
  Vector<Scalar> values;
  /// Period of the underlying line measure, when the moments came from one.
  std::optional<Scalar> period;

  MomentSequence() = default;
  explicit MomentSequence(Vector<Scalar> v, std::optional<Scalar> p = std::nullopt)
      : values(std::move(v)), period(p) {}

  Index size() const { return values.size(); }
  Scalar operator[](Index i) const { return values[i]; }
  Scalar& operator[](Index i) { return values[i]; }
};

/// Real Verblunsky coefficients alpha_0..alpha_{N-1}, each in (-1, 1).
template <typename Scalar = double>
struct VerblunskySequence {
  Vector<Scalar> alphas;

  VerblunskySequence() = default;
  explicit VerblunskySequence(Vector<Scalar> a) : alphas(std::move(a)) {}

  Index size() const { return alphas.size(); }
  Scalar operator[](Index i) const { return alphas[i]; }
};

/// Values h^0..h^N of h_11 on successive steps of a det-normalized diagonal
/// step Hamiltonian.
template <typename Scalar = double>
struct StepHeights {
  Vector<Scalar> values;

  StepHeights() = default;
  explicit StepHeights(Vector<Scalar> h) : values(std::move(h)) {}

  Index size() const { return values.size(); }
  Scalar operator[](Index i) const { return values[i]; }
};

/// Precision used inside the recursions; double runs them in long double.
template <typename Scalar>
struct WorkingPrecision {
  using type = Scalar;
};

template <>
struct WorkingPrecision<double> {
  using type = long double;
};

template <typename Scalar>
using working_t = typename WorkingPrecision<Scalar>::type;

template <typename Scalar>
Vector<Scalar> make_vector(std::initializer_list<Scalar> xs) {
  Vector<Scalar> v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (Scalar x : xs) v[i++] = x;
  return v;
}

}  // namespace canspec
