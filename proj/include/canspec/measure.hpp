#pragma once

// Even spectral measures: a density per unit length plus point masses, either
// periodic (circle, period 2pi; or line, period P) or on the whole line.
//
// Atom masses are in the same units as density * dx, so the moments are
// c_k = (1/P) [ \int_window e^{-2 pi i k x/P} w(x) dx + sum_j m_j e^{-2 pi i k x_j/P} ].

#include "canspec/errors.hpp"
#include "canspec/quadrature.hpp"
#include "canspec/types.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace canspec {

struct Atom {
  double location = 0;
  double mass = 0;
};

struct Interval {
  double lo = 0;
  double hi = 0;
};

struct SpectralMeasure {
  /// Density on one window (or on all of R when aperiodic); zero off support.
  std::function<double(double)> density;
  /// Closed intervals inside the window outside which the density vanishes.
  /// Quadrature splits at their ends.
  std::vector<Interval> support;
  std::vector<Atom> atoms;
  /// Period P; 2pi for circle measures, nullopt on the whole line.
  std::optional<double> period;
  /// The window is [window_start, window_start + P).
  double window_start = 0;

  bool on_circle() const;
  /// w(x), reduced into the window when periodic.
  double evaluate(double x) const;
  Vector<double> sample(const Vector<double>& xs) const;
};

/// w_N(x) = c_0 + 2 sum_{n=1}^N c_n cos(n x) on the circle.
SpectralMeasure cosine_partial_sum(const MomentSequence<double>& c, Index N);

/// Circle measure to a line measure of period P through x_line = P x / 2pi.
/// The mean density (and so every moment) is preserved: w_line(x) = w(2 pi x / P),
/// atoms move to P x_j / 2pi with mass scaled by P / 2pi.
SpectralMeasure rescale_to_line(const SpectralMeasure& m, double P);

/// Probability measure with all Verblunsky coefficients equal to alpha.
SpectralMeasure geronimus_measure(double alpha);

/// Mass of the atom at z = 1 as a fraction of the total mass:
/// (2/(1+alpha)^2)((alpha + 1/2)^2 - 1/4) for alpha > 0, else 0.
double geronimus_atom_weight(double alpha);

/// alpha = (1 - e^T)/(1 + e^T) for h_11(t) = e^t sampled on steps of length T.
double expgrowth_alpha(double T);

/// Spectral measure of the periodization of h_11 = e^t with step T: period pi/T,
/// support [arcsin|alpha|/T, (pi - arcsin|alpha|)/T] within [0, pi/T).
SpectralMeasure expgrowth_family(double T);

/// Closed-form density T(e^T+1)/(2(e^T-1)) sqrt(4e^T/(e^T+1)^2 - cos^2(T x))/sin(T x),
/// evaluated literally (NaN where the square root is of a negative number).
double expgrowth_printed_density(double T, double x);

/// Interval [(1/T) arcsin(alpha), pi/T - (1/T) arcsin(alpha)] with the signed alpha.
Interval expgrowth_printed_support(double T);

/// w(x) = sqrt(4x^2 - 1)/(2|x|) on |x| >= 1/2.
SpectralMeasure expgrowth_limit();

struct FourierReport {
  MomentSequence<double> moments;
  double max_imag = 0;  ///< largest discarded imaginary part
};

/// First n+1 Fourier coefficients over [lo, lo + L) of the L-periodic
/// extension of m restricted to that window. Throws QuadratureFailure.
FourierReport fourier_coefficients(const SpectralMeasure& m, double lo, double L, Index n,
                                   double rel_tol = 1e-8);

/// c_0..c_n of a periodic measure over its own window.
FourierReport quadrature_moments_report(const SpectralMeasure& m, Index n,
                                        double rel_tol = 1e-8);
MomentSequence<double> quadrature_moments(const SpectralMeasure& m, Index n,
                                          double rel_tol = 1e-8);

/// Coefficients of the L-periodization of m on the window [-L/2, L/2).
MomentSequence<double> periodize_measure(const SpectralMeasure& m, double L, Index n,
                                         double rel_tol = 1e-8);

/// (c / c_0, c_0).
std::pair<MomentSequence<double>, double> probability_normalize(const MomentSequence<double>& c);

}  // namespace canspec
