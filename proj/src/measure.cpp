#include "canspec/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace canspec {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

bool same(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

}  // namespace

bool SpectralMeasure::on_circle() const { return period && same(*period, kTwoPi); }

double SpectralMeasure::evaluate(double x) const {
  if (!period) return density(x);
  const double P = *period;
  double r = x - window_start;
  r -= P * std::floor(r / P);
  return density(window_start + r);
}

Vector<double> SpectralMeasure::sample(const Vector<double>& xs) const {
  Vector<double> w(xs.size());
  for (Index i = 0; i < xs.size(); ++i) w[i] = evaluate(xs[i]);
  return w;
}

SpectralMeasure cosine_partial_sum(const MomentSequence<double>& c, Index N) {
  if (N < 0 || c.size() < N + 1) throw InsufficientMoments(N + 1, c.size());
  const Vector<double> coeffs = c.values.head(N + 1);
  SpectralMeasure m;
  m.density = [coeffs](double x) {
    double w = coeffs[0];
    for (Index n = 1; n < coeffs.size(); ++n) w += 2 * coeffs[n] * std::cos(static_cast<double>(n) * x);
    return w;
  };
  m.support = {{0, kTwoPi}};
  m.period = kTwoPi;
  return m;
}

SpectralMeasure rescale_to_line(const SpectralMeasure& m, double P) {
  if (!m.on_circle()) throw std::invalid_argument("rescale_to_line: measure is not on the circle");
  if (!(P > 0)) throw std::invalid_argument("rescale_to_line: period must be positive");
  const double s = P / kTwoPi;
  SpectralMeasure line;
  line.density = [circle = m, s](double x) { return circle.evaluate(x / s); };
  for (const Interval& I : m.support) line.support.push_back({I.lo * s, I.hi * s});
  for (const Atom& a : m.atoms) line.atoms.push_back({a.location * s, a.mass * s});
  line.period = P;
  line.window_start = m.window_start * s;
  return line;
}

double geronimus_atom_weight(double alpha) {
  if (!(std::abs(alpha) < 1)) throw InvalidVerblunsky(0);
  if (!(alpha > 0)) return 0;
  const double shifted = alpha + 0.5;
  return 2 / ((1 + alpha) * (1 + alpha)) * (shifted * shifted - 0.25);
}

SpectralMeasure geronimus_measure(double alpha) {
  if (!(std::abs(alpha) < 1)) throw InvalidVerblunsky(0);
  const double edge = 2 * std::asin(std::abs(alpha));
  SpectralMeasure m;
  m.density = [alpha, edge](double x) {
    if (x <= edge || x >= kTwoPi - edge) return 0.0;
    const double s = std::sin(0.5 * x);
    if (!(s > 0)) return 0.0;
    return std::sqrt(std::max(0.0, s * s - alpha * alpha)) / s / std::abs(1 + alpha);
  };
  m.support = {{edge, kTwoPi - edge}};
  if (alpha > 0) m.atoms.push_back({0.0, kTwoPi * geronimus_atom_weight(alpha)});
  m.period = kTwoPi;
  return m;
}

double expgrowth_alpha(double T) { return -std::expm1(T) / (1 + std::exp(T)); }

SpectralMeasure expgrowth_family(double T) {
  if (!(T > 0)) throw std::invalid_argument("expgrowth_family: T must be positive");
  SpectralMeasure line = rescale_to_line(geronimus_measure(expgrowth_alpha(T)), std::numbers::pi / T);
  // mu = nu / h^0 with h^0 = (e^T - 1)/T the first step average of e^t.
  const double c0 = T / std::expm1(T);
  line.density = [w = line.density, c0](double x) { return c0 * w(x); };
  for (Atom& a : line.atoms) a.mass *= c0;
  return line;
}

double expgrowth_printed_density(double T, double x) {
  const double e = std::exp(T);
  const double prefactor = T * (e + 1) / (2 * std::expm1(T));
  const double c = std::cos(T * x);
  return prefactor * std::sqrt(4 * e / ((e + 1) * (e + 1)) - c * c) / std::sin(T * x);
}

Interval expgrowth_printed_support(double T) {
  const double s = std::asin(expgrowth_alpha(T)) / T;
  return {s, std::numbers::pi / T - s};
}

SpectralMeasure expgrowth_limit() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  SpectralMeasure m;
  m.density = [](double x) {
    const double ax = std::abs(x);
    if (ax < 0.5) return 0.0;
    return std::sqrt(4 * x * x - 1) / (2 * ax);
  };
  m.support = {{-inf, -0.5}, {0.5, inf}};
  return m;
}

// ---------------------------------------------------------------------------

FourierReport fourier_coefficients(const SpectralMeasure& m, double lo, double L, Index n,
                                   double rel_tol) {
  if (!(L > 0)) throw std::invalid_argument("fourier_coefficients: window length must be positive");
  if (n < 0) throw std::invalid_argument("fourier_coefficients: negative count");
  const double hi = lo + L;

  // Shifts of each support interval and atom that meet the window.
  auto shifts = [&](double a, double b) {
    std::vector<double> out;
    if (!m.period) return std::vector<double>{0.0};
    const double P = *m.period;
    const double first = std::floor((lo - b) / P), last = std::ceil((hi - a) / P);
    for (double k = first; k <= last; ++k) out.push_back(k * P);
    return out;
  };

  std::vector<Interval> pieces;
  const std::vector<Interval> support =
      m.support.empty() ? std::vector<Interval>{{lo, hi}} : m.support;
  for (const Interval& I : support)
    for (double d : shifts(I.lo, I.hi)) {
      const double a = std::max(I.lo + d, lo), b = std::min(I.hi + d, hi);
      if (b > a) pieces.push_back({a, b});
    }
  std::vector<Atom> atoms;
  for (const Atom& at : m.atoms)
    for (double d : shifts(at.location, at.location)) {
      const double x = at.location + d;
      if (x >= lo && x < hi) atoms.push_back({x, at.mass});
    }

  QuadratureOptions q;
  q.rel_tol = rel_tol;
  q.abs_tol = 1e-15;
  const double omega = kTwoPi / L;
  FourierReport out;
  out.moments.values.resize(n + 1);
  out.moments.period = m.period ? std::optional<double>(L) : std::nullopt;
  for (Index k = 0; k <= n; ++k) {
    const double freq = omega * static_cast<double>(k);
    double re = 0, im = 0;
    for (const Interval& I : pieces) {
      const QuadratureResult rc = integrate_smoothed_edges(
          [&](double x) { return m.evaluate(x) * std::cos(freq * x); }, I.lo, I.hi, q);
      const QuadratureResult rs = integrate_smoothed_edges(
          [&](double x) { return m.evaluate(x) * std::sin(freq * x); }, I.lo, I.hi, q);
      if (!rc.converged || !rs.converged || !std::isfinite(rc.value) || !std::isfinite(rs.value))
        throw QuadratureFailure("moment " + std::to_string(k) + " did not reach tolerance");
      re += rc.value;
      im -= rs.value;
    }
    for (const Atom& at : atoms) {
      re += at.mass * std::cos(freq * at.location);
      im -= at.mass * std::sin(freq * at.location);
    }
    out.moments.values[k] = re / L;
    out.max_imag = std::max(out.max_imag, std::abs(im / L));
  }
  return out;
}

FourierReport quadrature_moments_report(const SpectralMeasure& m, Index n, double rel_tol) {
  if (!m.period) throw std::invalid_argument("quadrature_moments: measure is not periodic");
  return fourier_coefficients(m, m.window_start, *m.period, n, rel_tol);
}

MomentSequence<double> quadrature_moments(const SpectralMeasure& m, Index n, double rel_tol) {
  return quadrature_moments_report(m, n, rel_tol).moments;
}

MomentSequence<double> periodize_measure(const SpectralMeasure& m, double L, Index n,
                                         double rel_tol) {
  MomentSequence<double> c = fourier_coefficients(m, -0.5 * L, L, n, rel_tol).moments;
  c.period = L;
  return c;
}

std::pair<MomentSequence<double>, double> probability_normalize(const MomentSequence<double>& c) {
  if (c.size() == 0 || !(c[0] > 0)) throw NotPositiveDefinite(0);
  const double scale = c[0];
  return {MomentSequence<double>(c.values / scale, c.period), scale};
}

}  // namespace canspec
