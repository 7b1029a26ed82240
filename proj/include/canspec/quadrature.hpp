#pragma once

#include <cmath>
#include <numbers>

namespace canspec {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_depth = 48;
  int initial_panels = 8;
};

struct QuadratureResult {
  double value = 0;
  double error = 0;  ///< sum of local Richardson error estimates
  bool converged = true;
};

namespace detail {

template <typename F>
void simpson_recurse(F& f, double a, double b, double fa, double fm, double fb, double whole,
                     double eps, int depth, QuadratureResult& out) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double h = b - a;
  const double left = h / 12 * (fa + 4 * flm + fm);
  const double right = h / 12 * (fm + 4 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15 * eps) {
    if (depth <= 0 && std::abs(diff) > 15 * eps) out.converged = false;
    out.value += left + right + diff / 15;
    out.error += std::abs(diff) / 15;
    return;
  }
  simpson_recurse(f, a, m, fa, flm, fm, left, eps / 2, depth - 1, out);
  simpson_recurse(f, m, b, fm, frm, fb, right, eps / 2, depth - 1, out);
}

}  // namespace detail

/// Adaptive Simpson quadrature of a real function on [a, b].
template <typename F>
QuadratureResult adaptive_simpson(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
  QuadratureResult out;
  if (a == b) return out;
  const int panels = opts.initial_panels > 0 ? opts.initial_panels : 1;
  const double width = (b - a) / panels;

  // Coarse pass fixes the absolute target from the scale of |f|.
  double scale = 0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width, hi = lo + width;
    scale += std::abs(width) / 6 *
             (std::abs(f(lo)) + 4 * std::abs(f(0.5 * (lo + hi))) + std::abs(f(hi)));
  }
  const double tol = std::max(opts.abs_tol, opts.rel_tol * scale);

  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width, hi = (p + 1 == panels) ? b : lo + width;
    const double flo = f(lo), fmid = f(0.5 * (lo + hi)), fhi = f(hi);
    const double whole = (hi - lo) / 6 * (flo + 4 * fmid + fhi);
    detail::simpson_recurse(f, lo, hi, flo, fmid, fhi, whole, tol / panels, opts.max_depth, out);
  }
  return out;
}

/// Same, after x = a + (b - a)(1 - cos(pi s))/2. The substitution flattens
/// square-root behaviour at both endpoints.
template <typename F>
QuadratureResult integrate_smoothed_edges(F&& f, double a, double b,
                                          const QuadratureOptions& opts = {}) {
  const double half = 0.5 * (b - a);
  auto g = [&](double s) {
    const double x = a + half * (1 - std::cos(std::numbers::pi * s));
    return f(x) * half * std::numbers::pi * std::sin(std::numbers::pi * s);
  };
  return adaptive_simpson(g, 0.0, 1.0, opts);
}

}  // namespace canspec
