#include "canspec/systems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace canspec {

namespace {

constexpr double kKnotSlack = 1e-12;

QuadratureOptions periodization_defaults(QuadratureOptions opts) {
  opts.rel_tol = std::min(opts.rel_tol, 1e-10);
  return opts;
}

}  // namespace

double StepHamiltonian::h11(double t) const {
  const Index N = heights.size();
  Index k = static_cast<Index>(std::floor(t / step));
  k = std::clamp<Index>(k, 0, N - 1);
  return heights[k];
}

void validate(const StepHamiltonian& H) {
  if (!(H.step > 0) || !std::isfinite(H.step))
    throw InvalidHamiltonian("step length must be positive");
  if (H.heights.size() == 0) throw InvalidHamiltonian("no steps");
  for (Index n = 0; n < H.heights.size(); ++n)
    if (!(H.heights[n] > 0) || !std::isfinite(H.heights[n])) throw InvalidHeights(n);
}

StepHamiltonian periodize(const std::function<double(double)>& h11, double T, Index N,
                          const QuadratureOptions& opts) {
  if (!(T > 0) || !std::isfinite(T)) throw InvalidHamiltonian("periodize: T must be positive");
  if (N < 1) throw InvalidHamiltonian("periodize: need at least one step");
  auto checked = [&](double s) {
    const double v = h11(s);
    if (!(v > 0) || !std::isfinite(v))
      throw InvalidHamiltonian("h11 is not positive and finite at t = " + std::to_string(s));
    return v;
  };
  const QuadratureOptions q = periodization_defaults(opts);
  StepHamiltonian H;
  H.step = T;
  H.heights.values.resize(N);
  for (Index n = 0; n < N; ++n) {
    const double lo = static_cast<double>(n) * T;
    const QuadratureResult r = adaptive_simpson(checked, lo, lo + T, q);
    if (!r.converged) throw QuadratureFailure("periodize: step " + std::to_string(n));
    H.heights.values[n] = r.value / T;
  }
  return H;
}

Matrix2cd matrizant(const StepHamiltonian& H, double t, Complex z) {
  validate(H);
  const double total = H.length();
  if (t < 0 || t > total * (1 + kKnotSlack))
    throw OutOfRange("matrizant: t outside [0, " + std::to_string(total) + "]");
  t = std::min(t, total);

  Matrix2cd M = Matrix2cd::Identity();
  const Complex c = std::cos(z * H.step), s = std::sin(z * H.step);
  double reached = 0;
  for (Index n = 0; n < H.heights.size(); ++n) {
    const double end = static_cast<double>(n + 1) * H.step;
    const double h = H.heights[n];
    if (end <= t * (1 + kKnotSlack) + kKnotSlack) {
      Matrix2cd step;
      step << c, -s / h, h * s, c;
      M = step * M;
      reached = end;
    } else {
      const double rest = t - reached;
      if (rest > 0) M = matrizant_constant_step(h, rest, z) * M;
      break;
    }
  }
  return M;
}

Complex hermite_biehler(const Matrix2cd& M, BoundaryCondition bc) {
  const int col = bc == BoundaryCondition::Neumann ? 0 : 1;
  return M(0, col) - Complex(0, 1) * M(1, col);
}

// ---------------------------------------------------------------------------

DiracPotential DiracPotential::smooth(Function f, double horizon, Function antiderivative) {
  if (!(horizon > 0)) throw InvalidPotential("horizon must be positive");
  DiracPotential p;
  p.knots_ = {0.0, horizon};
  p.pieces_ = {std::move(f)};
  p.antiderivative_ = std::move(antiderivative);
  if (!p.antiderivative_) {
    const QuadratureResult r = adaptive_simpson(p.pieces_[0], 0.0, horizon);
    p.knot_integrals_ = {0.0, r.value};
  }
  return p;
}

DiracPotential DiracPotential::piecewise_constant(std::vector<double> values, double step) {
  if (values.empty() || !(step > 0)) throw InvalidPotential("empty piecewise-constant potential");
  DiracPotential p;
  p.knot_integrals_.push_back(0.0);
  p.knots_.push_back(0.0);
  for (size_t k = 0; k < values.size(); ++k) {
    const double v = values[k];
    if (!std::isfinite(v)) throw InvalidPotential("non-finite potential value");
    p.pieces_.push_back([v](double) { return v; });
    p.knots_.push_back(static_cast<double>(k + 1) * step);
    p.knot_integrals_.push_back(p.knot_integrals_.back() + v * step);
  }
  p.constants_ = std::move(values);
  return p;
}

DiracPotential DiracPotential::sampled(std::vector<double> ts, std::vector<double> values) {
  if (ts.size() < 2 || ts.size() != values.size())
    throw InvalidPotential("sample table needs at least two (t, f) rows");
  if (std::abs(ts.front()) > kKnotSlack) throw InvalidPotential("sample table must start at t = 0");
  DiracPotential p;
  p.knots_.push_back(0.0);
  p.knot_integrals_.push_back(0.0);
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    const double t0 = ts[i], t1 = ts[i + 1], f0 = values[i], f1 = values[i + 1];
    if (!(t1 > t0)) throw InvalidPotential("sample times must increase");
    if (!std::isfinite(f0) || !std::isfinite(f1)) throw InvalidPotential("non-finite sample");
    p.pieces_.push_back([=](double t) { return f0 + (f1 - f0) * (t - t0) / (t1 - t0); });
    p.knots_.push_back(t1);
    p.knot_integrals_.push_back(p.knot_integrals_.back() + 0.5 * (f0 + f1) * (t1 - t0));
  }
  return p;
}

Index DiracPotential::piece_index(double t) const {
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  const Index k = static_cast<Index>(it - knots_.begin()) - 1;
  return std::clamp<Index>(k, 0, piece_count() - 1);
}

double DiracPotential::operator()(double t) const { return on_piece(piece_index(t), t); }

double DiracPotential::integral(double t) const {
  if (antiderivative_) return antiderivative_(t) - antiderivative_(0.0);
  const Index k = piece_index(t);
  const double lo = knots_[static_cast<size_t>(k)];
  const auto& piece = pieces_[static_cast<size_t>(k)];
  return knot_integrals_[static_cast<size_t>(k)] + adaptive_simpson(piece, lo, t).value;
}

double DiracPotential::abs_integral(double t) const {
  double total = 0;
  for (Index k = 0; k < piece_count(); ++k) {
    const double lo = knots_[static_cast<size_t>(k)];
    if (lo >= t) break;
    const double hi = std::min(knots_[static_cast<size_t>(k + 1)], t);
    const auto& piece = pieces_[static_cast<size_t>(k)];
    total += adaptive_simpson([&](double s) { return std::abs(piece(s)); }, lo, hi).value;
  }
  return total;
}

std::function<double(double)> DiracPotential::hamiltonian() const {
  return [self = *this](double t) { return std::exp(2 * self.integral(t)); };
}

Matrix2cd dirac_constant_step(double f, double len, Complex z) {
  // exp(len B) with B^2 = (f^2 - z^2) I; cosh and sinh(w)/w are even in w.
  const Complex w2 = (f * f - z * z) * (len * len);
  Complex ch, shc;
  if (std::abs(w2) < 1e-8) {
    ch = 1.0 + w2 / 2.0 + w2 * w2 / 24.0;
    shc = 1.0 + w2 / 6.0 + w2 * w2 / 120.0;
  } else {
    const Complex w = std::sqrt(w2);
    ch = std::cosh(w);
    shc = std::sinh(w) / w;
  }
  Matrix2cd B;
  B << f, -z, z, -f;
  return ch * Matrix2cd::Identity() + (len * shc) * B;
}

Matrix2cd dirac_matrizant(const DiracPotential& f, double t, Complex z) {
  if (!f.piecewise_constant())
    throw InvalidPotential("exact Dirac transfer matrix needs a piecewise-constant potential");
  if (t < 0 || t > f.horizon() * (1 + kKnotSlack)) throw OutOfRange("dirac_matrizant: t");
  Matrix2cd M = Matrix2cd::Identity();
  const auto& knots = f.knots();
  for (Index k = 0; k < f.piece_count(); ++k) {
    const double lo = knots[static_cast<size_t>(k)];
    if (lo >= t) break;
    const double hi = std::min(knots[static_cast<size_t>(k + 1)], t);
    M = dirac_constant_step(f.on_piece(k, lo), hi - lo, z) * M;
  }
  return M;
}

Complex scattering_rk4(const DiracPotential& f, double a, double x, double dt, Complex initial) {
  if (!(dt > 0)) throw std::invalid_argument("scattering_rk4: dt must be positive");
  if (!(a > 0)) throw std::invalid_argument("scattering_rk4: a must be positive");
  if (a > f.horizon() * (1 + kKnotSlack)) throw OutOfRange("scattering_rk4: a beyond horizon");

  Complex S = initial;
  const auto& knots = f.knots();
  for (Index k = 0; k < f.piece_count(); ++k) {
    const double lo = knots[static_cast<size_t>(k)];
    if (lo >= a) break;
    const double hi = std::min(knots[static_cast<size_t>(k + 1)], a);
    const Index steps = std::max<Index>(1, static_cast<Index>(std::ceil((hi - lo) / dt - 1e-9)));
    const double h = (hi - lo) / static_cast<double>(steps);
    for (Index i = 0; i < steps; ++i) {
      const double t = lo + static_cast<double>(i) * h;
      const double f0 = f.on_piece(k, t), f1 = f.on_piece(k, t + 0.5 * h), f2 = f.on_piece(k, t + h);
      if (!std::isfinite(f0) || !std::isfinite(f1) || !std::isfinite(f2))
        throw InvalidPotential("non-finite potential near t = " + std::to_string(t));
      const Complex g0 = f0 * std::polar(1.0, 2 * t * x);
      const Complex g1 = f1 * std::polar(1.0, 2 * (t + 0.5 * h) * x);
      const Complex g2 = f2 * std::polar(1.0, 2 * (t + h) * x);
      const Complex k1 = g0 * std::conj(S);
      const Complex k2 = g1 * std::conj(S + 0.5 * h * k1);
      const Complex k3 = g1 * std::conj(S + 0.5 * h * k2);
      const Complex k4 = g2 * std::conj(S + h * k3);
      S += h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return S;
}

// ---------------------------------------------------------------------------

namespace {

/// Index K if a sits on the boundary between steps K-1 and K, else -1.
Index boundary_index(const StepHamiltonian& H, double a) {
  const double k = a / H.step;
  const double K = std::round(k);
  return std::abs(k - K) <= 1e-9 * std::max(1.0, k) ? static_cast<Index>(K) : -1;
}

}  // namespace

double step_gauge(const StepHamiltonian& H, double a) {
  validate(H);
  const Index N = H.heights.size();
  if (a <= 0) return 1.0;
  const Index K = boundary_index(H, a);
  if (K >= 1 && K < N) return std::pow(H.heights[K - 1] * H.heights[K], 0.25);
  if (K >= N) return std::sqrt(H.heights[N - 1]);
  return std::sqrt(H.h11(a));
}

double step_variation(const StepHamiltonian& H, double a) {
  validate(H);
  const Index N = H.heights.size();
  if (a <= 0) return 0;
  double total = 0.5 * std::abs(std::log(H.heights[0]));
  const Index K = boundary_index(H, a);
  const Index last_inside = K >= 1 ? K - 1 : static_cast<Index>(std::floor(a / H.step));
  for (Index n = 1; n <= std::min(last_inside, N - 1); ++n)
    total += 0.5 * std::abs(std::log(H.heights[n] / H.heights[n - 1]));
  if (K >= 1 && K < N) total += 0.25 * std::abs(std::log(H.heights[K] / H.heights[K - 1]));
  return total;
}

BoundaryValueGrid weight_grid(const StepHamiltonian& H, double a, const Vector<double>& xs,
                              Frame frame) {
  validate(H);
  const double p = frame == Frame::Dirac ? step_gauge(H, a) : 1.0;
  BoundaryValueGrid g;
  g.a = a;
  g.xs = xs;
  g.E.resize(xs.size());
  g.weight.resize(xs.size());
  for (Index i = 0; i < xs.size(); ++i) {
    const Matrix2cd M = matrizant(H, a, Complex(xs[i], 0));
    const Complex u = p * M(0, 0), v = M(1, 0) / p;
    g.E[i] = u - Complex(0, 1) * v;
    g.weight[i] = 1.0 / std::norm(g.E[i]);
  }
  const double pg = step_gauge(H, a);
  const double spread = std::max(pg, 1 / pg) * std::max(pg, 1 / pg);
  g.weight_bound = std::exp(2 * step_variation(H, a)) * (frame == Frame::Dirac ? 1.0 : spread);
  return g;
}

BoundaryValueGrid weight_grid(const DiracPotential& f, double a, const Vector<double>& xs,
                              double dt, Frame frame) {
  const double F = frame == Frame::Canonical ? f.integral(a) : 0.0;
  const double p = std::exp(-F);
  BoundaryValueGrid g;
  g.a = a;
  g.xs = xs;
  g.E.resize(xs.size());
  g.weight.resize(xs.size());
  for (Index i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const Complex E = std::polar(1.0, -a * x) * scattering_rk4(f, a, x, dt);
    // Real x: E = u - iv with u, v real.
    const double u = E.real() * p, v = -E.imag() / p;
    g.E[i] = Complex(u, -v);
    g.weight[i] = 1.0 / std::norm(g.E[i]);
  }
  g.weight_bound = std::exp(2 * f.abs_integral(a) + 2 * std::abs(F));
  return g;
}

// ---------------------------------------------------------------------------

double SincKernel::operator()(double x) const {
  const double d = x - lambda;
  if (std::abs(b * d) < 1e-8) return b / std::numbers::pi * (1 - (b * d) * (b * d) / 6);
  return std::sin(b * d) / (std::numbers::pi * d);
}

double pw_inner(const SincKernel& phi, const SincKernel& psi, const BoundaryValueGrid& grid,
                double tail_tol) {
  const Vector<double>& xs = grid.xs;
  if (xs.size() < 2) throw GridTooSmall(INFINITY, tail_tol);
  const double lo = xs[0], hi = xs[xs.size() - 1];
  const double right_gap = hi - std::max(phi.lambda, psi.lambda);
  const double left_gap = std::min(phi.lambda, psi.lambda) - lo;
  if (!(right_gap > 0) || !(left_gap > 0)) throw GridTooSmall(INFINITY, tail_tol);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double tail = grid.weight_bound * (1 / (pi2 * right_gap) + 1 / (pi2 * left_gap));
  if (tail > tail_tol) throw GridTooSmall(tail, tail_tol);

  double sum = 0;
  double prev = phi(xs[0]) * psi(xs[0]) * grid.weight[0];
  for (Index i = 1; i < xs.size(); ++i) {
    const double cur = phi(xs[i]) * psi(xs[i]) * grid.weight[i];
    sum += 0.5 * (prev + cur) * (xs[i] - xs[i - 1]);
    prev = cur;
  }
  return sum;
}

double pw_norm(const SincKernel& phi, const BoundaryValueGrid& grid, double tail_tol) {
  return pw_inner(phi, phi, grid, tail_tol);
}

// ---------------------------------------------------------------------------

bool ConvergenceTable::weight_strictly_decreasing() const {
  for (size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].sup_weight_diff < rows[i - 1].sup_weight_diff)) return false;
  return true;
}

bool ConvergenceTable::pw_strictly_decreasing(size_t j) const {
  for (size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].pw_diffs.at(j) < rows[i - 1].pw_diffs.at(j))) return false;
  return true;
}

ConvergenceTable convergence_experiment(const DiracPotential& f, double a,
                                        const std::vector<double>& Ts, const Vector<double>& xs,
                                        const std::vector<SincKernel>& phis,
                                        const ConvergenceOptions& opts) {
  if (!(a > 0)) throw std::invalid_argument("convergence_experiment: a must be positive");
  for (size_t i = 0; i < Ts.size(); ++i) {
    const double T = Ts[i];
    if (!(T > 0)) throw std::invalid_argument("convergence_experiment: T must be positive");
    if (i > 0 && !(T < Ts[i - 1]))
      throw std::invalid_argument("convergence_experiment: step sizes must decrease");
    const double ratio = a / T;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio)
      throw std::invalid_argument("convergence_experiment: T must divide a");
  }
  const double dt = opts.dt > 0 ? opts.dt : 1e-3 * a;

  ConvergenceTable table;
  table.a = a;
  const BoundaryValueGrid reference = weight_grid(f, a, xs, dt, opts.frame);
  for (const SincKernel& phi : phis)
    table.reference_pw_norms.push_back(pw_norm(phi, reference, opts.tail_tol));

  const auto h11 = f.hamiltonian();
  for (double T : Ts) {
    const Index N = static_cast<Index>(std::llround(a / T));
    // One step past a, when available, fixes the gauge at the boundary t = a.
    const bool extra = f.horizon() >= a + T * (1 - 1e-12);
    const StepHamiltonian H = periodize(h11, T, extra ? N + 1 : N);
    const BoundaryValueGrid approx = weight_grid(H, a, xs, opts.frame);

    ConvergenceRow row;
    row.T = T;
    row.sup_weight_diff = (approx.weight - reference.weight).cwiseAbs().maxCoeff();
    for (size_t j = 0; j < phis.size(); ++j) {
      row.pw_norms.push_back(pw_norm(phis[j], approx, opts.tail_tol));
      row.pw_diffs.push_back(std::abs(row.pw_norms.back() - table.reference_pw_norms[j]));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<SincKernel> default_sinc_test_set(double a) {
  return {{a, std::numbers::pi / a}, {0.5 * a, 0.0}, {0.75 * a, 0.0}};
}

Vector<double> uniform_grid(double lo, double hi, double spacing) {
  if (!(hi > lo) || !(spacing > 0)) throw std::invalid_argument("uniform_grid: bad bounds");
  const Index n = static_cast<Index>(std::llround((hi - lo) / spacing)) + 1;
  Vector<double> xs(n);
  for (Index i = 0; i < n; ++i)
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return xs;
}

}  // namespace canspec
