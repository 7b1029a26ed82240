#pragma once

// Canonical systems  Omega X' = z H X  with det-normalized diagonal
// Hamiltonians H = diag(h, 1/h), and real Dirac systems  Omega X' = zX - QX
// with Q = [[0, f], [f, 0]].
//
// The gauge X_dirac = diag(e^F, e^-F) X_canonical, F(t) = \int_0^t f, maps a
// Dirac system to the canonical system with h_11 = exp(2F).

#include "canspec/errors.hpp"
#include "canspec/quadrature.hpp"
#include "canspec/types.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace canspec {

using Complex = std::complex<double>;
using Matrix2cd = Matrix2c<double>;

/// Uniform-step, det-normalized diagonal Hamiltonian: h_11 = heights[n] on
/// [n step, (n+1) step), h_22 = 1/h_11, no off-diagonal part.
struct StepHamiltonian {
  double step = 0;
  StepHeights<double> heights;

  double length() const { return step * static_cast<double>(heights.size()); }
  /// h_11 on the step containing t (the last step at t = length()).
  double h11(double t) const;
};

void validate(const StepHamiltonian& H);

/// Per-step averages h^{T,n} = (1/T) \int_{nT}^{(n+1)T} h_11, n < N.
StepHamiltonian periodize(const std::function<double(double)>& h11, double T, Index N,
                          const QuadratureOptions& opts = {});

/// Exact transfer matrix of one constant step:
/// [[cos(z l), -sin(z l)/h], [h sin(z l), cos(z l)]].
template <typename Scalar>
Matrix2c<Scalar> matrizant_constant_step(Scalar h, Scalar len, std::complex<Scalar> z) {
  const std::complex<Scalar> c = std::cos(z * len), s = std::sin(z * len);
  Matrix2c<Scalar> M;
  M << c, -s / h, h * s, c;
  return M;
}

/// M(t, z) for 0 <= t <= H.length(); M(0, z) = I.
Matrix2cd matrizant(const StepHamiltonian& H, double t, Complex z);

enum class BoundaryCondition { Neumann, Dirichlet };

/// E = u - i v from the first (Neumann) or second (Dirichlet) column of M.
Complex hermite_biehler(const Matrix2cd& M, BoundaryCondition bc = BoundaryCondition::Neumann);

/// Real potential f on [0, horizon], stored as continuous pieces between knots.
/// f is right-continuous at knots; each piece extends continuously to its ends.
class DiracPotential {
public:
  using Function = std::function<double(double)>;

  /// Continuous f; the antiderivative is integrated numerically when omitted.
  static DiracPotential smooth(Function f, double horizon, Function antiderivative = {});
  /// f = values[k] on [k step, (k+1) step).
  static DiracPotential piecewise_constant(std::vector<double> values, double step);
  /// Linear interpolation through (ts[i], values[i]); ts[0] must be 0.
  static DiracPotential sampled(std::vector<double> ts, std::vector<double> values);

  double horizon() const { return knots_.back(); }
  const std::vector<double>& knots() const { return knots_; }
  Index piece_count() const { return static_cast<Index>(pieces_.size()); }
  bool piecewise_constant() const { return !constants_.empty(); }
  /// Value of piece k at t (t may be either endpoint of the piece).
  double on_piece(Index k, double t) const { return pieces_[static_cast<size_t>(k)](t); }
  Index piece_index(double t) const;

  double operator()(double t) const;
  /// F(t) = \int_0^t f.
  double integral(double t) const;
  /// \int_0^t |f|.
  double abs_integral(double t) const;
  /// h_11(t) = exp(2 F(t)) of the equivalent canonical system.
  std::function<double(double)> hamiltonian() const;

private:
  std::vector<double> knots_;
  std::vector<Function> pieces_;
  std::vector<double> constants_;
  Function antiderivative_;
  std::vector<double> knot_integrals_;  // F at each knot when no closed form
};

/// Exact Dirac transfer matrix for constant f over a length len:
/// exp(len [[f, -z], [z, -f]]).
Matrix2cd dirac_constant_step(double f, double len, Complex z);

/// Exact Dirac transfer matrix at t for a piecewise-constant potential.
Matrix2cd dirac_matrizant(const DiracPotential& f, double t, Complex z);

/// Scattering function S(a, x) = e^{iax} E(a, x), integrating
/// dS/dt = f(t) e^{2itx} conj(S) by fixed-step RK4. Steps never straddle a knot.
Complex scattering_rk4(const DiracPotential& f, double a, double x, double dt,
                       Complex initial = Complex(1, 0));

/// Coordinates in which E(a, x) = u - iv is reported. Dirac is the frame of
/// the scattering equation; Canonical is the frame of the canonical system.
/// Both give the same de Branges space, but pointwise |E| differs.
enum class Frame { Dirac, Canonical };

struct BoundaryValueGrid {
  double a = 0;
  Vector<double> xs;
  Vector<Complex> E;
  Vector<double> weight;      ///< 1/|E(a, x)|^2
  double weight_bound = 1;    ///< rigorous upper bound for weight on all of R
};

/// Gauge factor p with (u, v)_dirac = (p U, V/p) at t = a for a step
/// Hamiltonian. At a step boundary the jump is split evenly, p = (h_- h_+)^{1/4}.
double step_gauge(const StepHamiltonian& H, double a);

/// Total variation of log(h)/2 over [0, a], counting the jump from h = 1 at
/// t = 0 and half of a jump sitting exactly at a.
double step_variation(const StepHamiltonian& H, double a);

BoundaryValueGrid weight_grid(const StepHamiltonian& H, double a, const Vector<double>& xs,
                              Frame frame = Frame::Dirac);
BoundaryValueGrid weight_grid(const DiracPotential& f, double a, const Vector<double>& xs,
                              double dt, Frame frame = Frame::Dirac);

/// Reproducing kernel of PW_b at lambda: sin(b(x - lambda)) / (pi (x - lambda)).
struct SincKernel {
  double b = 1;
  double lambda = 0;

  double operator()(double x) const;
};

/// \int phi psi weight dx over the grid (trapezoid). Throws GridTooSmall when
/// the analytic tail bound beyond the grid ends exceeds tail_tol.
double pw_inner(const SincKernel& phi, const SincKernel& psi, const BoundaryValueGrid& grid,
                double tail_tol = 0.1);
double pw_norm(const SincKernel& phi, const BoundaryValueGrid& grid, double tail_tol = 0.1);

struct ConvergenceOptions {
  double dt = 0;  ///< RK4 step; 0 means 1e-3 a
  Frame frame = Frame::Dirac;
  double tail_tol = 0.1;
};

struct ConvergenceRow {
  double T = 0;
  double sup_weight_diff = 0;
  std::vector<double> pw_norms;  ///< ||phi||^2 in L^2(mu_T)
  std::vector<double> pw_diffs;  ///< | ||phi||^2_{mu_T} - ||phi||^2_mu |
};

struct ConvergenceTable {
  double a = 0;
  std::vector<double> reference_pw_norms;
  std::vector<ConvergenceRow> rows;

  bool weight_strictly_decreasing() const;
  bool pw_strictly_decreasing(size_t phi_index) const;
};

/// Compares the step approximations H^T (exact transfer matrices) of the
/// canonical system of f against f itself (RK4) on the grid xs.
ConvergenceTable convergence_experiment(const DiracPotential& f, double a,
                                        const std::vector<double>& Ts, const Vector<double>& xs,
                                        const std::vector<SincKernel>& phis,
                                        const ConvergenceOptions& opts = {});

/// The three kernels used by default: (b, lambda) = (a, pi/a), (a/2, 0), (3a/4, 0).
std::vector<SincKernel> default_sinc_test_set(double a);

Vector<double> uniform_grid(double lo, double hi, double spacing);

}  // namespace canspec
