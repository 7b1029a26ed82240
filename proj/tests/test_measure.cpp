#include "canspec/measure.hpp"
#include "canspec/opuc.hpp"
#include "canspec/systems.hpp"

#include "support.hpp"

#include <doctest.h>

#include <numbers>

using namespace canspec;
using canspec::testing::max_abs_diff;

namespace {

constexpr double pi = std::numbers::pi;

MomentSequence<double> moments(std::initializer_list<double> c) {
  return MomentSequence<double>(make_vector(c));
}

SpectralMeasure uniform_circle() {
  return cosine_partial_sum(moments({1}), 0);
}

SpectralMeasure lebesgue_line(double atom_mass = 0) {
  SpectralMeasure m;
  m.density = [](double) { return 1.0; };
  if (atom_mass != 0) m.atoms.push_back({0.0, atom_mass});
  return m;
}

}  // namespace

TEST_SUITE("measure") {
  TEST_CASE("cosine_partial_sum") {
    const auto w = cosine_partial_sum(moments({1, -0.5, 0, 0}), 3);
    for (double x : {0.0, 0.4, 2.0, pi, 5.9}) CHECK(w.evaluate(x) == doctest::Approx(1 - std::cos(x)));
    CHECK(w.atoms.empty());
    CHECK(w.on_circle());

    const auto one = uniform_circle();
    CHECK(one.evaluate(1.234) == 1.0);
    CHECK_THROWS_AS(cosine_partial_sum(moments({1, 0.2}), 2), InsufficientMoments);

    // Partial sums of the Geronimus moments approach the closed form at x = pi.
    // alpha < 0 has no atom; convergence is algebraic because of the edge singularities.
    const double alpha = -0.3;
    const auto c = moments_from_verblunsky(VerblunskySequence<double>(Vector<double>::Constant(60, alpha)));
    const double exact = geronimus_measure(alpha).evaluate(pi);
    double prev = 1e9;
    for (Index N : {5, 10, 20, 40}) {
      const double err = std::abs(cosine_partial_sum(c, N).evaluate(pi) - exact);
      CHECK(err < prev);
      prev = err;
    }
    CHECK(prev <= 1e-3);
  }

  TEST_CASE("even symmetry") {
    const Vector<double> xs = uniform_grid(0.01, pi - 0.01, 0.05);
    for (const auto& m : {geronimus_measure(0.4), geronimus_measure(-0.6),
                          cosine_partial_sum(moments({1, 0.3, -0.1, 0.05}), 3)})
      for (Index i = 0; i < xs.size(); ++i)
        CHECK(m.evaluate(xs[i]) == doctest::Approx(m.evaluate(2 * pi - xs[i])).epsilon(1e-12));
    const auto e = expgrowth_family(0.5);
    const auto limit = expgrowth_limit();
    for (double x : {0.3, 0.7, 1.1, 2.9}) {
      CHECK(e.evaluate(x) == doctest::Approx(e.evaluate(-x)).epsilon(1e-12));
      CHECK(limit.evaluate(x) == limit.evaluate(-x));
    }
  }

  TEST_CASE("quadrature_moments") {
    const auto c = quadrature_moments_report(cosine_partial_sum(moments({1, -0.5}), 1), 4);
    CHECK(max_abs_diff(c.moments.values, make_vector({1.0, -0.5, 0.0, 0.0, 0.0})) <= 1e-8);
    CHECK(c.max_imag <= 1e-8);

    CHECK(max_abs_diff(quadrature_moments(uniform_circle(), 3, 1e-12).values,
                       make_vector({1.0, 0.0, 0.0, 0.0})) <= 1e-12);

    for (double alpha : {0.3, -0.3, 1.0 / 3, -1.0 / 3, 0.7}) {
      const auto q = quadrature_moments_report(geronimus_measure(alpha), 10);
      const auto exact =
          moments_from_verblunsky(VerblunskySequence<double>(Vector<double>::Constant(10, alpha)));
      CHECK(max_abs_diff(q.moments.values, exact.values) <= 1e-6);
      CHECK(q.max_imag <= 1e-8);
    }

    // Fourier orthogonality: moments of a partial sum are its coefficients.
    const auto c6 = moments({1, 0.4, -0.2, 0.1, 0.05, -0.02, 0.01});
    CHECK(max_abs_diff(quadrature_moments(cosine_partial_sum(c6, 6), 8).values.head(7), c6.values) <=
          1e-8);

    SpectralMeasure singular = uniform_circle();
    singular.density = [](double x) { return 1 / std::abs(x - pi); };
    CHECK_THROWS_AS(quadrature_moments(singular, 2), QuadratureFailure);
  }

  TEST_CASE("geronimus_measure") {
    const auto lebesgue = geronimus_measure(0.0);
    for (double x : {0.1, 1.0, 3.0, 6.0}) CHECK(lebesgue.evaluate(x) == doctest::Approx(1.0));
    CHECK(lebesgue.atoms.empty());

    CHECK(geronimus_atom_weight(1.0 / 3) == doctest::Approx(0.5).epsilon(1e-15));
    const auto third = geronimus_measure(1.0 / 3);
    REQUIRE(third.atoms.size() == 1);
    CHECK(third.atoms[0].location == 0.0);
    CHECK(third.atoms[0].mass == doctest::Approx(pi));
    CHECK(quadrature_moments(third, 0)[0] == doctest::Approx(1.0).epsilon(1e-8));

    CHECK(geronimus_measure(-0.5).atoms.empty());
    CHECK(geronimus_measure(0.5).support[0].lo == doctest::Approx(2 * std::asin(0.5)));
    CHECK(geronimus_measure(-0.5).evaluate(0.5) == 0.0);
    CHECK_THROWS_AS(geronimus_measure(1.0), InvalidVerblunsky);

    for (double alpha = -0.9; alpha <= 0.91; alpha += 0.15)
      CHECK(quadrature_moments(geronimus_measure(alpha), 0)[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(quadrature_moments(geronimus_measure(0.949), 0)[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(quadrature_moments(geronimus_measure(-0.949), 0)[0] == doctest::Approx(1.0).epsilon(1e-6));
  }

  TEST_CASE("rescale_to_line") {
    for (double P : {0.5, 2.0, pi / 0.25}) {
      const auto line = rescale_to_line(uniform_circle(), P);
      CHECK(line.period == P);
      CHECK(line.evaluate(0.37 * P) == 1.0);
      CHECK(quadrature_moments(line, 0)[0] == doctest::Approx(1.0).epsilon(1e-12));
    }

    const auto circle = geronimus_measure(0.4);
    const auto line = rescale_to_line(circle, 7.0);
    const auto a = quadrature_moments(circle, 6), b = quadrature_moments(line, 6);
    CHECK(max_abs_diff(a.values, b.values) <= 1e-10);
    REQUIRE(line.atoms.size() == 1);
    CHECK(line.atoms[0].mass == doctest::Approx(circle.atoms[0].mass * 7.0 / (2 * pi)));
    CHECK(line.evaluate(7.0 * 0.3) == doctest::Approx(circle.evaluate(2 * pi * 0.3)));

    CHECK_THROWS_AS(rescale_to_line(lebesgue_line(), 2.0), std::invalid_argument);
  }

  TEST_CASE("expgrowth family matches the closed form") {
    for (double T : {0.5, 0.25, 0.125, 0.0625}) {
      const auto m = expgrowth_family(T);
      REQUIRE(m.period);
      CHECK(*m.period == doctest::Approx(pi / T));
      const Interval printed = expgrowth_printed_support(T);
      CHECK(printed.lo < 0);
      CHECK(m.support[0].lo == doctest::Approx(-printed.lo));
      CHECK(m.support[0].hi == doctest::Approx(pi / T + printed.lo));
      for (double frac : {0.1, 0.3, 0.5, 0.8}) {
        const double x = m.support[0].lo + frac * (m.support[0].hi - m.support[0].lo);
        CHECK(m.evaluate(x) == doctest::Approx(expgrowth_printed_density(T, x)).epsilon(1e-12));
      }
      // Step averages of e^t give c_0 = 1/h^0 = T/(e^T - 1).
      CHECK(quadrature_moments(m, 0)[0] == doctest::Approx(T / std::expm1(T)).epsilon(1e-8));
    }
  }

  TEST_CASE("expgrowth limits") {
    const double T = 1.0 / 64;
    const auto m = expgrowth_family(T);
    CHECK(std::abs(m.support[0].lo - 0.5) < 0.01);
    CHECK(std::abs(m.evaluate(1.0) - std::sqrt(3.0) / 2) <= 0.01);

    const auto limit = expgrowth_limit();
    CHECK(limit.evaluate(0.5) == 0.0);
    CHECK(limit.evaluate(0.2) == 0.0);
    CHECK(limit.evaluate(1.0) == doctest::Approx(std::sqrt(3.0) / 2));
    CHECK(limit.evaluate(1e6) == doctest::Approx(1.0));

    for (double x : {0.7, 1.0, 2.0}) {
      double prev = 1e9;
      for (double t : {0.5, 0.25, 0.125, 0.0625, 1.0 / 64}) {
        const double err = std::abs(expgrowth_family(t).evaluate(x) - limit.evaluate(x));
        CHECK(err < prev);
        prev = err;
      }
    }
  }

  TEST_CASE("periodize_measure") {
    const double T = 0.25, L = pi / T;
    const auto leb = periodize_measure(lebesgue_line(), L, 5);
    CHECK(max_abs_diff(leb.values, make_vector({1.0, 0.0, 0.0, 0.0, 0.0, 0.0})) <= 1e-10);
    CHECK(leb.period == L);

    const auto atom = periodize_measure(lebesgue_line(pi / 4), L, 20);
    CHECK(atom[0] == doctest::Approx(1 + T / 4).epsilon(1e-10));
    for (Index n = 1; n <= 20; ++n) CHECK(atom[n] == doctest::Approx(T / 4).epsilon(1e-9));

    SpectralMeasure only;
    only.density = [](double) { return 0.0; };
    only.atoms = {{0.0, 2.0}};
    const auto flat = periodize_measure(only, 3.0, 6);
    for (Index n = 0; n <= 6; ++n) CHECK(flat[n] == doctest::Approx(2.0 / 3.0));
  }

  TEST_CASE("probability_normalize") {
    const auto [normalized, scale] = probability_normalize(moments({2, 1}));
    CHECK(normalized.values == make_vector({1.0, 0.5}));
    CHECK(scale == 2.0);
    CHECK(normalized.values * scale == make_vector({2.0, 1.0}));

    const auto [same, one] = probability_normalize(moments({1, -0.5, 0}));
    CHECK(same.values == make_vector({1.0, -0.5, 0.0}));
    CHECK(one == 1.0);
    CHECK_THROWS_AS(probability_normalize(moments({0, 1})), NotPositiveDefinite);
  }
}
