#include "canspec/opuc.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace canspec;
using canspec::testing::max_abs_diff;
using canspec::testing::random_alphas;
using canspec::testing::random_valid_moments;
using canspec::testing::rel_diff;

namespace {

VerblunskySequence<double> alphas(std::initializer_list<double> a) {
  return VerblunskySequence<double>(make_vector(a));
}

}  // namespace

TEST_SUITE("opuc") {
  TEST_CASE("szego_step") {
    const auto p1 = szego_step(MonicPair<double>::unit(), -0.5);
    CHECK(p1.phi == make_vector({0.5, 1.0}));
    CHECK(p1.phi_star == make_vector({1.0, 0.5}));

    const auto p2 = szego_step(p1, 0.0);
    CHECK(p2.phi == make_vector({0.0, 0.5, 1.0}));

    CHECK_THROWS_AS(szego_step(p1, 1.0), InvalidVerblunsky);
    CHECK_THROWS_AS(szego_step(p1, -1.5), InvalidVerblunsky);
  }

  TEST_CASE("reverse polynomial involution and phi(1) = phi*(1)") {
    std::mt19937_64 gen(canspec::testing::kSeed + 10);
    for (int trial = 0; trial < 30; ++trial) {
      const VerblunskySequence<double> a(random_alphas(gen, 12));
      MonicPair<double> pair = MonicPair<double>::unit();
      for (Index n = 0; n < a.size(); ++n) {
        pair = szego_step(pair, a[n]);
        CHECK(reverse_polynomial(reverse_polynomial(pair.phi)) == pair.phi);
        CHECK(max_abs_diff(reverse_polynomial(pair.phi), pair.phi_star) <= 1e-14);
        CHECK(pair.phi[pair.degree()] == 1.0);
        CHECK(std::abs(evaluate_polynomial(pair.phi, 1.0) - evaluate_polynomial(pair.phi_star, 1.0)) <=
              1e-13);
      }
    }
  }

  TEST_CASE("monic_norm_sq") {
    CHECK(monic_norm_sq(alphas({0, 0, 0}), 3) == 1.0);
    CHECK(monic_norm_sq(alphas({-0.5, -1.0 / 3}), 2) == doctest::Approx(2.0 / 3).epsilon(1e-15));

    const MomentSequence<double> c(make_vector({1.0, -0.5, 0.0}));
    const double heine = brute_det(build_toeplitz(c, 2)) / brute_det(build_toeplitz(c, 1));
    CHECK(monic_norm_sq(alphas({-0.5, -1.0 / 3}), 2) == doctest::Approx(heine).epsilon(1e-14));

    const double a = 0.3;
    CHECK(monic_norm_sq(alphas({a, a, a, a, a}), 5) ==
          doctest::Approx(std::pow(1 - a * a, 5)).epsilon(1e-14));
    CHECK_THROWS_AS(monic_norm_sq(alphas({0.1}), 2), OutOfRange);
  }

  TEST_CASE("orthonormal_sq_at_one") {
    const Vector<double> h = orthonormal_sq_at_one(alphas({-0.5, -1.0 / 3, -0.25, -0.2}));
    CHECK(max_abs_diff(h, make_vector({1.0, 3.0, 6.0, 10.0, 15.0})) <= 1e-13);

    CHECK(orthonormal_sq_at_one(alphas({0, 0, 0})) == Vector<double>::Ones(4));

    for (double a : {0.5, 2.0, 0.8}) {
      const double alpha = (1 - a) / (1 + a);
      const Vector<double> g = orthonormal_sq_at_one(
          VerblunskySequence<double>(Vector<double>::Constant(8, alpha)));
      for (Index n = 0; n <= 8; ++n) CHECK(rel_diff(g[n], std::pow(a, double(n))) <= 1e-13);
    }
    CHECK_THROWS_AS(orthonormal_sq_at_one(alphas({0.2, 1.0})), InvalidVerblunsky);
  }

  TEST_CASE("moments_from_verblunsky") {
    const auto c = moments_from_verblunsky(alphas({-0.5, -1.0 / 3, -0.25}));
    CHECK(max_abs_diff(c.values, make_vector({1.0, -0.5, 0.0, 0.0})) <= 1e-15);

    const auto lebesgue = moments_from_verblunsky(alphas({0, 0, 0}), 2.5);
    CHECK(lebesgue.values == make_vector({2.5, 0.0, 0.0, 0.0}));

    CHECK_THROWS_AS(moments_from_verblunsky(alphas({0.1}), 0.0), NotPositiveDefinite);
  }

  TEST_CASE("verblunsky_from_moments") {
    const auto a = verblunsky_from_moments(MomentSequence<double>(make_vector({1.0, -0.5, 0.0, 0.0})));
    CHECK(max_abs_diff(a.alphas, make_vector({-0.5, -1.0 / 3, -0.25})) <= 1e-15);

    const auto zero = verblunsky_from_moments(MomentSequence<double>(make_vector({1.0, 0.0, 0.0})));
    CHECK(zero.alphas == Vector<double>::Zero(2));

    CHECK_THROWS_AS(verblunsky_from_moments(MomentSequence<double>(make_vector({1.0, 1.0}))),
                    NotPositiveDefinite);

    // Rounding exact moments to double already moves alpha by ~1e-8 at N = 20,
    // so the 1e-10 round trip is checked with long double moments.
    std::mt19937_64 gen(canspec::testing::kSeed + 11);
    for (int trial = 0; trial < 100; ++trial) {
      const VerblunskySequence<long double> seed(random_alphas(gen, 20).cast<long double>());
      const auto back = verblunsky_from_moments(moments_from_verblunsky(seed, 3.0L));
      CHECK(double((back.alphas - seed.alphas).cwiseAbs().maxCoeff()) <= 1e-10);
    }
    std::mt19937_64 short_gen(canspec::testing::kSeed + 13);
    for (int trial = 0; trial < 100; ++trial) {
      const VerblunskySequence<double> seed(random_alphas(short_gen, 8));
      const auto back = verblunsky_from_moments(moments_from_verblunsky(seed, 3.0));
      CHECK(max_abs_diff(back.alphas, seed.alphas) <= 1e-10);
    }
  }

  TEST_CASE("heine_monic_oracle") {
    const auto h1 = heine_monic_oracle(MomentSequence<double>(make_vector({1.0, -0.5})), 1);
    CHECK(max_abs_diff(h1.pair.phi, make_vector({0.5, 1.0})) <= 1e-15);
    CHECK(h1.norm_sq == doctest::Approx(0.75));

    const auto h2 = heine_monic_oracle(MomentSequence<double>(make_vector({1.0, 0.0, 0.0})), 2);
    CHECK(h2.pair.phi == make_vector({0.0, 0.0, 1.0}));

    std::mt19937_64 gen(canspec::testing::kSeed + 12);
    for (int trial = 0; trial < 40; ++trial) {
      const auto c = random_valid_moments(gen, 9);
      const auto a = verblunsky_from_moments(c);
      for (Index n = 1; n <= 8; ++n) {
        const auto heine = heine_monic_oracle(c, n);
        if (n <= 6) CHECK(max_abs_diff(heine.pair.phi, monic_polynomial(a, n).phi) <= 1e-9);
        CHECK(rel_diff(monic_norm_sq(a, n), heine.norm_sq) <= 1e-9);
      }
    }
    CHECK_THROWS_AS(heine_monic_oracle(MomentSequence<double>(make_vector({1.0, 1.0, 0.5})), 2),
                    NotPositiveDefinite);
  }
}
