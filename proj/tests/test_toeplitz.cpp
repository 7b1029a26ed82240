#include "canspec/toeplitz.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace canspec;
using canspec::testing::max_abs_diff;
using canspec::testing::random_valid_moments;
using canspec::testing::rel_diff;

namespace {

MomentSequence<double> moments(std::initializer_list<double> c) {
  return MomentSequence<double>(make_vector(c));
}

/// Trench states J_0^{-1}..J_n^{-1} for normalized moments.
std::vector<ToeplitzState<double>> trench_chain(const MomentSequence<double>& c, Index n) {
  std::vector<ToeplitzState<double>> chain{initial_toeplitz_state(1.0)};
  for (Index k = 1; k <= n; ++k) chain.push_back(trench_update(chain.back(), moment_column(c, k)));
  return chain;
}

}  // namespace

TEST_SUITE("toeplitz") {
  TEST_CASE("build_toeplitz") {
    CHECK(build_toeplitz(moments({1}), 0) == Matrix<double>::Constant(1, 1, 1.0));

    Matrix<double> expected(3, 3);
    expected << 1, -0.5, 0, -0.5, 1, -0.5, 0, -0.5, 1;
    CHECK(build_toeplitz(moments({1, -0.5, 0}), 2) == expected);

    Matrix<double> two(2, 2);
    two << 1, 0.5, 0.5, 1;
    CHECK(build_toeplitz(moments({1, 0.5}), 1) == two);

    CHECK_THROWS_AS(build_toeplitz(moments({1, 0.5}), 2), InsufficientMoments);
  }

  TEST_CASE("det_step") {
    const auto s0 = initial_toeplitz_state(1.0);
    CHECK(det_step(s0, 1.0, make_vector({0.5})) == doctest::Approx(0.75).epsilon(1e-15));

    const auto c = moments({1, -0.5, 0});
    const auto s1 = trench_update(s0, moment_column(c, 1));
    CHECK(det_step(s1, 1.0, reversed_moment_column(c, 2)) == doctest::Approx(0.5).epsilon(1e-14));

    std::mt19937_64 gen(canspec::testing::kSeed);
    for (int trial = 0; trial < 50; ++trial) {
      const auto r = random_valid_moments(gen, 10);
      const auto chain = trench_chain(r, 9);
      for (Index n = 1; n <= 10; ++n) {
        const double d = det_step(chain[size_t(n - 1)], 1.0, reversed_moment_column(r, n));
        CHECK(rel_diff(d, brute_det(build_toeplitz(r, n))) <= 1e-10);
      }
    }
  }

  TEST_CASE("bordered_det") {
    const auto s0 = initial_toeplitz_state(1.0);
    CHECK(bordered_det(s0, make_vector({0.5})) == doctest::Approx(0.5).epsilon(1e-15));

    const auto c = moments({1, -0.5, 0});
    const auto s1 = trench_update(s0, moment_column(c, 1));
    const Vector<double> v = reversed_moment_column(c, 2);
    Matrix<double> bordered(3, 3);
    bordered.topLeftCorner(2, 2) = build_toeplitz(c, 1);
    bordered.topRightCorner(2, 1) = v;
    bordered.bottomRows(1).setOnes();
    CHECK(bordered_det(s1, v) == doctest::Approx(brute_det(bordered)).epsilon(1e-14));

    const Vector<double> zero = Vector<double>::Zero(2);
    CHECK(bordered_det(s1, zero) == doctest::Approx(s1.det).epsilon(1e-15));
  }

  TEST_CASE("trench_update small cases") {
    const auto s1 = trench_update(initial_toeplitz_state(1.0), make_vector({0.5}));
    CHECK(s1.delta == doctest::Approx(0.75));
    Matrix<double> expected(2, 2);
    expected << 4.0 / 3, -2.0 / 3, -2.0 / 3, 4.0 / 3;
    CHECK((s1.inv - expected).cwiseAbs().maxCoeff() <= 1e-15);

    const auto c = moments({1, -0.5, 0});
    const auto chain = trench_chain(c, 2);
    const Matrix<double> product = build_toeplitz(c, 2) * chain[2].inv;
    CHECK((product - Matrix<double>::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(chain[2].det == doctest::Approx(0.5));
  }

  TEST_CASE("trench_update matches dense inverse on random moments") {
    std::mt19937_64 gen(canspec::testing::kSeed + 1);
    for (int trial = 0; trial < 50; ++trial) {
      const auto r = random_valid_moments(gen, 10);
      const auto chain = trench_chain(r, 10);
      for (Index n = 1; n <= 10; ++n) {
        const auto& s = chain[size_t(n)];
        const Matrix<double> J = build_toeplitz(r, n);
        CHECK((s.inv - brute_inverse(J)).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(persymmetry_defect(s.inv) <= 1e-10);
        CHECK(rel_diff(s.delta * chain[size_t(n - 1)].det, brute_det(J)) <= 1e-10);
        CHECK(rel_diff(s.det, brute_det(J)) <= 1e-10);

        const Vector<double> u = moment_column(r, n), v = reversed_moment_column(r, n);
        const Matrix<double>& prev = chain[size_t(n - 1)].inv;
        CHECK(std::abs(v.dot(prev * v) - u.dot(prev * u)) <= 1e-12);
      }
    }
  }

  TEST_CASE("trench_update rejects singular orders") {
    CHECK_THROWS_AS(trench_update(initial_toeplitz_state(1.0), make_vector({1.0})),
                    NotPositiveDefinite);
    try {
      trench_update(initial_toeplitz_state(1.0), make_vector({2.0}));
      FAIL("expected NotPositiveDefinite");
    } catch (const NotPositiveDefinite& e) {
      CHECK(e.order() == 1);
    }
  }

  TEST_CASE("check_positive_definite") {
    const auto ok = check_positive_definite(moments({1, -0.5, 0, 0}));
    CHECK(ok.valid());
    CHECK(ok.valid_through == 3);

    const auto point = check_positive_definite(moments({1, 1}));
    REQUIRE_FALSE(point.valid());
    CHECK(*point.first_failure == 1);
    CHECK(point.valid_through == 0);

    const auto big = check_positive_definite(moments({1, 2}));
    REQUIRE_FALSE(big.valid());
    CHECK(*big.first_failure == 1);

    CHECK(*check_positive_definite(moments({-1, 0})).first_failure == 0);
    // Non-normalized input is scaled by c_0 first.
    CHECK(check_positive_definite(moments({4, -2, 0})).valid());
  }

  TEST_CASE("dense oracles") {
    for (Index n : {1, 4, 12}) {
      CHECK(brute_det(Matrix<double>::Identity(n, n)) == doctest::Approx(1.0));
      CHECK(brute_inverse(Matrix<double>::Identity(n, n)) == Matrix<double>::Identity(n, n));
    }
    Matrix<double> m(2, 2);
    m << 1, 0.5, 0.5, 1;
    CHECK(brute_det(m) == doctest::Approx(0.75));
    Matrix<double> inv(2, 2);
    inv << 4.0 / 3, -2.0 / 3, -2.0 / 3, 4.0 / 3;
    CHECK((brute_inverse(m) - inv).cwiseAbs().maxCoeff() <= 1e-15);

    std::mt19937_64 gen(canspec::testing::kSeed + 2);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 20; ++trial) {
      Matrix<double> a(5, 5);
      for (Index i = 0; i < 25; ++i) a(i) = normal(gen);
      const Matrix<double> spd = a * a.transpose() + Matrix<double>::Identity(5, 5);
      CHECK((brute_inverse(spd) * spd - Matrix<double>::Identity(5, 5)).cwiseAbs().maxCoeff() <=
            1e-11);
    }

    Matrix<double> singular(2, 2);
    singular << 1, 1, 1, 1;
    CHECK_THROWS_AS(brute_inverse(singular), Singular);
    CHECK(brute_det(singular) == 0.0);
    CHECK_THROWS_AS(brute_det(Matrix<double>::Identity(13, 13)), std::invalid_argument);
    CHECK_THROWS_AS(brute_det(Matrix<double>::Zero(2, 3)), std::invalid_argument);
  }
}
