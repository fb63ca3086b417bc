#include <doctest.h>

#include <cmath>
#include <random>

#include "muntz/errors.hpp"
#include "muntz/sequence_surgery.hpp"

using namespace muntz;

namespace {
constexpr double kGamma = 0.57721566490153286;
}

TEST_CASE("phi of identical sequences is identically zero") {
  const auto lam = ExponentSequence::arithmetic(0.0, 1.0, 200.0);
  const auto phi = comparison_phi(lam, lam, 200.0);
  CHECK(phi.base == 0.0);
  CHECK(phi.steps.jump_count() == 0);
  CHECK(phi.value_at(150.0) == 0.0);

  const auto res = build_lambda_star(phi, lam, lam);
  CHECK(res.lambda_star.empty());
  CHECK(res.A1_tail_average == doctest::Approx(0.0));
  for (const auto& s : res.residual_table) CHECK(std::abs(s.residual) < 1e-12);
}

TEST_CASE("phi for nested arithmetic sequences tracks the difference") {
  // Lambda = {2n} (= progression b=1/2), Lambda' = {n}
  const auto lam = arithmetic_progression(0.5, 400.0);
  const auto lamp = ExponentSequence::arithmetic(0.0, 1.0, 400.0);
  const auto phi = comparison_phi(lam, lamp, 400.0);
  // D(s) = lambda'(s) - lambda(s) is nondecreasing here, so phi(x) ~ D(x)
  for (double x : {10.0, 50.0, 150.0}) {
    const double d = lamp.characteristic_logarithm(x) -
                     lam.characteristic_logarithm(x);
    CHECK(phi.value_at(x) == doctest::Approx(d).epsilon(1e-9));
  }
  // jump bound: every jump of phi is bounded by the lambda' jump there
  for (std::size_t i = 0; i < phi.steps.jump_count(); ++i) {
    const double a = phi.steps.jump_points()[i];
    const double dlp = 1.0 / a;  // lambda' jumps by 1/a at integer a
    CHECK(phi.steps.jump_at(i) <= dlp + 1e-12);
    CHECK(std::abs(a - std::round(a)) < 1e-9);  // only at lambda' jumps
  }
}

TEST_CASE("horizon-too-small when the infimum is still falling at the edge") {
  // lambda grows, lambda' stalls: D decreases into the window edge
  const auto lam = ExponentSequence::arithmetic(0.0, 1.0, 300.0);
  const auto lamp = ExponentSequence::power(2.0, 300.0);
  CHECK_THROWS_AS(comparison_phi(lam, lamp, 300.0), Error);
}

TEST_CASE("lambda-star pipeline for {n^2} against the half-integer progression") {
  const double horizon = 500.0;
  const auto lam = ExponentSequence::power(2.0, horizon);
  const auto lamp = arithmetic_progression(0.5, horizon);  // {2n}
  const auto phi = comparison_phi(lam, lamp, horizon);
  const auto res = build_lambda_star(phi, lam, lamp);

  REQUIRE_FALSE(res.lambda_star.empty());
  // subsequence of lambda': every element is an even integer
  for (double v : res.lambda_star) {
    CHECK(std::abs(v / 2.0 - std::round(v / 2.0)) < 1e-9);
  }
  // jump bound on lambda*: at each lambda'-point at most the lambda' jump
  for (std::size_t i = 1; i < res.lambda_star.size(); ++i)
    CHECK(res.lambda_star[i] >= res.lambda_star[i - 1]);  // nondecreasing emit

  // residual |lambda + lambda* - lambda' - A1| <= eps(x) + 1/x on fresh points
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(res.h_x_min, res.h_x_max);
  const double lam_inf = 1.6449340668482264;  // pi^2/6
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    const double eps = lam_inf - lam.characteristic_logarithm(x);
    const double r = lam.characteristic_logarithm(x) +
                     points_char_log(res.lambda_star, x) -
                     lamp.characteristic_logarithm(x) - res.A1_tail_average;
    CHECK(std::abs(r) <= eps + 1.0 / x + 0.02);
  }
  // the two A1 estimates agree at the reported-residual scale
  CHECK(std::abs(res.A1_tail_average - res.A1_truncated_integral) < 0.05);
}

TEST_CASE("double-point adjustment") {
  const auto lam = ExponentSequence::power(2.0, 500.0);

  SUBCASE("already separated points are untouched") {
    const std::vector<double> star = {2.0, 6.0, 12.0};
    const auto adj = adjust_double_points(lam, star, 0.5);
    CHECK(adj.h1 == doctest::Approx(0.125));
    CHECK(adj.A3 == doctest::Approx(0.0));
    CHECK(adj.lambda_double_star == star);
    CHECK(adj.disjoint);
    CHECK(adj.merged_gap >= adj.h1 - 1e-12);
  }

  SUBCASE("coincident points shift right by h1") {
    const std::vector<double> star = {4.0, 16.0};
    const auto adj = adjust_double_points(lam, star, 0.5);
    CHECK(adj.lambda_double_star[0] == doctest::Approx(4.125));
    CHECK(adj.lambda_double_star[1] == doctest::Approx(16.125));
    CHECK(adj.disjoint);
    CHECK(adj.A3 ==
          doctest::Approx((1.0 / 4.0 - 1.0 / 4.125) + (1.0 / 16.0 - 1.0 / 16.125)));
  }

  SUBCASE("points inside the right guard band shift left") {
    const std::vector<double> star = {8.9375};  // 9 - h1/2 with h1 = 1/8
    const auto adj = adjust_double_points(lam, star, 0.5);
    CHECK(adj.lambda_double_star[0] == doctest::Approx(8.8125));
    CHECK(adj.disjoint);
  }
}

TEST_CASE("full surgery: disjointness, merged gap, tail estimate") {
  const double horizon = 500.0;
  const auto lam = ExponentSequence::power(2.0, horizon);
  const auto lamp = arithmetic_progression(0.5, horizon);
  const auto res =
      build_lambda_star(comparison_phi(lam, lamp, horizon), lam, lamp);
  const double b = 0.5;
  const auto adj = adjust_double_points(lam, res.lambda_star, b);

  CHECK(adj.h1 == doctest::Approx(0.125));
  CHECK(adj.disjoint);
  CHECK(adj.merged_gap >= adj.h1 * (1.0 - 1e-9));

  // |lambda*(x) - lambda**(x) - A3| <= 3/x for x >= 2 h1 + 1
  for (double x : {10.0, 50.0, 200.0}) {
    const double d = points_char_log(res.lambda_star, x) -
                     points_char_log(adj.lambda_double_star, x) - adj.A3;
    CHECK(std::abs(d) <= 3.0 / x);
  }

  // combined estimate |lambda + lambda** - b log x - (A1 + b log b + b gamma)
  //                    - A3| <= 13/x + eps(x)
  const double lam_inf = 1.6449340668482264;
  const double A_combined =
      res.A1_tail_average + b * std::log(b) + b * kGamma + adj.A3;
  for (double x : {20.0, 80.0, 300.0}) {
    const double eps = lam_inf - lam.characteristic_logarithm(x);
    const double r = lam.characteristic_logarithm(x) +
                     points_char_log(adj.lambda_double_star, x) -
                     b * std::log(x) - A_combined;
    CHECK(std::abs(r) <= 13.0 / x + eps + 0.02);
  }
}

TEST_CASE("lambda-star against the quarter-integer progression, horizon 200") {
  // Lambda' = {n/2}: every lambda* must equal some n/2
  const double horizon = 200.0;
  const auto lam = ExponentSequence::power(2.0, horizon);
  const auto lamp = arithmetic_progression(2.0, horizon);
  const auto res =
      build_lambda_star(comparison_phi(lam, lamp, horizon), lam, lamp);
  REQUIRE_FALSE(res.lambda_star.empty());
  for (double v : res.lambda_star)
    CHECK(std::abs(2.0 * v - std::round(2.0 * v)) < 1e-9);
  // strict increase: at most one lambda* per lambda' point, so the
  // characteristic-log jumps obey d lambda*(a) <= d lambda'(a)
  for (std::size_t i = 1; i < res.lambda_star.size(); ++i)
    CHECK(res.lambda_star[i] > res.lambda_star[i - 1]);
  // residual within eps(x) + 1/x
  const double lam_inf = 1.6449340668482264;
  for (int j = 0; j < 50; ++j) {
    const double x = res.h_x_min + (res.h_x_max - res.h_x_min) * j / 49.0;
    const double eps = lam_inf - lam.characteristic_logarithm(x);
    const double r = lam.characteristic_logarithm(x) +
                     points_char_log(res.lambda_star, x) -
                     lamp.characteristic_logarithm(x) - res.A1_tail_average;
    CHECK(std::abs(r) <= eps + 1.0 / x + 0.05);
  }
}
