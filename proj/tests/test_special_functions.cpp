#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "muntz/errors.hpp"
#include "muntz/special_functions.hpp"

using namespace muntz;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kLogSqrtPi = 0.57236494292470009;

// high-precision references (principal branch)
struct Ref {
  Complex z, lg;
};
const Ref kLogGammaRefs[] = {
    {{0.5, 0.0}, {0.5723649429247001, 0.0}},
    {{1.0, 0.0}, {0.0, 0.0}},
    {{5.0, 3.0}, {2.2442467170202177, 4.7140895389049294}},
    {{0.5, 20.0}, {-30.496988002693260, 39.916729108473326}},
    {{12.3, -4.5}, {17.401054641430842, -11.212241852075316}},
    {{0.7, 0.1}, {0.24680342782493551, -0.12094174445752931}},
    {{3.25, 0.0}, {0.93580193110872536, 0.0}},
    {{25.0, 40.0}, {29.849018814915747, 138.94757254800083}},
    {{100.0, -70.0}, {336.22222578416518, -327.08591917699449}},
    {{0.5, -0.5}, {0.11238724280962311, 0.75072920212205074}},
    {{200.0, 150.0}, {805.92549199445942, 806.59740888376360}},
    {{1.5, 300.0}, {-464.61617564172115, 1412.7040109475107}},
};
}  // namespace

TEST_CASE("log_gamma matches references to 12+ significant digits") {
  for (const auto& r : kLogGammaRefs) {
    const Complex got = log_gamma(r.z);
    const double scale = std::max(1.0, std::abs(r.lg));
    CHECK(std::abs(got - r.lg) / scale < 1e-13);
  }
}

TEST_CASE("log_gamma special points and pole errors") {
  CHECK(std::abs(log_gamma({0.5, 0.0}) - Complex(kLogSqrtPi, 0.0)) < 1e-13);
  CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-13);
  CHECK_THROWS_AS(log_gamma({0.0, 0.0}), Error);
  CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), Error);
}

TEST_CASE("reflection identity residual below 1e-12") {
  // Gamma(z) Gamma(1-z) sin(pi z) = pi, via exponentials of the log values
  auto residual = [](Complex z) {
    const Complex v =
        std::exp(log_gamma(z) + log_gamma(1.0 - z) + log_sin_pi(z));
    return std::abs(v - kPi);
  };
  CHECK(residual({0.3, 2.0}) < 1e-12);

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ur(-3.0, 4.0), ui(-3.0, 3.0);
  int tested = 0;
  while (tested < 100) {
    const Complex z(ur(rng), ui(rng));
    if (std::abs(z.real() - std::round(z.real())) < 0.05 && std::abs(z.imag()) < 0.05)
      continue;  // too close to the poles/zeros of the identity factors
    CHECK(residual(z) < 1e-12);
    ++tested;
  }
}

TEST_CASE("recurrence Gamma(z+1) = z Gamma(z) to 1e-12 relative") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ur(0.5, 20.0), ui(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const Complex z(ur(rng), ui(rng));
    const Complex ratio = std::exp(log_gamma(z + 1.0) - log_gamma(z) - std::log(z));
    CHECK(std::abs(ratio - 1.0) < 1e-12);
  }
}

TEST_CASE("gamma asymptotic residual c1") {
  // z = 0: c1 = log|Gamma(1/2)| = log sqrt(pi)
  CHECK(gamma_asymptotic_residual({0.0, 0.0}) ==
        doctest::Approx(kLogSqrtPi).epsilon(1e-12));
  CHECK(std::abs(gamma_asymptotic_residual({100.0, 0.0})) <= 10.0);
  CHECK(std::abs(gamma_asymptotic_residual({0.0, 50.0})) <= 10.0);
  CHECK_THROWS_AS(gamma_asymptotic_residual({-1.0, 0.0}), Error);

  // grid sweep with the observed supremum reported in the assertion message
  double sup = 0.0;
  for (int i = 0; i <= 20; ++i)
    for (int j = -20; j <= 20; ++j) {
      const Complex z(5.0 * i, 5.0 * j);
      sup = std::max(sup, std::abs(gamma_asymptotic_residual(z)));
    }
  CHECK_MESSAGE(sup <= 10.0, "observed sup |c1| = ", sup);
}

TEST_CASE("malliavin psi") {
  CHECK(malliavin_psi(0.0) == doctest::Approx(2.0));
  CHECK(malliavin_psi(10.0) ==
        doctest::Approx(-0.0067069546215116127).epsilon(1e-12));
  CHECK(std::isinf(malliavin_psi(1.0)));
  CHECK(malliavin_psi(1.0) < 0.0);
  CHECK_THROWS_AS(malliavin_psi(-0.1), Error);
}

TEST_CASE("psi root in (5/6, 6/7) to 1e-12") {
  const double s0 = psi_root();
  CHECK(s0 > 5.0 / 6.0);
  CHECK(s0 < 6.0 / 7.0);
  CHECK(s0 == doctest::Approx(0.83355655960096470).epsilon(1e-11));
  CHECK(malliavin_psi(s0 - 0.01) > 0.0);
  CHECK(malliavin_psi(s0 + 0.01) < 0.0);
}

TEST_CASE("psi sign pattern and monotonicity") {
  const double s0 = psi_root();
  double prev_below = malliavin_psi(0.0);
  for (int i = 1; i <= 500; ++i) {
    const double s = 0.999 * i / 500.0;
    const double v = malliavin_psi(s);
    CHECK(v < prev_below);  // strictly decreasing on [0, 1)
    prev_below = v;
    if (s < s0) CHECK(v > 0.0);
    if (s > s0) CHECK(v < 0.0);
  }
  double prev_above = malliavin_psi(1.001);
  for (int i = 1; i <= 500; ++i) {
    const double s = 1.001 + 10.0 * i / 500.0;
    const double v = malliavin_psi(s);
    CHECK(v > prev_above);  // strictly increasing on (1, inf)
    CHECK(v < 0.0);
    prev_above = v;
  }
}

TEST_CASE("epsilon3 closed form") {
  CHECK(epsilon3(0.0) == 0.0);
  CHECK(epsilon3(1.0) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(epsilon3(0.5) == doctest::Approx(0.26162407188227392).epsilon(1e-14));
  CHECK_THROWS_AS(epsilon3(-1.0), Error);

  // x -> eps3(x)/x increases on (0,1]; its supremum over x > 0 sits at
  // x = sqrt(2) with value 2 log(1+sqrt(2)), comfortably below 3
  double prev = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double x = i / 200.0;
    const double ratio = epsilon3(x) / x;
    CHECK(ratio >= prev);
    prev = ratio;
  }
  CHECK(prev == doctest::Approx(2.0 * std::log(2.0)));
  const double sqrt2 = std::sqrt(2.0);
  const double sup = epsilon3(sqrt2) / sqrt2;
  CHECK(sup == doctest::Approx(2.0 * std::log(1.0 + sqrt2)).epsilon(1e-14));
  CHECK(sup < 3.0);
  for (int i = 1; i <= 400; ++i) {
    const double x = 0.01 + 20.0 * i / 400.0;
    CHECK(epsilon3(x) / x <= sup + 1e-12);
  }
  // ratio decays past the maximizer
  double prev_hi = sup;
  for (int i = 1; i <= 200; ++i) {
    const double x = sqrt2 + i / 10.0;
    const double ratio = epsilon3(x) / x;
    CHECK(ratio <= prev_hi + 1e-15);
    prev_hi = ratio;
  }
  // increasing and positive on (0, inf)
  CHECK(epsilon3(0.25) > 0.0);
  CHECK(epsilon3(2.0) > epsilon3(1.5));
}
