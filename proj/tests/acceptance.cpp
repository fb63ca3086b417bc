// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Every tolerance is pinned here; nothing defers to later calibration.

#include <cmath>
#include <complex>
#include <cstdio>
#include <memory>
#include <random>
#include <vector>

#include "muntz/canonical_product.hpp"
#include "muntz/exponent_sequence.hpp"
#include "muntz/functionals.hpp"
#include "muntz/sequence_surgery.hpp"
#include "muntz/special_functions.hpp"

using namespace muntz;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGamma = 0.57721566490153286;

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("[%2d] %s  %-28s %s\n", idx, pass ? "PASS" : "FAIL", name,
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// 1. Product identities at truncation N = 2000 for Lambda = {n}.
void criterion1() {
  const ExponentSequence seq = ExponentSequence::arithmetic(0.0, 1.0, 2000.0);
  const TruncatedProduct prod(seq, 2000);
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  double worst_inv = 0.0, worst_mod = 0.0;
  int done = 0;
  while (done < 50) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) > 20.0) continue;
    // stay outside the pole guard of both +-z evaluations
    if (std::abs(z.imag()) < prod.pole_guard() &&
        seq.nearest_exponent_distance(std::abs(z.real())) < prod.pole_guard())
      continue;
    worst_inv = std::max(worst_inv, std::abs(prod.eval(z) * prod.eval(-z) - 1.0));
    ++done;
  }
  std::uniform_real_distribution<double> uy(0.0, 20.0);
  for (int i = 0; i < 50; ++i)
    worst_mod = std::max(
        worst_mod, std::abs(std::abs(prod.eval({0.0, uy(rng)})) - 1.0));
  report(1, "product identities", worst_inv <= 1e-9 && worst_mod <= 1e-10,
         fmt("|GG-1|<=%.2e  ||G(iy)|-1|<=%.2e", worst_inv, worst_mod));
}

// 2. Fuchs empirical constants: finite and stable under grid doubling.
void criterion2() {
  bool pass = true;
  std::string detail;
  for (const bool square : {false, true}) {
    const auto seq = square ? ExponentSequence::power(2.0, 2200.0)
                            : ExponentSequence::arithmetic(0.0, 1.0, 2200.0);
    const auto prod = TruncatedProduct::for_radius(seq, 46.0);
    const SieveRegion sieve(seq);
    auto make_grid = [&](std::size_t n, std::uint64_t seed) {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> ux(0.5, 40.0), uyy(-20.0, 20.0);
      std::vector<Complex> g;
      while (g.size() < n) {
        const Complex z(ux(rng), uyy(rng));
        if (sieve.contains(z)) g.push_back(z);
      }
      return g;
    };
    const auto r1 = certify_fuchs_bounds(prod, make_grid(200, 7));
    const auto r2 = certify_fuchs_bounds(prod, make_grid(400, 7));
    const double spread1 = r1.a_upper - r1.a_lower;
    const double spread2 = r2.a_upper - r2.a_lower;
    const bool ok = r1.pass && r2.pass && std::isfinite(spread1) &&
                    std::isfinite(spread2) && std::abs(spread2 - spread1) <= 2.0;
    pass = pass && ok;
    detail += fmt(square ? "sq:A=[%.2f,%.2f] " : "nat:A=[%.2f,%.2f] ",
                  r1.a_lower, r1.a_upper);
  }
  report(2, "fuchs bounds", pass, detail);
}

// 3. Gamma layer: reflection residual and the |c1| <= 10 envelope.
void criterion3() {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> ur(-3.0, 4.0), ui(-3.0, 3.0);
  double worst_refl = 0.0;
  int done = 0;
  while (done < 100) {
    const Complex z(ur(rng), ui(rng));
    if (std::abs(z.real() - std::round(z.real())) < 0.05 &&
        std::abs(z.imag()) < 0.05)
      continue;
    const Complex v = std::exp(log_gamma(z) + log_gamma(1.0 - z) + log_sin_pi(z));
    worst_refl = std::max(worst_refl, std::abs(v - kPi));
    ++done;
  }
  double c1_sup = 0.0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const Complex z(100.0 * i / 19.0, -100.0 + 200.0 * j / 19.0);
      c1_sup = std::max(c1_sup, std::abs(gamma_asymptotic_residual(z)));
    }
  report(3, "gamma layer", worst_refl <= 1e-12 && c1_sup <= 10.0,
         fmt("refl<=%.2e  sup|c1|=%.3f", worst_refl, c1_sup));
}

// 4. psi root interval, sign pattern, eps3(1).
void criterion4() {
  const double s0 = psi_root();
  bool pass = s0 > 5.0 / 6.0 && s0 < 6.0 / 7.0;
  pass = pass && std::abs(malliavin_psi(s0)) < 1e-11;
  for (int i = 1; i <= 1000; ++i) {
    const double s = 12.0 * i / 1000.0;
    if (std::abs(s - 1.0) < 1e-9) continue;
    const double v = malliavin_psi(s);
    if (s < s0) pass = pass && v > 0.0;
    if (s > s0) pass = pass && v < 0.0;
  }
  const double e31 = epsilon3(1.0);
  pass = pass && std::abs(e31 - 2.0 * std::log(2.0)) <= 1e-12;
  report(4, "psi function layer", pass,
         fmt("s0=%.12f  eps3(1)-2log2=%.2e", s0, e31 - 2.0 * std::log(2.0)));
}

// 5. Progression asymptotic residual <= 1/t.
void criterion5() {
  bool pass = true;
  double worst = 0.0;
  for (double b : {0.5, 1.0, 2.0}) {
    const auto seq = arithmetic_progression(b, 11000.0);
    const double A2 = b * std::log(b) + b * kGamma;
    for (double t : {1e2, 1e3, 1e4}) {
      const double r =
          std::abs(seq.characteristic_logarithm(t) - b * std::log(t) - A2);
      worst = std::max(worst, r * t);
      pass = pass && r <= 1.0 / t;
    }
  }
  report(5, "Lambda_b asymptotic", pass, fmt("max t*resid=%.3f", worst));
}

// 6. Surgery pipeline with the double-point adjustment.
void criterion6() {
  const double horizon = 500.0;
  const auto lam = ExponentSequence::power(2.0, horizon);
  const auto lamp = arithmetic_progression(0.5, horizon);  // {2n}
  const auto phi = comparison_phi(lam, lamp, horizon);
  const auto res = build_lambda_star(phi, lam, lamp);
  bool pass = !res.lambda_star.empty();
  // subsequence membership, element-wise
  for (double v : res.lambda_star)
    pass = pass && std::abs(v / 2.0 - std::round(v / 2.0)) < 1e-9;
  // Eq-(9)-style residual on fresh sample points
  const double lam_inf = kPi * kPi / 6.0;
  std::mt19937_64 rng(501);
  std::uniform_real_distribution<double> u(res.h_x_min, res.h_x_max);
  double worst_slack = 1e300;
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    const double eps = lam_inf - lam.characteristic_logarithm(x);
    const double r = lam.characteristic_logarithm(x) +
                     points_char_log(res.lambda_star, x) -
                     lamp.characteristic_logarithm(x) - res.A1_tail_average;
    worst_slack = std::min(worst_slack, eps + 1.0 / x - std::abs(r));
  }
  pass = pass && worst_slack >= 0.0;
  const double b = 0.5;
  const auto adj = adjust_double_points(lam, res.lambda_star, b);
  pass = pass && adj.disjoint && adj.merged_gap >= adj.h1 * (1.0 - 1e-12);
  double worst_a3 = 0.0;
  for (double x = 2.0 * adj.h1 + 1.0; x <= 0.9 * horizon; x *= 1.7) {
    const double d = points_char_log(res.lambda_star, x) -
                     points_char_log(adj.lambda_double_star, x) - adj.A3;
    worst_a3 = std::max(worst_a3, std::abs(d) * x);
    pass = pass && std::abs(d) <= 3.0 / x;
  }
  report(6, "surgery pipeline", pass,
         fmt("|L*|=%.0f slack>=%.3f max x|d|=%.3f",
             double(res.lambda_star.size()), worst_slack, worst_a3));
}

// 7. Biorthogonality matrix 8x8 at 1e-6.
void criterion7() {
  const auto seq = ExponentSequence::power(2.0, 26000.0);
  const auto kp = KernelParams::for_sequence(seq);
  const std::size_t K = 8;
  const double delta = 1.0 / seq.value(K - 1);  // 1/64
  const double reach = (-std::log(1e-9) + 4.0) / delta;
  const auto prod = TruncatedProduct::for_radius(seq, reach / 4.9);
  QuadratureSpec spec;
  const BiorthogonalSystem sys(prod, kp, kPi / 4.0, K, delta, spec);
  double worst = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    const double scale = 1.0 + std::abs(sys.expected_monomial(k, k));
    for (std::size_t m = 0; m < K; ++m) {
      const double lam = sys.lambda(m);
      const auto r = sys.apply(k, [lam](Complex z) { return std::pow(z, lam); });
      worst = std::max(worst,
                       std::abs(r.value - sys.expected_monomial(k, m)) / scale);
    }
  }
  report(7, "biorthogonality 8x8", worst <= 1e-6, fmt("max scaled err=%.2e", worst));
}

// 8. Contour representation crosscheck on slope-matched kernels.
void criterion8() {
  const double alpha = kPi / 4.0;
  auto seq = arithmetic_progression(0.25, 4200.0);
  const auto prod = TruncatedProduct::for_radius(seq, 60.0);
  const double A = 20.0;
  QuadratureSpec spec;
  auto kernel = std::make_shared<SectorGKernel>(prod, alpha, A);
  const SectorFunctional T(kernel, alpha, spec);
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> ux(0.4, 3.0), uy(-2.0, 2.0);
  std::vector<Complex> pts = {{1.0, 1.0}, {0.5, 0.0}};
  while (pts.size() < 10) pts.emplace_back(ux(rng), uy(rng));
  bool pass = true;
  double worst_ratio = 0.0;
  for (const Complex z : pts) {
    const auto res = representation_crosscheck(T, prod, alpha, A, z);
    const double ratio = res.residual / (10.0 * res.combined_estimate);
    worst_ratio = std::max(worst_ratio, ratio);
    pass = pass && ratio <= 1.0;
  }
  report(8, "representation crosscheck", pass,
         fmt("max resid/(10 est)=%.3f", worst_ratio));
}

// 9. Synthetic round trip: recovery to 1e-6, reconstruction to 1e-5.
void criterion9() {
  const auto seq = ExponentSequence::power(2.0, 26000.0);
  const auto kp = KernelParams::for_sequence(seq);
  const std::size_t K = 5;
  const double delta = 1.0 / seq.value(K - 1);
  const double reach = (-std::log(1e-9) + 4.0) / (delta / 2.0);
  const auto prod = TruncatedProduct::for_radius(seq, reach / 4.9);
  const double l1 = seq.value(0), l2 = seq.value(1), l5 = seq.value(4);
  auto f = [&](Complex z) {
    return 3.0 * std::pow(z, l1) - 2.0 * std::pow(z, l2) + 0.5 * std::pow(z, l5);
  };
  QuadratureSpec spec;
  const auto ex =
      recover_coefficients(prod, kp, kPi / 4.0, f, K, delta, spec);
  const Complex want[5] = {{3, 0}, {-2, 0}, {0, 0}, {0, 0}, {0.5, 0}};
  double worst_a = 0.0;
  for (std::size_t k = 0; k < K; ++k)
    worst_a = std::max(worst_a, std::abs(ex.terms[k].a - want[k]));
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> ur(0.05, 0.5), uph(-kPi + 0.05, kPi - 0.05);
  double worst_rec = 0.0;
  int outside_sector = 0;
  for (int i = 0; i < 20; ++i) {
    // half the points forced outside the sector |arg| <= pi/4
    const double phase = (i % 2) ? uph(rng)
                                 : (kPi / 4.0 + 0.2 +
                                    (kPi - kPi / 4.0 - 0.3) * ur(rng) / 0.5) *
                                       ((i % 4 == 0) ? 1.0 : -1.0);
    const Complex z = std::polar(ur(rng), phase);
    if (std::abs(phase) > kPi / 4.0) ++outside_sector;
    const auto rec = reconstruct(ex, z);
    worst_rec = std::max(worst_rec, std::abs(rec.value - f(z)));
  }
  const bool pass = worst_a <= 1e-6 && worst_rec <= 1e-5 && outside_sector >= 5;
  report(9, "recovery round trip", pass,
         fmt("max|da|=%.2e max|df|=%.2e outside=%.0f", worst_a, worst_rec,
             double(outside_sector)));
}

// 10. Incompleteness witness, stable under doubling the fit size.
void criterion10() {
  const auto seq = ExponentSequence::power(2.0, 26000.0);
  const auto prod = TruncatedProduct::for_radius(seq, 160.0);
  const double alpha = kPi / 4.0;
  QuadratureSpec spec;
  auto kernel = std::make_shared<SectorGKernel>(prod, alpha, 12.0);
  const SectorFunctional T(kernel, alpha, spec);
  const auto r6 = incompleteness_witness(T, prod, 2.5, 6);
  const auto r12 = incompleteness_witness(T, prod, 2.5, 12);
  const bool stable = r12.ls_residual <= 1.05 * r6.ls_residual + 1e-9;
  const bool pass = r6.lower_bound > 0.0 && r6.consistent &&
                    r6.ls_residual >= r6.lower_bound - 1e-8 && r12.consistent &&
                    stable;
  report(10, "incompleteness witness", pass,
         fmt("lower=%.2e ls6=%.4f ls12=%.4f", r6.lower_bound, r6.ls_residual,
             r12.ls_residual));
}

// 11. g0 asymptotics on a condition-(11) sequence.
void criterion11() {
  const auto seq = arithmetic_progression(0.5, 11000.0);
  const auto kp = KernelParams::for_sequence(seq);
  const auto prod = TruncatedProduct::for_radius(seq, 1001.0);
  const SieveRegion sieve(seq);
  double running_sup = -1e300;
  for (double x = 10.0; x <= 1000.0; x *= 1.09) {
    double xs = x;
    if (!sieve.contains({xs, 0.0})) xs += 2.0 * sieve.delta0();
    if (!sieve.contains({xs, 0.0})) continue;
    running_sup =
        std::max(running_sup, log_g0(prod, kp, {xs, 0.0}).log.real() / xs);
  }
  bool pass = running_sup < 0.05;
  const auto big = TruncatedProduct::for_radius(seq, 421.0);
  const std::size_t n = static_cast<std::size_t>(seq.counting_function(400.0));
  double worst_psi = 0.0;
  for (std::size_t k = n - 5; k < n; ++k) {
    const double lamk = seq.value(k);
    const double v = std::abs(log_psi_k_at_zero(big, kp, k).log.real() / lamk);
    worst_psi = std::max(worst_psi, v);
  }
  pass = pass && worst_psi < 0.1;
  report(11, "g0 asymptotics", pass,
         fmt("sup=%.4f  max|log psi_k|/lk=%.4f", running_sup, worst_psi));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (g_failures == 0) {
    std::printf("ACCEPTANCE: 11/11 PASS\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criteria FAILED\n", g_failures);
  return 1;
}
