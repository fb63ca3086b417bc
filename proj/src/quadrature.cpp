#include "muntz/quadrature.hpp"

#include <algorithm>
#include <limits>

namespace muntz::quad {

const double kGL8[8][2] = {
    {-0.96028985649753618, 0.10122853629037669},
    {-0.79666647741362673, 0.22238103445337434},
    {-0.52553240991632899, 0.31370664587788705},
    {-0.18343464249564978, 0.36268378337836177},
    {0.18343464249564978, 0.36268378337836177},
    {0.52553240991632899, 0.31370664587788705},
    {0.79666647741362673, 0.22238103445337434},
    {0.96028985649753618, 0.10122853629037669},
};

const double kGL16[16][2] = {
    {-0.98940093499164994, 0.027152459411754037},
    {-0.9445750230732326, 0.062253523938647706},
    {-0.86563120238783176, 0.095158511682492591},
    {-0.755404408355003, 0.12462897125553403},
    {-0.61787624440264377, 0.14959598881657676},
    {-0.45801677765722737, 0.16915651939500262},
    {-0.28160355077925892, 0.18260341504492361},
    {-0.095012509837637454, 0.18945061045506859},
    {0.095012509837637454, 0.18945061045506859},
    {0.28160355077925892, 0.18260341504492361},
    {0.45801677765722737, 0.16915651939500262},
    {0.61787624440264377, 0.14959598881657676},
    {0.755404408355003, 0.12462897125553403},
    {0.86563120238783176, 0.095158511682492591},
    {0.9445750230732326, 0.062253523938647706},
    {0.98940093499164994, 0.027152459411754037},
};

double TailModel::bound_from(double T) const {
  switch (kind) {
    case TailKind::Exponential:
      // int_T^inf e^{c - r t} dt
      return std::exp(c - rate * T) / rate;
    case TailKind::Polynomial:
      // int_T^inf e^c t^{-r} dt, r > 1
      return std::exp(c) * std::pow(T, 1.0 - rate) / (rate - 1.0);
    case TailKind::None:
      return std::numeric_limits<double>::infinity();
  }
  return std::numeric_limits<double>::infinity();
}

namespace {

// simple linear LSQ fit y ~ c - rate * x; returns {c, rate, rss}
struct LinFit {
  double c, rate, rss;
};

LinFit fit_line(const std::vector<std::pair<double, double>>& xy) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xy.size());
  for (auto& [x, y] : xy) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / det;
  const double icpt = (sy - slope * sx) / n;
  double rss = 0;
  for (auto& [x, y] : xy) {
    const double r = y - (icpt + slope * x);
    rss += r * r;
  }
  return {icpt, -slope, rss};
}

}  // namespace

TailModel fit_tail(const std::vector<std::pair<double, double>>& t_logmod) {
  TailModel m;
  if (t_logmod.size() < 4) return m;
  std::vector<std::pair<double, double>> finite;
  for (auto& [t, lm] : t_logmod)
    if (std::isfinite(lm) && t > 0.0) finite.push_back({t, lm});
  if (finite.size() < 4) return m;

  const LinFit e = fit_line(finite);
  std::vector<std::pair<double, double>> loglog;
  for (auto& [t, lm] : finite) loglog.push_back({std::log(t), lm});
  const LinFit p = fit_line(loglog);

  const bool exp_ok = e.rate > 1e-8;
  const bool poly_ok = p.rate > 1.0 + 1e-8;
  if (exp_ok && (!poly_ok || e.rss <= p.rss)) {
    m.kind = TailKind::Exponential;
    m.rate = e.rate;
    m.c = e.c;
  } else if (poly_ok) {
    m.kind = TailKind::Polynomial;
    m.rate = p.rate;
    m.c = p.c;
  }
  return m;
}

}  // namespace muntz::quad
