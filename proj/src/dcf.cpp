#include "dcf.hpp"

#include <cmath>

namespace ecf::dcf {

namespace {

void require_rate(double annual_rate) {
  if (!(annual_rate > -1.0))
    fail(ErrorCode::InvalidRate, "annual rate must be > -1, got " + std::to_string(annual_rate));
}

constexpr double kYieldLo = -0.9999;
constexpr double kYieldHi = 10.0;

}  // namespace

double discount_factor(double t_years, double annual_rate) {
  require_rate(annual_rate);
  if (!(t_years >= 0.0)) fail(ErrorCode::InvalidTenor, "tenor must be >= 0 years");
  return std::pow(1.0 + annual_rate, -t_years);
}

double pv(const Schedule& schedule, double annual_rate) {
  validate_schedule(schedule);
  require_rate(annual_rate);
  double total = 0.0;
  for (const auto& flow : schedule.flows)
    total += flow.amount * std::pow(1.0 + annual_rate, -static_cast<double>(flow.days) / kDaysPerYear);
  return total;
}

double implied_yield(const Schedule& schedule, double price) {
  validate_schedule(schedule);
  if (!(price > 0.0)) fail(ErrorCode::InvalidAmount, "price must be positive");

  // pv is strictly decreasing in the rate.
  double lo = kYieldLo, hi = kYieldHi;
  if (price > pv(schedule, lo) || price < pv(schedule, hi))
    fail(ErrorCode::NoConvergence, "price " + std::to_string(price) +
                                       " is outside the attainable range for rates in (-0.9999, 10]");

  int iterations = 0;
  while (hi - lo > 1e-12) {
    if (++iterations > 200)
      fail(ErrorCode::NoConvergence, "yield bisection exhausted its iteration budget");
    const double mid = 0.5 * (lo + hi);
    if (pv(schedule, mid) > price) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  const double rate = 0.5 * (lo + hi);
  if (std::abs(pv(schedule, rate) - price) > 1e-9 * price)
    fail(ErrorCode::NoConvergence, "converged bracket does not reproduce the price");
  return rate;
}

}  // namespace ecf::dcf
