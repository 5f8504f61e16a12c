#include "engine.hpp"

#include <algorithm>
#include <cmath>

namespace ecf {

namespace {

void require_k(double k) {
  // NaN fails the comparison and is rejected too.
  if (!(k <= 1.0)) fail(ErrorCode::KOutOfRange, "k must be <= 1, got " + std::to_string(k));
}

void require_tenor(std::int64_t days) {
  if (days < 0) fail(ErrorCode::InvalidTenor, "tenor must be >= 0 days, got " + std::to_string(days));
}

void require_amount(double value, const char* what) {
  if (!(value > 0.0))
    fail(ErrorCode::InvalidAmount, std::string(what) + " must be positive, got " + std::to_string(value));
}

}  // namespace

void validate(const SolverConfig& config) {
  if (!(config.k_tolerance > 0.0) || !(config.pv_rel_tolerance > 0.0))
    fail(ErrorCode::InvalidConfig, "solver tolerances must be positive");
  if (!(config.k_search_floor < 1.0)) fail(ErrorCode::InvalidConfig, "k_search_floor must be < 1");
  if (config.max_iterations < 1) fail(ErrorCode::InvalidConfig, "max_iterations must be >= 1");
}

double effective_periods(std::int64_t days, double k) {
  require_tenor(days);
  require_k(k);
  return static_cast<double>(days) * (1.0 - k) / kDaysPerYear + 1.0;
}

double ecf_discount_factor(std::int64_t days, double k) {
  return 1.0 / std::sqrt(effective_periods(days, k));
}

double pv_single(double fv, std::int64_t days, double k) {
  require_amount(fv, "fv");
  return fv * ecf_discount_factor(days, k);
}

double fv_single(double pv, std::int64_t days, double k) {
  require_amount(pv, "pv");
  return pv * std::sqrt(effective_periods(days, k));
}

double solve_k_single(double pv, double fv, std::int64_t days) {
  require_tenor(days);
  require_amount(pv, "pv");
  require_amount(fv, "fv");
  if (pv > fv)
    fail(ErrorCode::SpeculativeDistortion,
         "pv " + std::to_string(pv) + " above fv " + std::to_string(fv) +
             "; no k <= 1 can reproduce the quote");
  if (pv == fv) return 1.0;  // zero default risk
  if (days == 0) fail(ErrorCode::InvalidTenor, "pv < fv is impossible at zero tenor");
  const double ratio = fv / pv;
  return 1.0 - kDaysPerYear * (ratio * ratio - 1.0) / static_cast<double>(days);
}

double pv_schedule(const Schedule& schedule, double k) {
  validate_schedule(schedule);
  require_k(k);
  double total = 0.0;
  for (const auto& flow : schedule.flows) total += flow.amount * ecf_discount_factor(flow.days, k);
  return total;
}

double solve_k_schedule(const Schedule& schedule, double price, const SolverConfig& config) {
  validate(config);
  validate_schedule(schedule);
  require_amount(price, "price");
  const double total = schedule.total_amount();
  if (price >= total)
    fail(ErrorCode::SpeculativeDistortion,
         "price " + std::to_string(price) + " at or above the undiscounted sum " + std::to_string(total));

  const auto pv_at = [&](double k) { return pv_schedule(schedule, k); };

  // pv is strictly increasing in k and pv(1) = total > price, so the root is
  // bracketed once some lo with pv(lo) <= price is found.
  double lo = std::max(-1.0, config.k_search_floor);
  while (pv_at(lo) > price) {
    if (lo <= config.k_search_floor)
      fail(ErrorCode::BelowSearchFloor,
           "price " + std::to_string(price) + " implies k below the search floor " +
               std::to_string(config.k_search_floor));
    lo = std::max(config.k_search_floor, 2.0 * lo);
  }
  double hi = 1.0;

  int iterations = 0;
  while (hi - lo > config.k_tolerance) {
    if (++iterations > config.max_iterations)
      fail(ErrorCode::NoConvergence, "k bisection exhausted " + std::to_string(config.max_iterations) +
                                         " iterations on '" + schedule.instrument_id + "'");
    const double mid = 0.5 * (lo + hi);
    if (pv_at(mid) < price) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  const double k = 0.5 * (lo + hi);
  if (std::abs(pv_at(k) - price) > config.pv_rel_tolerance * price)
    fail(ErrorCode::NoConvergence, "converged bracket does not reproduce the price on '" +
                                       schedule.instrument_id + "'");
  return k;
}

double days_saved(std::int64_t days, double k) {
  require_tenor(days);
  require_k(k);
  return k * static_cast<double>(days);
}

double risk_equivalent_days(std::int64_t days, double k) {
  require_tenor(days);
  require_k(k);
  return (1.0 - k) * static_cast<double>(days);
}

}  // namespace ecf
