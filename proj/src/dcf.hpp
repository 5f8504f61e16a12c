#pragma once

#include "types.hpp"

// Classical discounted-cash-flow baseline: annual compounding with
// t = days/365. Used only to compare curves and express quotes as yields.

namespace ecf::dcf {

/// (1+r)^(-t). Throws InvalidRate (r <= -1) or InvalidTenor (t < 0).
double discount_factor(double t_years, double annual_rate);

/// Sum of amount_i * (1+r)^(-days_i/365) over a validated schedule.
double pv(const Schedule& schedule, double annual_rate);

/// The annually compounded rate r in (-0.9999, 10] with pv(schedule, r) =
/// price, by bisection. Throws NoConvergence when no such rate exists.
double implied_yield(const Schedule& schedule, double price);

}  // namespace ecf::dcf
