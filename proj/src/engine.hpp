#pragma once

#include <cstdint>

#include "types.hpp"

namespace ecf {

// The ECF model prices a promised payment FV due in X calendar days as
//
//     PV = FV / sqrt(n),   n = X * (1 - k) / 365 + 1
//
// where k <= 1 is the issuer efficiency factor: k = 1 means zero default
// risk (PV = FV), k = 0 the natural baseline, and negative k a reliability
// below natural. n >= 1 always, with equality exactly at X = 0 or k = 1.

/// Tolerances and search bounds for the k solvers.
struct SolverConfig {
  double k_tolerance = 1e-12;      // bisection stops when the bracket is this narrow
  double pv_rel_tolerance = 1e-9;  // relative PV error accepted as a solution
  double k_search_floor = -1e6;    // hard lower bound for bracket expansion
  int max_iterations = 200;
};

/// Throws InvalidConfig unless tolerances > 0, floor < 1, iterations >= 1.
void validate(const SolverConfig& config);

/// n = X(1-k)/365 + 1. Throws InvalidTenor (X < 0) or KOutOfRange (k > 1).
double effective_periods(std::int64_t days, double k);

/// 1/sqrt(n), in (0, 1]; equals 1 iff X = 0 or k = 1.
double ecf_discount_factor(std::int64_t days, double k);

/// fv discounted over X days: fv / sqrt(n).
double pv_single(double fv, std::int64_t days, double k);

/// Inverse of pv_single: pv * sqrt(n).
double fv_single(double pv, std::int64_t days, double k);

/// Closed-form k implied by a single observed (pv, fv, X):
///     k = 1 - 365 ((fv/pv)^2 - 1) / X.
/// pv = fv returns k = 1 exactly. Throws SpeculativeDistortion when pv > fv
/// and InvalidTenor when X = 0 cannot explain pv < fv.
double solve_k_single(double pv, double fv, std::int64_t days);

/// Sum of pv_single over all flows with one shared k. Strictly increasing
/// in k; equals the undiscounted amount sum at k = 1.
double pv_schedule(const Schedule& schedule, double k);

/// The unique k with pv_schedule(schedule, k) = price, by bracketed
/// bisection on [k_search_floor, 1] (bracket grown geometrically downward
/// from -1). Throws SpeculativeDistortion (price >= amount sum),
/// BelowSearchFloor, or NoConvergence.
double solve_k_schedule(const Schedule& schedule, double price, const SolverConfig& config = {});

/// k * X: nominal days of risk the issuer's efficiency removes from the
/// holder. Negative when k < 0 (days added).
double days_saved(std::int64_t days, double k);

/// X(1-k): the shorter duration whose natural risk matches the deal;
/// complements days_saved to X exactly.
double risk_equivalent_days(std::int64_t days, double k);

}  // namespace ecf
