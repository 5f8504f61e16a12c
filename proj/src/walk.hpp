#pragma once

#include <cstdint>

#include "errors.hpp"

// Monte Carlo check of the planar random-walk displacement law
// S = sqrt(n) * lambda: after n fixed-length steps in independent uniform
// directions, E[S^2] = n * lambda^2 holds exactly, so the law is verified
// on the root-mean-square displacement of an ensemble of walks.

namespace ecf::sim {

struct WalkConfig {
  std::int64_t n_steps = 0;     // steps per walk, >= 1
  double step_length = 0.0;     // lambda, > 0
  std::int64_t n_walks = 0;     // ensemble size, >= 1
  std::uint64_t seed = 0;       // master seed; walk w uses a stream derived from (seed, w)
};

struct WalkStats {
  double rms_displacement = 0.0;   // sqrt(mean of S^2)
  double mean_displacement = 0.0;  // mean of S, strictly below rms for n_steps >= 2
  double predicted_rms = 0.0;      // sqrt(n_steps) * step_length
  double relative_deviation = 0.0; // |rms - predicted| / predicted
};

/// Name of the pseudo-random generator behind the walks, for reports.
const char* rng_algorithm();

/// Runs the ensemble. Bit-identical for a fixed config regardless of how
/// many threads execute it: every walk draws from its own seeded stream and
/// partial sums are combined in a fixed order. Throws InvalidConfig.
WalkStats simulate_walks(const WalkConfig& config);

/// True iff the measured RMS sits within `tolerance` (relative) of
/// sqrt(n) * lambda.
bool verify_sqrt_law(const WalkStats& stats, double tolerance);

}  // namespace ecf::sim
