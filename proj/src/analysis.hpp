#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "engine.hpp"

// Tabulated comparisons between the ECF and DCF discount curves, the
// maturity term structure of k under a constant compound yield, and batch
// calibration of k from market quotes.

namespace ecf::analysis {

struct CurveRow {
  double t_years = 0.0;
  double df_ecf = 0.0;
  std::vector<double> df_dcf;  // one entry per requested rate, same order
};

/// Rows at t = 0, step, 2*step, ... <= max_years. The ECF column uses
/// X = round(t * 365) days; the DCF columns use (1+r)^(-t).
std::vector<CurveRow> curve_table(double max_years, double step_years, double k,
                                  std::span<const double> rates);

/// The tenor t* in (0, 200] years where the ECF discount factor overtakes
/// the DCF one: below it ECF discounts harder, beyond it DCF does. Bisection
/// to 1e-6 years. Throws NoCrossover when the curves never cross in range.
double find_crossover(double annual_rate, double k);

struct KTermPoint {
  double maturity_years = 0.0;
  double k = 0.0;
};

/// k implied at each maturity T when a unit notional compounds to
/// (1+r)^T and trades at par: prices FV = (1+r)^T against PV = 1 with
/// X = round(T * 365). Strictly decreasing in T for any r > 0.
std::vector<KTermPoint> k_term_structure(double annual_rate, std::span<const double> maturities_years);

struct CalibrationRecord {
  std::string instrument_id;
  std::string issuer;
  std::int64_t maturity_days = 0;
  double k = 0.0;
  double days_saved = 0.0;
  double implied_yield = 0.0;
  std::optional<ErrorCode> error;  // set when this record failed; fields above are then unset
};

/// One record per quote, in quote order. Failures (unknown instrument,
/// speculative price, solver breakdown) are carried on the record and
/// never abort the batch.
std::vector<CalibrationRecord> calibrate_batch(std::span<const Quote> quotes,
                                               std::span<const Schedule> instruments,
                                               const SolverConfig& config = {});

}  // namespace ecf::analysis
