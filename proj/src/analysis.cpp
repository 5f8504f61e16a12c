#include "analysis.hpp"

#include <cmath>
#include <unordered_map>

#include "dcf.hpp"

namespace ecf::analysis {

namespace {

// ECF discount factor on a real-valued tenor, for curve intersection work.
double df_ecf_years(double t_years, double k) {
  return 1.0 / std::sqrt(t_years * (1.0 - k) + 1.0);
}

}  // namespace

std::vector<CurveRow> curve_table(double max_years, double step_years, double k,
                                  std::span<const double> rates) {
  if (!(max_years > 0.0) || !(step_years > 0.0))
    fail(ErrorCode::InvalidConfig, "max_years and step_years must be positive");
  for (double rate : rates)
    if (!(rate > -1.0)) fail(ErrorCode::InvalidRate, "annual rate must be > -1");

  std::vector<CurveRow> rows;
  const double limit = max_years * (1.0 + 1e-12) + 1e-12;
  for (int i = 0;; ++i) {
    const double t = static_cast<double>(i) * step_years;
    if (t > limit) break;
    CurveRow row;
    row.t_years = t;
    row.df_ecf = ecf_discount_factor(std::llround(t * kDaysPerYear), k);
    row.df_dcf.reserve(rates.size());
    for (double rate : rates) row.df_dcf.push_back(dcf::discount_factor(t, rate));
    rows.push_back(std::move(row));
  }
  return rows;
}

double find_crossover(double annual_rate, double k) {
  if (!(annual_rate > 0.0))
    fail(ErrorCode::InvalidRate, "crossover requires a positive discounting rate");
  if (!(k < 1.0)) fail(ErrorCode::KOutOfRange, "crossover requires k < 1");

  const auto gap = [&](double t) { return df_ecf_years(t, k) - dcf::discount_factor(t, annual_rate); };

  // ECF must start below DCF for a crossover to exist.
  double lo = 1e-6;
  if (gap(lo) >= 0.0)
    fail(ErrorCode::NoCrossover, "ECF discounting never falls below DCF at this rate and k");

  double hi = 0.0;
  for (double t = 1.0; t <= 200.0; t += 1.0) {
    if (gap(t) >= 0.0) {
      hi = t;
      break;
    }
    lo = t;
  }
  if (hi == 0.0) fail(ErrorCode::NoCrossover, "no crossover within 200 years");

  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (gap(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<KTermPoint> k_term_structure(double annual_rate, std::span<const double> maturities_years) {
  if (!(annual_rate > 0.0)) fail(ErrorCode::InvalidRate, "term structure requires a positive yield");
  std::vector<KTermPoint> points;
  points.reserve(maturities_years.size());
  for (double maturity : maturities_years) {
    if (!(maturity > 0.0)) fail(ErrorCode::InvalidTenor, "maturities must be positive");
    const double fv = std::pow(1.0 + annual_rate, maturity);
    const std::int64_t days = std::llround(maturity * kDaysPerYear);
    points.push_back({maturity, solve_k_single(1.0, fv, days)});
  }
  return points;
}

std::vector<CalibrationRecord> calibrate_batch(std::span<const Quote> quotes,
                                               std::span<const Schedule> instruments,
                                               const SolverConfig& config) {
  validate(config);

  std::unordered_map<std::string_view, const Schedule*> by_id;
  for (const auto& schedule : instruments) by_id.emplace(schedule.instrument_id, &schedule);

  std::vector<CalibrationRecord> records;
  records.reserve(quotes.size());
  for (const auto& quote : quotes) {
    CalibrationRecord record;
    record.instrument_id = quote.instrument_id;
    record.issuer = quote.issuer;
    const auto found = by_id.find(quote.instrument_id);
    if (found == by_id.end()) {
      record.error = ErrorCode::UnknownInstrument;
      records.push_back(std::move(record));
      continue;
    }
    const Schedule& schedule = *found->second;
    try {
      validate_schedule(schedule);
      record.maturity_days = schedule.maturity_days();
      record.k = solve_k_schedule(schedule, quote.price, config);
      record.days_saved = days_saved(record.maturity_days, record.k);
      record.implied_yield = dcf::implied_yield(schedule, quote.price);
    } catch (const EcfError& e) {
      record.error = e.code();
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace ecf::analysis
