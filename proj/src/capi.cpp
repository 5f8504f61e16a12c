#include "ecf/ecf.h"

#include <cstring>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "dcf.hpp"
#include "engine.hpp"
#include "types.hpp"
#include "walk.hpp"

struct ecf_schedule {
  ecf::Schedule impl;
};

struct ecf_batch {
  std::vector<ecf::Schedule> instruments;
  std::vector<ecf::Quote> quotes;
  std::vector<ecf::analysis::CalibrationRecord> records;
  bool ran = false;
};

namespace {

thread_local std::string t_last_error;

ecf_status to_status(ecf::ErrorCode code) {
  using ecf::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidTenor: return ECF_ERR_INVALID_TENOR;
    case ErrorCode::InvalidAmount: return ECF_ERR_INVALID_AMOUNT;
    case ErrorCode::InvalidDate: return ECF_ERR_INVALID_DATE;
    case ErrorCode::EmptySchedule: return ECF_ERR_EMPTY_SCHEDULE;
    case ErrorCode::MalformedSchedule: return ECF_ERR_MALFORMED_SCHEDULE;
    case ErrorCode::KOutOfRange: return ECF_ERR_K_OUT_OF_RANGE;
    case ErrorCode::SpeculativeDistortion: return ECF_ERR_SPECULATIVE_DISTORTION;
    case ErrorCode::BelowSearchFloor: return ECF_ERR_BELOW_SEARCH_FLOOR;
    case ErrorCode::NoConvergence: return ECF_ERR_NO_CONVERGENCE;
    case ErrorCode::InvalidRate: return ECF_ERR_INVALID_RATE;
    case ErrorCode::NoCrossover: return ECF_ERR_NO_CROSSOVER;
    case ErrorCode::InvalidConfig: return ECF_ERR_INVALID_CONFIG;
    case ErrorCode::UnknownInstrument: return ECF_ERR_UNKNOWN_INSTRUMENT;
  }
  return ECF_ERR_INTERNAL;
}

template <typename Fn>
ecf_status guarded(Fn&& fn) {
  try {
    t_last_error.clear();
    fn();
    return ECF_OK;
  } catch (const ecf::EcfError& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ECF_ERR_INTERNAL;
  }
}

ecf_status null_argument(const char* what) {
  t_last_error = std::string("null argument: ") + what;
  return ECF_ERR_NULL_ARGUMENT;
}

ecf::SolverConfig from_c(const ecf_solver_config* config) {
  if (config == nullptr) return {};
  return {config->k_tolerance, config->pv_rel_tolerance, config->k_search_floor,
          config->max_iterations};
}

}  // namespace

extern "C" {

const char* ecf_status_name(ecf_status status) {
  switch (status) {
    case ECF_OK: return "OK";
    case ECF_ERR_INVALID_TENOR: return "InvalidTenor";
    case ECF_ERR_INVALID_AMOUNT: return "InvalidAmount";
    case ECF_ERR_INVALID_DATE: return "InvalidDate";
    case ECF_ERR_EMPTY_SCHEDULE: return "EmptySchedule";
    case ECF_ERR_MALFORMED_SCHEDULE: return "MalformedSchedule";
    case ECF_ERR_K_OUT_OF_RANGE: return "KOutOfRange";
    case ECF_ERR_SPECULATIVE_DISTORTION: return "SpeculativeDistortion";
    case ECF_ERR_BELOW_SEARCH_FLOOR: return "BelowSearchFloor";
    case ECF_ERR_NO_CONVERGENCE: return "NoConvergence";
    case ECF_ERR_INVALID_RATE: return "InvalidRate";
    case ECF_ERR_NO_CROSSOVER: return "NoCrossover";
    case ECF_ERR_INVALID_CONFIG: return "InvalidConfig";
    case ECF_ERR_UNKNOWN_INSTRUMENT: return "UnknownInstrument";
    case ECF_ERR_NULL_ARGUMENT: return "NullArgument";
    case ECF_ERR_OUT_OF_RANGE: return "OutOfRange";
    case ECF_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* ecf_version(void) { return ECF_VERSION_STR; }

const char* ecf_last_error(void) { return t_last_error.c_str(); }

/* ---- scalar operations ---- */

ecf_status ecf_effective_periods(int64_t days, double k, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::effective_periods(days, k); });
}

ecf_status ecf_discount_factor(int64_t days, double k, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::ecf_discount_factor(days, k); });
}

ecf_status ecf_pv_single(double fv, int64_t days, double k, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::pv_single(fv, days, k); });
}

ecf_status ecf_fv_single(double pv, int64_t days, double k, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::fv_single(pv, days, k); });
}

ecf_status ecf_solve_k_single(double pv, double fv, int64_t days, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::solve_k_single(pv, fv, days); });
}

ecf_status ecf_days_saved(int64_t days, double k, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::days_saved(days, k); });
}

ecf_status ecf_risk_equivalent_days(int64_t days, double k, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::risk_equivalent_days(days, k); });
}

ecf_status ecf_day_count(const char* valuation_date, const char* flow_date, int64_t* out) {
  if (valuation_date == nullptr) return null_argument("valuation_date");
  if (flow_date == nullptr) return null_argument("flow_date");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = ecf::day_count(ecf::parse_iso_date(valuation_date), ecf::parse_iso_date(flow_date));
  });
}

/* ---- schedules ---- */

ecf_schedule* ecf_schedule_new(const char* instrument_id) {
  try {
    auto* handle = new ecf_schedule;
    handle->impl.instrument_id = instrument_id ? instrument_id : "";
    return handle;
  } catch (...) {
    return nullptr;
  }
}

void ecf_schedule_free(ecf_schedule* schedule) { delete schedule; }

ecf_status ecf_schedule_add_flow(ecf_schedule* schedule, int64_t days, double amount) {
  if (schedule == nullptr) return null_argument("schedule");
  return guarded([&] { schedule->impl.flows.push_back({days, amount}); });
}

ecf_status ecf_schedule_validate(const ecf_schedule* schedule) {
  if (schedule == nullptr) return null_argument("schedule");
  return guarded([&] { ecf::validate_schedule(schedule->impl); });
}

size_t ecf_schedule_flow_count(const ecf_schedule* schedule) {
  return schedule ? schedule->impl.flows.size() : 0;
}

double ecf_schedule_total_amount(const ecf_schedule* schedule) {
  return schedule ? schedule->impl.total_amount() : 0.0;
}

int64_t ecf_schedule_maturity_days(const ecf_schedule* schedule) {
  return schedule ? schedule->impl.maturity_days() : 0;
}

ecf_solver_config ecf_solver_config_default(void) {
  const ecf::SolverConfig defaults;
  return {defaults.k_tolerance, defaults.pv_rel_tolerance, defaults.k_search_floor,
          defaults.max_iterations};
}

ecf_status ecf_pv_schedule(const ecf_schedule* schedule, double k, double* out) {
  if (schedule == nullptr) return null_argument("schedule");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::pv_schedule(schedule->impl, k); });
}

ecf_status ecf_solve_k_schedule(const ecf_schedule* schedule, double price,
                                const ecf_solver_config* config, double* out) {
  if (schedule == nullptr) return null_argument("schedule");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::solve_k_schedule(schedule->impl, price, from_c(config)); });
}

/* ---- DCF ---- */

ecf_status ecf_dcf_discount_factor(double t_years, double annual_rate, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::dcf::discount_factor(t_years, annual_rate); });
}

ecf_status ecf_dcf_pv(const ecf_schedule* schedule, double annual_rate, double* out) {
  if (schedule == nullptr) return null_argument("schedule");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::dcf::pv(schedule->impl, annual_rate); });
}

ecf_status ecf_dcf_implied_yield(const ecf_schedule* schedule, double price, double* out) {
  if (schedule == nullptr) return null_argument("schedule");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ecf::dcf::implied_yield(schedule->impl, price); });
}

/* ---- analysis tables ---- */

ecf_status ecf_curve_table_rows(double max_years, double step_years, size_t* out_rows) {
  if (out_rows == nullptr) return null_argument("out_rows");
  return guarded([&] {
    const auto rows = ecf::analysis::curve_table(max_years, step_years, 0.0, {});
    *out_rows = rows.size();
  });
}

ecf_status ecf_curve_table(double max_years, double step_years, double k, const double* rates,
                           size_t n_rates, double* t_out, double* df_ecf_out, double* df_dcf_out) {
  if (n_rates > 0 && rates == nullptr) return null_argument("rates");
  if (t_out == nullptr) return null_argument("t_out");
  if (df_ecf_out == nullptr) return null_argument("df_ecf_out");
  if (n_rates > 0 && df_dcf_out == nullptr) return null_argument("df_dcf_out");
  return guarded([&] {
    const auto rows = ecf::analysis::curve_table(max_years, step_years, k, {rates, n_rates});
    for (size_t i = 0; i < rows.size(); ++i) {
      t_out[i] = rows[i].t_years;
      df_ecf_out[i] = rows[i].df_ecf;
      for (size_t j = 0; j < n_rates; ++j) df_dcf_out[i * n_rates + j] = rows[i].df_dcf[j];
    }
  });
}

ecf_status ecf_find_crossover(double annual_rate, double k, double* out_years) {
  if (out_years == nullptr) return null_argument("out_years");
  return guarded([&] { *out_years = ecf::analysis::find_crossover(annual_rate, k); });
}

ecf_status ecf_k_term_structure(double annual_rate, const double* maturities_years,
                                size_t n_maturities, double* k_out) {
  if (n_maturities > 0 && maturities_years == nullptr) return null_argument("maturities_years");
  if (n_maturities > 0 && k_out == nullptr) return null_argument("k_out");
  return guarded([&] {
    const auto points =
        ecf::analysis::k_term_structure(annual_rate, {maturities_years, n_maturities});
    for (size_t i = 0; i < points.size(); ++i) k_out[i] = points[i].k;
  });
}

/* ---- batch calibration ---- */

ecf_batch* ecf_batch_new(void) {
  try {
    return new ecf_batch;
  } catch (...) {
    return nullptr;
  }
}

void ecf_batch_free(ecf_batch* batch) { delete batch; }

ecf_status ecf_batch_add_instrument(ecf_batch* batch, const ecf_schedule* schedule) {
  if (batch == nullptr) return null_argument("batch");
  if (schedule == nullptr) return null_argument("schedule");
  return guarded([&] { batch->instruments.push_back(schedule->impl); });
}

ecf_status ecf_batch_add_quote(ecf_batch* batch, const char* instrument_id, const char* issuer,
                               double price) {
  if (batch == nullptr) return null_argument("batch");
  if (instrument_id == nullptr) return null_argument("instrument_id");
  return guarded([&] {
    batch->quotes.push_back({instrument_id, issuer ? issuer : "", price});
  });
}

ecf_status ecf_batch_run(ecf_batch* batch, const ecf_solver_config* config) {
  if (batch == nullptr) return null_argument("batch");
  return guarded([&] {
    batch->records =
        ecf::analysis::calibrate_batch(batch->quotes, batch->instruments, from_c(config));
    batch->ran = true;
  });
}

size_t ecf_batch_record_count(const ecf_batch* batch) {
  return (batch && batch->ran) ? batch->records.size() : 0;
}

ecf_status ecf_batch_record(const ecf_batch* batch, size_t index, ecf_calibration_record* out) {
  if (batch == nullptr) return null_argument("batch");
  if (out == nullptr) return null_argument("out");
  if (!batch->ran || index >= batch->records.size()) {
    t_last_error = "record index out of range (run the batch first)";
    return ECF_ERR_OUT_OF_RANGE;
  }
  const auto& record = batch->records[index];
  out->instrument_id = record.instrument_id.c_str();
  out->issuer = record.issuer.c_str();
  out->maturity_days = record.maturity_days;
  out->k = record.k;
  out->days_saved = record.days_saved;
  out->implied_yield = record.implied_yield;
  out->error = record.error ? to_status(*record.error) : ECF_OK;
  return ECF_OK;
}

/* ---- random-walk verification ---- */

ecf_status ecf_simulate_walks(const ecf_walk_config* config, ecf_walk_stats* out) {
  if (config == nullptr) return null_argument("config");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const ecf::sim::WalkStats stats = ecf::sim::simulate_walks(
        {config->n_steps, config->step_length, config->n_walks, config->seed});
    out->rms_displacement = stats.rms_displacement;
    out->mean_displacement = stats.mean_displacement;
    out->predicted_rms = stats.predicted_rms;
    out->relative_deviation = stats.relative_deviation;
  });
}

int ecf_verify_sqrt_law(const ecf_walk_stats* stats, double tolerance) {
  if (stats == nullptr) return 0;
  const ecf::sim::WalkStats s{stats->rms_displacement, stats->mean_displacement,
                              stats->predicted_rms, stats->relative_deviation};
  return ecf::sim::verify_sqrt_law(s, tolerance) ? 1 : 0;
}

const char* ecf_rng_algorithm(void) { return ecf::sim::rng_algorithm(); }

} /* extern "C" */
