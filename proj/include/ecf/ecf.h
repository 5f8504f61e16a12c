/* ecf.h - C interface to the ECF valuation library.
 *
 * The model prices a payment FV due in X calendar days as
 *     PV = FV / sqrt(X*(1-k)/365 + 1)
 * with a single issuer-efficiency parameter k <= 1 (k = 1: zero default
 * risk, PV = FV; negative k: reliability below natural). The library
 * calibrates k from market quotes, compares ECF against classical DCF
 * discounting, and verifies the underlying sqrt-n displacement law by
 * Monte Carlo.
 *
 * Conventions: every fallible function returns an ecf_status and writes
 * results through out-parameters; ecf_last_error() carries a thread-local
 * detail message for the most recent failure on the calling thread.
 * Objects behind opaque handles are created and released by the library.
 */

#ifndef ECF_H
#define ECF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ECF_BUILD_SHARED)
#    define ECF_API __declspec(dllexport)
#  else
#    define ECF_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define ECF_API __attribute__((visibility("default")))
#else
#  define ECF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecf_status {
  ECF_OK = 0,
  ECF_ERR_INVALID_TENOR = 1,
  ECF_ERR_INVALID_AMOUNT = 2,
  ECF_ERR_INVALID_DATE = 3,
  ECF_ERR_EMPTY_SCHEDULE = 4,
  ECF_ERR_MALFORMED_SCHEDULE = 5,
  ECF_ERR_K_OUT_OF_RANGE = 6,
  ECF_ERR_SPECULATIVE_DISTORTION = 7,
  ECF_ERR_BELOW_SEARCH_FLOOR = 8,
  ECF_ERR_NO_CONVERGENCE = 9,
  ECF_ERR_INVALID_RATE = 10,
  ECF_ERR_NO_CROSSOVER = 11,
  ECF_ERR_INVALID_CONFIG = 12,
  ECF_ERR_UNKNOWN_INSTRUMENT = 13,
  ECF_ERR_NULL_ARGUMENT = 14,
  ECF_ERR_OUT_OF_RANGE = 15,
  ECF_ERR_INTERNAL = 16
} ecf_status;

/* Stable machine-readable name for a status ("OK", "InvalidTenor", ...). */
ECF_API const char* ecf_status_name(ecf_status status);

/* Library version as "major.minor.patch". */
ECF_API const char* ecf_version(void);

/* Detail message for the last failing call on this thread; "" if none. */
ECF_API const char* ecf_last_error(void);

/* ---------------- core model, single payment ---------------- */

/* Effective periods n = X*(1-k)/365 + 1; n >= 1. */
ECF_API ecf_status ecf_effective_periods(int64_t days, double k, double* out);

/* Discount factor 1/sqrt(n), in (0, 1]. */
ECF_API ecf_status ecf_discount_factor(int64_t days, double k, double* out);

/* pv = fv / sqrt(n). */
ECF_API ecf_status ecf_pv_single(double fv, int64_t days, double k, double* out);

/* fv = pv * sqrt(n); exact inverse of ecf_pv_single. */
ECF_API ecf_status ecf_fv_single(double pv, int64_t days, double k, double* out);

/* Closed-form k = 1 - 365*((fv/pv)^2 - 1)/X implied by one quote. */
ECF_API ecf_status ecf_solve_k_single(double pv, double fv, int64_t days, double* out);

/* k * X: nominal risk days removed by the issuer's efficiency. */
ECF_API ecf_status ecf_days_saved(int64_t days, double k, double* out);

/* X * (1-k): the shorter tenor with equivalent natural risk. */
ECF_API ecf_status ecf_risk_equivalent_days(int64_t days, double k, double* out);

/* Calendar days between two ISO-8601 dates ("YYYY-MM-DD"). */
ECF_API ecf_status ecf_day_count(const char* valuation_date, const char* flow_date, int64_t* out);

/* ---------------- schedules ---------------- */

/* A cash-flow schedule under construction or in use. Flows must be added
 * in strictly increasing day order with positive amounts; violations are
 * reported by ecf_schedule_validate and by every pricing call. */
typedef struct ecf_schedule ecf_schedule;

ECF_API ecf_schedule* ecf_schedule_new(const char* instrument_id);
ECF_API void ecf_schedule_free(ecf_schedule* schedule);
ECF_API ecf_status ecf_schedule_add_flow(ecf_schedule* schedule, int64_t days, double amount);
ECF_API ecf_status ecf_schedule_validate(const ecf_schedule* schedule);
ECF_API size_t ecf_schedule_flow_count(const ecf_schedule* schedule);
ECF_API double ecf_schedule_total_amount(const ecf_schedule* schedule);
ECF_API int64_t ecf_schedule_maturity_days(const ecf_schedule* schedule);

typedef struct ecf_solver_config {
  double k_tolerance;      /* bisection bracket target, default 1e-12 */
  double pv_rel_tolerance; /* accepted relative PV error, default 1e-9 */
  double k_search_floor;   /* lower bound of the k search, default -1e6 */
  int max_iterations;      /* default 200 */
} ecf_solver_config;

ECF_API ecf_solver_config ecf_solver_config_default(void);

/* Sum of discounted flows under one shared k. */
ECF_API ecf_status ecf_pv_schedule(const ecf_schedule* schedule, double k, double* out);

/* The unique k reproducing `price`; config NULL means defaults. */
ECF_API ecf_status ecf_solve_k_schedule(const ecf_schedule* schedule, double price,
                                        const ecf_solver_config* config, double* out);

/* ---------------- DCF comparison baseline ---------------- */

/* (1+r)^(-t), annual compounding, t in years. */
ECF_API ecf_status ecf_dcf_discount_factor(double t_years, double annual_rate, double* out);

/* Schedule PV under DCF with t = days/365. */
ECF_API ecf_status ecf_dcf_pv(const ecf_schedule* schedule, double annual_rate, double* out);

/* Annually compounded rate in (-0.9999, 10] reproducing `price`. */
ECF_API ecf_status ecf_dcf_implied_yield(const ecf_schedule* schedule, double price, double* out);

/* ---------------- curve and term-structure tables ---------------- */

/* Number of rows a curve table will hold: t = 0, step, ... <= max_years. */
ECF_API ecf_status ecf_curve_table_rows(double max_years, double step_years, size_t* out_rows);

/* Fills t_out[rows], df_ecf_out[rows] and df_dcf_out[rows * n_rates]
 * (row-major: df_dcf_out[row * n_rates + rate_index]). Buffers must hold
 * the counts reported by ecf_curve_table_rows. */
ECF_API ecf_status ecf_curve_table(double max_years, double step_years, double k,
                                   const double* rates, size_t n_rates,
                                   double* t_out, double* df_ecf_out, double* df_dcf_out);

/* Tenor in (0, 200] years where the ECF discount factor overtakes DCF's. */
ECF_API ecf_status ecf_find_crossover(double annual_rate, double k, double* out_years);

/* k implied at each maturity when (1+r)^T trades at par; fills k_out[n]. */
ECF_API ecf_status ecf_k_term_structure(double annual_rate, const double* maturities_years,
                                        size_t n_maturities, double* k_out);

/* ---------------- batch calibration ---------------- */

typedef struct ecf_batch ecf_batch;

/* One calibration result. String pointers belong to the batch and stay
 * valid until the next ecf_batch_run or ecf_batch_free. `error` is ECF_OK
 * for calibrated records; otherwise the numeric fields are meaningless. */
typedef struct ecf_calibration_record {
  const char* instrument_id;
  const char* issuer;
  int64_t maturity_days;
  double k;
  double days_saved;
  double implied_yield;
  ecf_status error;
} ecf_calibration_record;

ECF_API ecf_batch* ecf_batch_new(void);
ECF_API void ecf_batch_free(ecf_batch* batch);

/* Registers a copy of `schedule` as the instrument quotes refer to. */
ECF_API ecf_status ecf_batch_add_instrument(ecf_batch* batch, const ecf_schedule* schedule);
ECF_API ecf_status ecf_batch_add_quote(ecf_batch* batch, const char* instrument_id,
                                       const char* issuer, double price);

/* Calibrates every quote (config NULL means defaults). Per-record failures
 * are carried on the records; the call itself only fails on misuse. */
ECF_API ecf_status ecf_batch_run(ecf_batch* batch, const ecf_solver_config* config);
ECF_API size_t ecf_batch_record_count(const ecf_batch* batch);
ECF_API ecf_status ecf_batch_record(const ecf_batch* batch, size_t index,
                                    ecf_calibration_record* out);

/* ---------------- random-walk verification ---------------- */

typedef struct ecf_walk_config {
  int64_t n_steps;    /* steps per walk, >= 1 */
  double step_length; /* lambda, > 0 */
  int64_t n_walks;    /* ensemble size, >= 1 */
  uint64_t seed;      /* master seed; results are deterministic per seed */
} ecf_walk_config;

typedef struct ecf_walk_stats {
  double rms_displacement;
  double mean_displacement;
  double predicted_rms;      /* sqrt(n_steps) * step_length */
  double relative_deviation; /* |rms - predicted| / predicted */
} ecf_walk_stats;

ECF_API ecf_status ecf_simulate_walks(const ecf_walk_config* config, ecf_walk_stats* out);

/* 1 if the measured RMS is within `tolerance` (relative) of the
 * prediction, else 0. */
ECF_API int ecf_verify_sqrt_law(const ecf_walk_stats* stats, double tolerance);

/* Name of the pseudo-random generator, for report reproducibility. */
ECF_API const char* ecf_rng_algorithm(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ECF_H */
