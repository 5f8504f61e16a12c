#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace ecf {

// Year length is fixed at 365 for every day-to-year conversion (ACT/365-Fixed).
// Calendar arithmetic still counts leap days; only the denominator is pinned.
inline constexpr double kDaysPerYear = 365.0;

/// One promised future payment.
struct CashFlow {
  std::int64_t days = 0;  // calendar days from the valuation date, >= 0
  double amount = 0.0;    // currency units, > 0
};

/// Ordered cash flows of one instrument (credit, bond, annuity, ...).
/// Flows must be strictly increasing in days; see validate_schedule.
struct Schedule {
  std::string instrument_id;
  std::vector<CashFlow> flows;

  double total_amount() const;
  std::int64_t maturity_days() const;  // day offset of the last flow, 0 if empty
};

/// Observed market price of one instrument.
struct Quote {
  std::string instrument_id;
  std::string issuer;
  double price = 0.0;  // > 0; must stay below the schedule's undiscounted sum
};

using Date = std::chrono::sys_days;

/// Parses "YYYY-MM-DD". Throws InvalidDate on malformed or non-existent dates.
Date parse_iso_date(std::string_view text);

/// Exact calendar-day difference. Throws InvalidTenor if flow < valuation.
std::int64_t day_count(Date valuation, Date flow);

/// Returns its argument iff all Schedule invariants hold:
/// non-empty, strictly increasing non-negative days, positive amounts.
/// Throws EmptySchedule or MalformedSchedule otherwise. Idempotent.
const Schedule& validate_schedule(const Schedule& schedule);

}  // namespace ecf
