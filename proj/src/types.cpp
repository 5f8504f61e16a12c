#include "types.hpp"

#include <charconv>

namespace ecf {

double Schedule::total_amount() const {
  double total = 0.0;
  for (const auto& flow : flows) total += flow.amount;
  return total;
}

std::int64_t Schedule::maturity_days() const {
  return flows.empty() ? 0 : flows.back().days;
}

namespace {

bool parse_field(std::string_view text, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > text.size()) return false;
  const char* first = text.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + len, out);
  return ec == std::errc() && ptr == first + len;
}

}  // namespace

Date parse_iso_date(std::string_view text) {
  int y = 0, m = 0, d = 0;
  const bool shape_ok = text.size() == 10 && text[4] == '-' && text[7] == '-' &&
                        parse_field(text, 0, 4, y) && parse_field(text, 5, 2, m) &&
                        parse_field(text, 8, 2, d);
  if (!shape_ok) fail(ErrorCode::InvalidDate, "expected YYYY-MM-DD, got '" + std::string(text) + "'");
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                        std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) fail(ErrorCode::InvalidDate, "no such calendar date: '" + std::string(text) + "'");
  return std::chrono::sys_days{ymd};
}

std::int64_t day_count(Date valuation, Date flow) {
  if (flow < valuation) fail(ErrorCode::InvalidTenor, "flow date precedes valuation date");
  return (flow - valuation).count();
}

const Schedule& validate_schedule(const Schedule& schedule) {
  if (schedule.flows.empty())
    fail(ErrorCode::EmptySchedule, "schedule '" + schedule.instrument_id + "' has no cash flows");
  std::int64_t prev_days = -1;
  for (const auto& flow : schedule.flows) {
    if (flow.days < 0)
      fail(ErrorCode::MalformedSchedule,
           "schedule '" + schedule.instrument_id + "' has a flow before the valuation date");
    if (flow.days == prev_days)
      fail(ErrorCode::MalformedSchedule,
           "schedule '" + schedule.instrument_id + "' has two flows on day " + std::to_string(flow.days));
    if (flow.days < prev_days)
      fail(ErrorCode::MalformedSchedule,
           "schedule '" + schedule.instrument_id + "' is not sorted by days");
    if (!(flow.amount > 0.0))
      fail(ErrorCode::MalformedSchedule,
           "schedule '" + schedule.instrument_id + "' has a non-positive amount on day " +
               std::to_string(flow.days));
    prev_days = flow.days;
  }
  return schedule;
}

}  // namespace ecf
