#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cdt {

// Exchange-local naive date-time at minute resolution. No timezone math:
// the value is exactly what the data feed printed.
struct Timestamp {
    std::int64_t minutes = 0; // minutes since 1970-01-01 00:00

    auto operator<=>(const Timestamp&) const = default;
};

inline Timestamp operator+(Timestamp ts, std::int64_t mins) { return {ts.minutes + mins}; }
inline std::int64_t operator-(Timestamp a, Timestamp b) { return a.minutes - b.minutes; }

struct CivilDateTime {
    int year = 1970;
    int month = 1; // 1..12
    int day = 1;   // 1..31
    int hour = 0;  // 0..23
    int minute = 0;
};

Timestamp to_timestamp(const CivilDateTime& c);
CivilDateTime to_civil(Timestamp ts);

// Parses "YYYY-MM-DD" and "HH:MM". Throws DataError on malformed input.
Timestamp parse_timestamp(std::string_view date, std::string_view time);
// Parses "YYYY-MM-DD HH:MM".
Timestamp parse_timestamp(std::string_view datetime);

std::string format_date(Timestamp ts); // "YYYY-MM-DD"
std::string format_time(Timestamp ts); // "HH:MM"
std::string format_timestamp(Timestamp ts); // "YYYY-MM-DD HH:MM"

// Monotone key identifying the calendar month of ts (for monthly bucketing).
std::int64_t month_key(Timestamp ts);

} // namespace cdt
