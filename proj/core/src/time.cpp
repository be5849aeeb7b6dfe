#include "cdt/time.hpp"

#include "cdt/errors.hpp"

#include <charconv>
#include <cstdio>

namespace cdt {

namespace {

// Civil-calendar day arithmetic (proleptic Gregorian), valid far beyond any
// market data range.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);            // [0, 399]
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1; // [0, 365]
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;           // [0, 146096]
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

int parse_int(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw DataError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return value;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

Timestamp to_timestamp(const CivilDateTime& c) {
    const std::int64_t days = days_from_civil(c.year, c.month, c.day);
    return {days * 1440 + c.hour * 60 + c.minute};
}

CivilDateTime to_civil(Timestamp ts) {
    const std::int64_t days = floor_div(ts.minutes, 1440);
    const int mins_of_day = static_cast<int>(ts.minutes - days * 1440);
    CivilDateTime c;
    civil_from_days(days, c.year, c.month, c.day);
    c.hour = mins_of_day / 60;
    c.minute = mins_of_day % 60;
    return c;
}

Timestamp parse_timestamp(std::string_view date, std::string_view time) {
    if (date.size() != 10 || date[4] != '-' || date[7] != '-') {
        throw DataError("malformed date: '" + std::string(date) + "' (want YYYY-MM-DD)");
    }
    if (time.size() != 5 || time[2] != ':') {
        throw DataError("malformed time: '" + std::string(time) + "' (want HH:MM)");
    }
    CivilDateTime c;
    c.year = parse_int(date.substr(0, 4), "year");
    c.month = parse_int(date.substr(5, 2), "month");
    c.day = parse_int(date.substr(8, 2), "day");
    c.hour = parse_int(time.substr(0, 2), "hour");
    c.minute = parse_int(time.substr(3, 2), "minute");
    if (c.month < 1 || c.month > 12 || c.day < 1 || c.day > 31 || c.hour > 23 || c.minute > 59) {
        throw DataError("out-of-range date-time: '" + std::string(date) + " " + std::string(time) + "'");
    }
    return to_timestamp(c);
}

Timestamp parse_timestamp(std::string_view datetime) {
    if (datetime.size() != 16 || datetime[10] != ' ') {
        throw DataError("malformed timestamp: '" + std::string(datetime) + "' (want YYYY-MM-DD HH:MM)");
    }
    return parse_timestamp(datetime.substr(0, 10), datetime.substr(11, 5));
}

std::string format_date(Timestamp ts) {
    const CivilDateTime c = to_civil(ts);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", c.year, c.month, c.day);
    return buf;
}

std::string format_time(Timestamp ts) {
    const CivilDateTime c = to_civil(ts);
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02d:%02d", c.hour, c.minute);
    return buf;
}

std::string format_timestamp(Timestamp ts) {
    return format_date(ts) + " " + format_time(ts);
}

std::int64_t month_key(Timestamp ts) {
    const CivilDateTime c = to_civil(ts);
    return static_cast<std::int64_t>(c.year) * 12 + (c.month - 1);
}

} // namespace cdt
