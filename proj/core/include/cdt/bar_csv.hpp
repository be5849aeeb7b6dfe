#pragma once

#include "cdt/bar.hpp"

#include <iosfwd>
#include <string>

namespace cdt {

// CSV wire format for bar series. Columns, in order:
//
//   date,time,open,high,low,close,volume
//
// UTF-8, '.' decimal separator, one optional header line (auto-detected).
// Example row: 2010-01-04,09:00,81.10,81.30,81.05,81.20,523

// Throws DataError naming the offending 1-based line on malformed rows,
// OHLC invariant violations, and duplicate timestamps. Rows may arrive out
// of order; the result is chronologically sorted.
BarSeries parse_bars(std::istream& source, std::string symbol);
BarSeries parse_bars_file(const std::string& path, std::string symbol);

// Inverse of parse_bars: parse(serialize(s)) == s for all valid series.
void serialize_bars(std::ostream& out, const BarSeries& series, bool header = true);
void serialize_bars_file(const std::string& path, const BarSeries& series, bool header = true);

// Shortest round-trip decimal formatting for doubles (used by every CSV
// writer so artifacts are byte-stable).
std::string format_double(double v);

} // namespace cdt
