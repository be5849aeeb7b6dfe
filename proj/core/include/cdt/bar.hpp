#pragma once

#include "cdt/time.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cdt {

// One 5-minute OHLCV record.
struct Bar {
    Timestamp ts;
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    double volume = 0.0;

    bool valid() const {
        return low <= open && open <= high && low <= close && close <= high && low <= high &&
               volume >= 0.0;
    }
    bool operator==(const Bar&) const = default;
};

struct BarSeries {
    std::string symbol;
    std::vector<Bar> bars;

    bool operator==(const BarSeries&) const = default;
};

struct Gap {
    Timestamp gap_start; // last bar before the gap
    Timestamp gap_end;   // first bar after the gap
    std::int64_t missing_bars = 0;
};

struct GapReport {
    std::vector<Gap> gaps;

    bool empty() const { return gaps.empty(); }
    std::int64_t missing_total() const;
};

// Reports every adjacent pair spaced more than `spacing_minutes` apart.
// Report-only: gaps are legal, downstream framing drops frames that cross
// them.
GapReport validate_series(const BarSeries& series, std::int64_t spacing_minutes = 5);

} // namespace cdt
