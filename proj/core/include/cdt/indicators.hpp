#pragma once

#include "cdt/bar.hpp"

#include <span>
#include <string>
#include <vector>

namespace cdt {

// Indicator families computable as feature rows. Formulas are the canonical
// textbook definitions; spans and smoothing coefficients are fixed per spec,
// not trained.
enum class IndicatorKind {
    Tp,        // typical price (high+low+close)/3
    Ema,       // exponential moving average of close
    MacdHist,  // (EMA_long - EMA_short) minus its signal EMA
    Bollinger, // SMA(close,n) +/- k * std(close,n), one band per row
    Rsi,       // Wilder relative strength index
    Cci,       // commodity channel index over typical price
    Vwap,      // cumulative volume-weighted average price, reset daily
    Obv,       // on-balance volume (cumulative signed volume)
    Adx,       // Wilder average directional index
    Adl,       // accumulation/distribution line
    Cmf,       // Chaikin money flow
    Roc,       // rate of change, percent
};

std::string_view to_string(IndicatorKind k);

enum class BandPart { Upper, Mid, Lower };

struct IndicatorSpec {
    IndicatorKind kind = IndicatorKind::Ema;
    int span = 14;       // primary time span; long span for MacdHist
    int span_b = 0;      // short span for MacdHist (span > span_b required)
    int signal_span = 0; // signal EMA span for MacdHist
    double alpha = 0.0;  // EMA smoothing; 0 selects the span default 2/(span+1)
    double band_k = 2.0; // Bollinger band width in standard deviations
    BandPart band_part = BandPart::Mid;

    void validate() const; // throws ConfigError
    std::string name() const;
};

// --- pinned formulas -------------------------------------------------------

double typical_price(const Bar& bar);

// out[0] = x[0]; out[i] = alpha*x[i] + (1-alpha)*out[i-1].
// alpha <= 0 selects 2/(span+1). Throws DataError on empty input.
std::vector<double> ema(std::span<const double> closes, int span, double alpha = 0.0);

// macd[i] = EMA_long[i] - EMA_short[i]; histogram = macd - EMA_signal(macd).
// Requires long_span > short_span >= 1.
std::vector<double> macd_histogram(std::span<const double> closes, int long_span,
                                   int short_span, int signal_span);

// out[i] = 100 * (x[i] - x[i-n]) / x[i-n] for i >= n, NaN before.
// Throws DataError on a zero divisor price.
std::vector<double> roc(std::span<const double> closes, int span);

// --- dispatch --------------------------------------------------------------

// One value per bar; the first warmup_length(spec) entries are NaN.
// Every value depends only on bars at or before its own timestamp.
std::vector<double> compute_indicator(const IndicatorSpec& spec, const BarSeries& series);

std::size_t warmup_length(const IndicatorSpec& spec);

} // namespace cdt
