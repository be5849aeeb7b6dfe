#pragma once

#include "cdt/frames.hpp"
#include "cdt/indicators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cdt {

// One feature row: either a raw bar field or an indicator.
struct SchemaRow {
    std::string name;
    RowKind kind = RowKind::Price;
    std::optional<IndicatorSpec> indicator; // nullopt -> raw field
    int raw_field = -1;                     // 0=open 1=high 2=low 3=close 4=volume
};

struct FeatureSchema {
    std::vector<SchemaRow> rows;

    // The five raw OHLCV rows.
    static FeatureSchema raw_ohlcv();

    // The default 46-row configuration: 5 raw rows plus 41 indicator rows
    // spanning EMA, MACD histogram, Bollinger bands, ROC, RSI, CCI, CMF,
    // ADX, VWAP, OBV, and ADL at multiple time spans. The exact span table
    // is a documented config default and fully overridable.
    static FeatureSchema full46();

    std::size_t close_row() const; // throws DataError when absent
    void validate() const;         // unique names, known fields, valid params
};

// Evaluates every schema row over the series. first_valid is the longest
// warm-up across rows; values before it are NaN and excluded from framing.
// Throws DataError when the series cannot clear all warm-ups.
FeatureMatrix build_feature_matrix(const BarSeries& series, const FeatureSchema& schema);

} // namespace cdt
