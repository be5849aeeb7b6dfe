#include "cdt/feature_schema.hpp"

#include "cdt/errors.hpp"

#include <cmath>
#include <unordered_set>

namespace cdt {

namespace {

SchemaRow raw_row(std::string name, int field, RowKind kind) {
    SchemaRow r;
    r.name = std::move(name);
    r.kind = kind;
    r.raw_field = field;
    return r;
}

SchemaRow indicator_row(IndicatorSpec spec, RowKind kind) {
    SchemaRow r;
    r.name = spec.name();
    r.kind = kind;
    r.indicator = spec;
    return r;
}

IndicatorSpec make(IndicatorKind kind, int span = 0) {
    IndicatorSpec s;
    s.kind = kind;
    s.span = span;
    return s;
}

} // namespace

FeatureSchema FeatureSchema::raw_ohlcv() {
    FeatureSchema s;
    s.rows = {
        raw_row("open", 0, RowKind::Price),
        raw_row("high", 1, RowKind::Price),
        raw_row("low", 2, RowKind::Price),
        raw_row("close", 3, RowKind::Price),
        raw_row("volume", 4, RowKind::Volume),
    };
    return s;
}

FeatureSchema FeatureSchema::full46() {
    FeatureSchema s = raw_ohlcv();

    for (int span : {5, 10, 20, 50, 100, 200}) {
        s.rows.push_back(indicator_row(make(IndicatorKind::Ema, span), RowKind::Price));
    }
    for (auto [a, b, sig] : {std::array{26, 12, 9}, std::array{35, 5, 5}, std::array{17, 8, 9}}) {
        IndicatorSpec spec = make(IndicatorKind::MacdHist, a);
        spec.span_b = b;
        spec.signal_span = sig;
        s.rows.push_back(indicator_row(spec, RowKind::Oscillator));
    }
    for (int span : {20, 10}) {
        for (BandPart part : {BandPart::Upper, BandPart::Mid, BandPart::Lower}) {
            IndicatorSpec spec = make(IndicatorKind::Bollinger, span);
            spec.band_part = part;
            s.rows.push_back(indicator_row(spec, RowKind::Price));
        }
    }
    for (int span : {1, 5, 10, 20, 50}) {
        s.rows.push_back(indicator_row(make(IndicatorKind::Roc, span), RowKind::Oscillator));
    }
    for (int span : {7, 14, 21, 28, 50}) {
        s.rows.push_back(indicator_row(make(IndicatorKind::Rsi, span), RowKind::Oscillator));
    }
    for (int span : {10, 20, 30, 40, 50}) {
        s.rows.push_back(indicator_row(make(IndicatorKind::Cci, span), RowKind::Oscillator));
    }
    for (int span : {10, 20, 40, 50}) {
        s.rows.push_back(indicator_row(make(IndicatorKind::Cmf, span), RowKind::Oscillator));
    }
    for (int span : {7, 14, 28, 50}) {
        s.rows.push_back(indicator_row(make(IndicatorKind::Adx, span), RowKind::Oscillator));
    }
    s.rows.push_back(indicator_row(make(IndicatorKind::Vwap), RowKind::Price));
    // OBV and ADL are unbounded cumulative lines; only their shape carries
    // signal, so they take the per-row standardization path.
    s.rows.push_back(indicator_row(make(IndicatorKind::Obv), RowKind::Oscillator));
    s.rows.push_back(indicator_row(make(IndicatorKind::Adl), RowKind::Oscillator));
    return s;
}

std::size_t FeatureSchema::close_row() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].raw_field == 3) return i;
    }
    throw DataError("schema has no raw close row");
}

void FeatureSchema::validate() const {
    if (rows.empty()) throw ConfigError("schema has no rows");
    std::unordered_set<std::string> names;
    for (const SchemaRow& r : rows) {
        if (!names.insert(r.name).second) {
            throw ConfigError("schema row name duplicated: '" + r.name + "'");
        }
        if (r.indicator) {
            r.indicator->validate();
        } else if (r.raw_field < 0 || r.raw_field > 4) {
            throw ConfigError("schema row '" + r.name + "' references unknown raw field");
        }
    }
    close_row();
}

FeatureMatrix build_feature_matrix(const BarSeries& series, const FeatureSchema& schema) {
    schema.validate();
    if (series.bars.empty()) throw DataError("build_feature_matrix: empty series");

    FeatureMatrix m;
    m.rows = schema.rows.size();
    m.cols = series.bars.size();
    m.close_row = schema.close_row();
    m.values.resize(m.rows * m.cols);
    m.timestamps.reserve(m.cols);
    for (const Bar& b : series.bars) m.timestamps.push_back(b.ts);

    std::size_t longest_warmup = 0;
    for (std::size_t r = 0; r < schema.rows.size(); ++r) {
        const SchemaRow& row = schema.rows[r];
        m.row_names.push_back(row.name);
        m.row_kinds.push_back(row.kind);
        if (row.indicator) {
            longest_warmup = std::max(longest_warmup, warmup_length(*row.indicator));
            const std::vector<double> vals = compute_indicator(*row.indicator, series);
            for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = vals[c];
        } else {
            for (std::size_t c = 0; c < m.cols; ++c) {
                const Bar& b = series.bars[c];
                switch (row.raw_field) {
                case 0: m.at(r, c) = b.open; break;
                case 1: m.at(r, c) = b.high; break;
                case 2: m.at(r, c) = b.low; break;
                case 3: m.at(r, c) = b.close; break;
                case 4: m.at(r, c) = b.volume; break;
                }
            }
        }
    }
    m.first_valid = longest_warmup;
    if (m.first_valid >= m.cols) {
        throw DataError("build_feature_matrix: series shorter than longest warm-up");
    }
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = m.first_valid; c < m.cols; ++c) {
            if (!std::isfinite(m.at(r, c))) {
                throw NumericError("non-finite feature value in row '" + m.row_names[r] +
                                   "' at column " + std::to_string(c));
            }
        }
    }
    return m;
}

} // namespace cdt
