#include "cdt/indicators.hpp"

#include "cdt/errors.hpp"

#include <cmath>
#include <limits>

namespace cdt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> closes_of(const BarSeries& s) {
    std::vector<double> out;
    out.reserve(s.bars.size());
    for (const Bar& b : s.bars) out.push_back(b.close);
    return out;
}

// Money-flow multiplier; 0 on a zero-range bar.
double mf_multiplier(const Bar& b) {
    const double range = b.high - b.low;
    if (range == 0.0) return 0.0;
    return ((b.close - b.low) - (b.high - b.close)) / range;
}

std::vector<double> bollinger(const BarSeries& s, int n, double k, BandPart part) {
    std::vector<double> out(s.bars.size(), kNaN);
    for (std::size_t i = n - 1; i < s.bars.size(); ++i) {
        double mean = 0.0;
        for (std::size_t j = i + 1 - n; j <= i; ++j) mean += s.bars[j].close;
        mean /= n;
        double var = 0.0;
        for (std::size_t j = i + 1 - n; j <= i; ++j) {
            const double d = s.bars[j].close - mean;
            var += d * d;
        }
        const double sd = std::sqrt(var / n);
        switch (part) {
        case BandPart::Upper: out[i] = mean + k * sd; break;
        case BandPart::Mid: out[i] = mean; break;
        case BandPart::Lower: out[i] = mean - k * sd; break;
        }
    }
    return out;
}

std::vector<double> rsi(const BarSeries& s, int n) {
    std::vector<double> out(s.bars.size(), kNaN);
    if (s.bars.size() <= static_cast<std::size_t>(n)) return out;
    double avg_gain = 0.0, avg_loss = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double d = s.bars[i].close - s.bars[i - 1].close;
        avg_gain += std::max(d, 0.0);
        avg_loss += std::max(-d, 0.0);
    }
    avg_gain /= n;
    avg_loss /= n;
    auto value = [](double gain, double loss) {
        if (loss == 0.0) return gain == 0.0 ? 50.0 : 100.0; // flat market is neutral
        return 100.0 - 100.0 / (1.0 + gain / loss);
    };
    out[n] = value(avg_gain, avg_loss);
    for (std::size_t i = n + 1; i < s.bars.size(); ++i) {
        const double d = s.bars[i].close - s.bars[i - 1].close;
        avg_gain = (avg_gain * (n - 1) + std::max(d, 0.0)) / n;
        avg_loss = (avg_loss * (n - 1) + std::max(-d, 0.0)) / n;
        out[i] = value(avg_gain, avg_loss);
    }
    return out;
}

std::vector<double> cci(const BarSeries& s, int n) {
    std::vector<double> tp(s.bars.size());
    for (std::size_t i = 0; i < s.bars.size(); ++i) tp[i] = typical_price(s.bars[i]);
    std::vector<double> out(s.bars.size(), kNaN);
    for (std::size_t i = n - 1; i < s.bars.size(); ++i) {
        double mean = 0.0;
        for (std::size_t j = i + 1 - n; j <= i; ++j) mean += tp[j];
        mean /= n;
        double dev = 0.0;
        for (std::size_t j = i + 1 - n; j <= i; ++j) dev += std::abs(tp[j] - mean);
        dev /= n;
        out[i] = dev == 0.0 ? 0.0 : (tp[i] - mean) / (0.015 * dev);
    }
    return out;
}

std::vector<double> vwap_daily(const BarSeries& s) {
    std::vector<double> out(s.bars.size(), kNaN);
    double cum_pv = 0.0, cum_v = 0.0;
    std::string day;
    for (std::size_t i = 0; i < s.bars.size(); ++i) {
        const std::string d = format_date(s.bars[i].ts);
        if (d != day) {
            day = d;
            cum_pv = 0.0;
            cum_v = 0.0;
        }
        const double tp = typical_price(s.bars[i]);
        cum_pv += tp * s.bars[i].volume;
        cum_v += s.bars[i].volume;
        out[i] = cum_v == 0.0 ? tp : cum_pv / cum_v;
    }
    return out;
}

std::vector<double> obv(const BarSeries& s) {
    std::vector<double> out(s.bars.size(), kNaN);
    double acc = 0.0;
    for (std::size_t i = 0; i < s.bars.size(); ++i) {
        if (i > 0) {
            if (s.bars[i].close > s.bars[i - 1].close) acc += s.bars[i].volume;
            else if (s.bars[i].close < s.bars[i - 1].close) acc -= s.bars[i].volume;
        }
        out[i] = acc;
    }
    return out;
}

std::vector<double> adl(const BarSeries& s) {
    std::vector<double> out(s.bars.size(), kNaN);
    double acc = 0.0;
    for (std::size_t i = 0; i < s.bars.size(); ++i) {
        acc += mf_multiplier(s.bars[i]) * s.bars[i].volume;
        out[i] = acc;
    }
    return out;
}

std::vector<double> cmf(const BarSeries& s, int n) {
    std::vector<double> out(s.bars.size(), kNaN);
    for (std::size_t i = n - 1; i < s.bars.size(); ++i) {
        double mfv = 0.0, vol = 0.0;
        for (std::size_t j = i + 1 - n; j <= i; ++j) {
            mfv += mf_multiplier(s.bars[j]) * s.bars[j].volume;
            vol += s.bars[j].volume;
        }
        out[i] = vol == 0.0 ? 0.0 : mfv / vol;
    }
    return out;
}

std::vector<double> adx(const BarSeries& s, int n) {
    const std::size_t len = s.bars.size();
    std::vector<double> out(len, kNaN);
    if (len < 2 * static_cast<std::size_t>(n)) return out;

    // True range and directional movement, defined from the second bar on.
    std::vector<double> tr(len, 0.0), pdm(len, 0.0), mdm(len, 0.0);
    for (std::size_t i = 1; i < len; ++i) {
        const Bar& b = s.bars[i];
        const Bar& p = s.bars[i - 1];
        tr[i] = std::max({b.high - b.low, std::abs(b.high - p.close), std::abs(b.low - p.close)});
        const double up = b.high - p.high;
        const double down = p.low - b.low;
        pdm[i] = (up > down && up > 0.0) ? up : 0.0;
        mdm[i] = (down > up && down > 0.0) ? down : 0.0;
    }

    double sm_tr = 0.0, sm_pdm = 0.0, sm_mdm = 0.0;
    for (int i = 1; i <= n; ++i) {
        sm_tr += tr[i];
        sm_pdm += pdm[i];
        sm_mdm += mdm[i];
    }
    auto dx_of = [](double str, double spdm, double smdm) {
        if (str == 0.0) return 0.0; // flat market is neutral
        const double pdi = 100.0 * spdm / str;
        const double mdi = 100.0 * smdm / str;
        const double sum = pdi + mdi;
        return sum == 0.0 ? 0.0 : 100.0 * std::abs(pdi - mdi) / sum;
    };

    double adx_acc = dx_of(sm_tr, sm_pdm, sm_mdm);
    for (std::size_t i = n + 1; i < len; ++i) {
        sm_tr = sm_tr - sm_tr / n + tr[i];
        sm_pdm = sm_pdm - sm_pdm / n + pdm[i];
        sm_mdm = sm_mdm - sm_mdm / n + mdm[i];
        const double dx = dx_of(sm_tr, sm_pdm, sm_mdm);
        if (i < 2 * static_cast<std::size_t>(n) - 1) {
            adx_acc += dx;
        } else if (i == 2 * static_cast<std::size_t>(n) - 1) {
            adx_acc = (adx_acc + dx) / n;
            out[i] = adx_acc;
        } else {
            adx_acc = (adx_acc * (n - 1) + dx) / n;
            out[i] = adx_acc;
        }
    }
    return out;
}

} // namespace

std::string_view to_string(IndicatorKind k) {
    switch (k) {
    case IndicatorKind::Tp: return "tp";
    case IndicatorKind::Ema: return "ema";
    case IndicatorKind::MacdHist: return "macd_hist";
    case IndicatorKind::Bollinger: return "bb";
    case IndicatorKind::Rsi: return "rsi";
    case IndicatorKind::Cci: return "cci";
    case IndicatorKind::Vwap: return "vwap";
    case IndicatorKind::Obv: return "obv";
    case IndicatorKind::Adx: return "adx";
    case IndicatorKind::Adl: return "adl";
    case IndicatorKind::Cmf: return "cmf";
    case IndicatorKind::Roc: return "roc";
    }
    return "?";
}

void IndicatorSpec::validate() const {
    switch (kind) {
    case IndicatorKind::Tp:
    case IndicatorKind::Vwap:
    case IndicatorKind::Obv:
    case IndicatorKind::Adl:
        return; // no parameters
    case IndicatorKind::MacdHist:
        if (span_b < 1 || signal_span < 1) throw ConfigError("macd spans must be >= 1");
        if (span <= span_b) throw ConfigError("macd long span must exceed short span");
        return;
    default:
        if (span < 1) throw ConfigError(std::string(to_string(kind)) + " span must be >= 1");
        if (alpha != 0.0 && (alpha <= 0.0 || alpha > 1.0)) {
            throw ConfigError("ema alpha must lie in (0, 1]");
        }
        return;
    }
}

std::string IndicatorSpec::name() const {
    switch (kind) {
    case IndicatorKind::Tp: return "tp";
    case IndicatorKind::Vwap: return "vwap";
    case IndicatorKind::Obv: return "obv";
    case IndicatorKind::Adl: return "adl";
    case IndicatorKind::MacdHist:
        return "macd_hist_" + std::to_string(span) + "_" + std::to_string(span_b) + "_" +
               std::to_string(signal_span);
    case IndicatorKind::Bollinger: {
        const char* part = band_part == BandPart::Upper ? "upper"
                         : band_part == BandPart::Mid   ? "mid"
                                                        : "lower";
        return "bb_" + std::string(part) + "_" + std::to_string(span);
    }
    default: return std::string(to_string(kind)) + "_" + std::to_string(span);
    }
}

double typical_price(const Bar& bar) { return (bar.high + bar.low + bar.close) / 3.0; }

std::vector<double> ema(std::span<const double> closes, int span, double alpha) {
    if (closes.empty()) throw DataError("ema: empty input");
    if (span < 1) throw ConfigError("ema span must be >= 1");
    if (alpha <= 0.0) alpha = 2.0 / (span + 1.0);
    if (alpha > 1.0) throw ConfigError("ema alpha must lie in (0, 1]");
    std::vector<double> out(closes.size());
    out[0] = closes[0];
    for (std::size_t i = 1; i < closes.size(); ++i) {
        out[i] = alpha * closes[i] + (1.0 - alpha) * out[i - 1];
    }
    return out;
}

std::vector<double> macd_histogram(std::span<const double> closes, int long_span,
                                   int short_span, int signal_span) {
    if (long_span <= short_span) throw ConfigError("macd long span must exceed short span");
    const std::vector<double> slow = ema(closes, long_span);
    const std::vector<double> fast = ema(closes, short_span);
    std::vector<double> macd(closes.size());
    for (std::size_t i = 0; i < closes.size(); ++i) macd[i] = slow[i] - fast[i];
    const std::vector<double> signal = ema(macd, signal_span);
    std::vector<double> hist(closes.size());
    for (std::size_t i = 0; i < closes.size(); ++i) hist[i] = macd[i] - signal[i];
    return hist;
}

std::vector<double> roc(std::span<const double> closes, int span) {
    if (span < 1) throw ConfigError("roc span must be >= 1");
    if (closes.size() <= static_cast<std::size_t>(span)) {
        throw DataError("roc: need more than span closes");
    }
    std::vector<double> out(closes.size(), kNaN);
    for (std::size_t i = span; i < closes.size(); ++i) {
        const double base = closes[i - span];
        if (base == 0.0) throw DataError("roc: zero divisor price at index " + std::to_string(i - span));
        out[i] = 100.0 * (closes[i] - base) / base;
    }
    return out;
}

std::size_t warmup_length(const IndicatorSpec& spec) {
    const std::size_t n = static_cast<std::size_t>(spec.span);
    switch (spec.kind) {
    case IndicatorKind::Tp:
    case IndicatorKind::Ema:
    case IndicatorKind::MacdHist:
    case IndicatorKind::Vwap:
    case IndicatorKind::Obv:
    case IndicatorKind::Adl:
        return 0;
    case IndicatorKind::Bollinger:
    case IndicatorKind::Cci:
    case IndicatorKind::Cmf:
        return n - 1;
    case IndicatorKind::Rsi:
    case IndicatorKind::Roc:
        return n;
    case IndicatorKind::Adx:
        return 2 * n - 1;
    }
    return 0;
}

std::vector<double> compute_indicator(const IndicatorSpec& spec, const BarSeries& series) {
    spec.validate();
    if (series.bars.size() <= warmup_length(spec)) {
        throw DataError("compute_indicator: series shorter than warm-up of " + spec.name());
    }
    switch (spec.kind) {
    case IndicatorKind::Tp: {
        std::vector<double> out(series.bars.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = typical_price(series.bars[i]);
        return out;
    }
    case IndicatorKind::Ema:
        return ema(closes_of(series), spec.span, spec.alpha);
    case IndicatorKind::MacdHist:
        return macd_histogram(closes_of(series), spec.span, spec.span_b, spec.signal_span);
    case IndicatorKind::Bollinger:
        return bollinger(series, spec.span, spec.band_k, spec.band_part);
    case IndicatorKind::Rsi:
        return rsi(series, spec.span);
    case IndicatorKind::Cci:
        return cci(series, spec.span);
    case IndicatorKind::Vwap:
        return vwap_daily(series);
    case IndicatorKind::Obv:
        return obv(series);
    case IndicatorKind::Adx:
        return adx(series, spec.span);
    case IndicatorKind::Adl:
        return adl(series);
    case IndicatorKind::Cmf:
        return cmf(series, spec.span);
    case IndicatorKind::Roc: {
        const auto closes = closes_of(series);
        return roc(closes, spec.span);
    }
    }
    throw ConfigError("unknown indicator kind");
}

} // namespace cdt
