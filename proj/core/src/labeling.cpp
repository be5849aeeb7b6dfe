#include "cdt/labeling.hpp"

#include "cdt/errors.hpp"

#include <cmath>

namespace cdt {

std::string_view to_string(Label l) {
    switch (l) {
    case Label::Up: return "up";
    case Label::Down: return "down";
    case Label::Flat: return "flat";
    }
    return "?";
}

Label label_from_string(std::string_view s) {
    if (s == "up") return Label::Up;
    if (s == "down") return Label::Down;
    if (s == "flat") return Label::Flat;
    throw DataError("unknown label: '" + std::string(s) + "'");
}

double volatility(std::span<const double> closes, std::size_t window) {
    if (window < 2) throw ConfigError("volatility window must be >= 2");
    if (closes.size() < window) {
        throw DataError("volatility: need " + std::to_string(window) + " closes, have " +
                        std::to_string(closes.size()));
    }
    const auto tail = closes.subspan(closes.size() - window, window);
    double mean = 0.0;
    for (double c : tail) mean += c;
    mean /= static_cast<double>(window);
    double ss = 0.0;
    for (double c : tail) ss += (c - mean) * (c - mean);
    return std::sqrt(ss / static_cast<double>(window - 1));
}

LabelSeries label_series(std::span<const double> closes, const LabelConfig& cfg) {
    if (cfg.alpha < 0.0) throw ConfigError("label alpha must be >= 0");
    if (closes.size() <= cfg.vol_window) {
        throw DataError("label_series: need more than vol_window closes");
    }
    for (double c : closes) {
        if (!(c > 0.0)) throw DataError("label_series: non-positive close price");
    }

    LabelSeries out;
    out.first_index = cfg.vol_window;
    out.labels.reserve(closes.size() - cfg.vol_window);
    for (std::size_t i = cfg.vol_window; i < closes.size(); ++i) {
        const double prev = closes[i - 1];
        const double next = closes[i];
        const double band = cfg.alpha * volatility(closes.subspan(0, i), cfg.vol_window);
        const bool up = next >= prev + band;
        const bool down = next <= prev - band;
        Label l = Label::Flat;
        if (up && down) {
            l = Label::Flat; // zero band, zero movement
        } else if (up) {
            l = Label::Up;
        } else if (down) {
            l = Label::Down;
        }
        out.labels.push_back(l);
    }
    return out;
}

ClassBalance class_balance(std::span<const Label> labels) {
    if (labels.empty()) throw DataError("class_balance: empty label sequence");
    ClassBalance b;
    for (Label l : labels) ++b.counts[static_cast<int>(l)];
    b.total = labels.size();
    for (int i = 0; i < kNumClasses; ++i) {
        b.fractions[i] = static_cast<double>(b.counts[i]) / static_cast<double>(b.total);
    }
    return b;
}

} // namespace cdt
