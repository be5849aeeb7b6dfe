#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cdt {

enum class Label : int { Up = 0, Down = 1, Flat = 2 };
inline constexpr int kNumClasses = 3;

std::string_view to_string(Label l);
Label label_from_string(std::string_view s); // throws DataError on unknown token

struct LabelConfig {
    double alpha = 0.55;   // threshold multiplier
    std::size_t vol_window = 10; // trailing sample count for volatility
};

// Sample standard deviation (n-1 denominator) of the last `window` closes.
// Throws DataError when fewer than `window` values are available.
double volatility(std::span<const double> closes, std::size_t window);

// Up/Down/Flat labels from a sequence of prediction-cadence closes.
//
// The move into closes[i] is labeled against a band around closes[i-1] whose
// half-width is alpha times the sample standard deviation of the trailing
// vol_window closes ending at i-1:
//
//   Up   if closes[i] >= closes[i-1] + alpha * v
//   Down if closes[i] <= closes[i-1] - alpha * v
//   Flat otherwise; the degenerate tie (v = 0 and equal closes) is Flat.
//
// Because the band is an absolute price offset scaled by a price-unit
// deviation, labels are invariant under uniform price scaling.
//
// labels[k] labels the move into closes[first_index + k]; indices below
// first_index lack the required history and carry no label.
struct LabelSeries {
    std::size_t first_index = 0;
    std::vector<Label> labels;
};

LabelSeries label_series(std::span<const double> closes, const LabelConfig& cfg);

struct ClassBalance {
    std::array<std::uint64_t, 3> counts{}; // indexed by Label
    std::array<double, 3> fractions{};
    std::uint64_t total = 0;
};

ClassBalance class_balance(std::span<const Label> labels);

} // namespace cdt
