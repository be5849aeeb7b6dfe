#pragma once

#include "cdt/labeling.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cdt {

// 3x3 prediction counts indexed [true][predicted] over {Up, Down, Flat}.
struct ConfusionMatrix3 {
    std::array<std::array<std::uint64_t, 3>, 3> counts{};

    std::uint64_t& at(Label truth, Label pred) {
        return counts[static_cast<int>(truth)][static_cast<int>(pred)];
    }
    std::uint64_t at(Label truth, Label pred) const {
        return counts[static_cast<int>(truth)][static_cast<int>(pred)];
    }
    std::uint64_t total() const;
    std::uint64_t trace() const;
};

ConfusionMatrix3 confusion(std::span<const Label> predictions, std::span<const Label> truths);

// Error-severity weights. beta1 weights wrong-move-on-flat errors, beta2
// weights missed-move errors, beta3 down-weights true Flats inside the
// true-positive mass.
struct WfsParams {
    double beta1 = 0.5;
    double beta2 = 0.125;
    double beta3 = 0.125;
};

// Weighted F Score in [0, 1]. True positives count true Up, true Down, and
// beta3^2 * true Flat; wrong-direction errors enter at full weight, the two
// flat-related error classes at beta1^2 and beta2^2.
double weighted_f_score(const ConfusionMatrix3& m, const WfsParams& p = {});

double accuracy(const ConfusionMatrix3& m);

// Sample Pearson correlation; nullopt when either input has zero variance.
std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys);

struct VariantMetrics {
    std::string name;
    double wfs = 0.0;
    double accuracy = 0.0;
    double aar = 0.0;
    double sharpe = 0.0;
};

// Pairwise correlations of {WFS, accuracy} x {AAR, Sharpe} across model
// variants. Requires at least 3 variants.
struct CorrelationTable {
    // rows: 0 = WFS, 1 = accuracy; cols: 0 = AAR, 1 = Sharpe
    std::array<std::array<std::optional<double>, 2>, 2> r{};
};

CorrelationTable metric_correlation_report(std::span<const VariantMetrics> variants);

} // namespace cdt
