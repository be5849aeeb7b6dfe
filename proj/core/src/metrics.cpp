#include "cdt/metrics.hpp"

#include "cdt/errors.hpp"

#include <cmath>

namespace cdt {

std::uint64_t ConfusionMatrix3::total() const {
    std::uint64_t t = 0;
    for (const auto& row : counts)
        for (std::uint64_t c : row) t += c;
    return t;
}

std::uint64_t ConfusionMatrix3::trace() const {
    return counts[0][0] + counts[1][1] + counts[2][2];
}

ConfusionMatrix3 confusion(std::span<const Label> predictions, std::span<const Label> truths) {
    if (predictions.size() != truths.size()) {
        throw DataError("confusion: prediction/truth length mismatch");
    }
    if (predictions.empty()) throw DataError("confusion: empty input");
    ConfusionMatrix3 m;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        ++m.at(truths[i], predictions[i]);
    }
    return m;
}

double weighted_f_score(const ConfusionMatrix3& m, const WfsParams& p) {
    if (m.total() == 0) throw DataError("weighted_f_score: all-zero confusion matrix");

    const double n_tu = static_cast<double>(m.at(Label::Up, Label::Up));
    const double n_td = static_cast<double>(m.at(Label::Down, Label::Down));
    const double n_tf = static_cast<double>(m.at(Label::Flat, Label::Flat));
    const double e_wutd = static_cast<double>(m.at(Label::Down, Label::Up));
    const double e_wdtu = static_cast<double>(m.at(Label::Up, Label::Down));
    const double e_wutf = static_cast<double>(m.at(Label::Flat, Label::Up));
    const double e_wdtf = static_cast<double>(m.at(Label::Flat, Label::Down));
    const double e_wftu = static_cast<double>(m.at(Label::Up, Label::Flat));
    const double e_wftd = static_cast<double>(m.at(Label::Down, Label::Flat));

    const double b1sq = p.beta1 * p.beta1;
    const double b2sq = p.beta2 * p.beta2;
    const double b3sq = p.beta3 * p.beta3;

    const double n_tp = n_tu + n_td + b3sq * n_tf;
    const double e_1st = e_wutd + e_wdtu;
    const double e_2nd = e_wutf + e_wdtf;
    const double e_3rd = e_wftu + e_wftd;

    const double num = (1.0 + b1sq + b2sq) * n_tp;
    const double den = num + e_1st + b1sq * e_2nd + b2sq * e_3rd;
    if (den == 0.0) return 0.0;
    return num / den;
}

double accuracy(const ConfusionMatrix3& m) {
    const std::uint64_t t = m.total();
    if (t == 0) throw DataError("accuracy: empty confusion matrix");
    return static_cast<double>(m.trace()) / static_cast<double>(t);
}

std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw DataError("pearson: length mismatch");
    if (xs.size() < 2) throw DataError("pearson: need at least 2 points");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

CorrelationTable metric_correlation_report(std::span<const VariantMetrics> variants) {
    if (variants.size() < 3) {
        throw DataError("metric_correlation_report: need at least 3 variants");
    }
    std::vector<double> wfs, acc, aar, sharpe;
    wfs.reserve(variants.size());
    for (const auto& v : variants) {
        wfs.push_back(v.wfs);
        acc.push_back(v.accuracy);
        aar.push_back(v.aar);
        sharpe.push_back(v.sharpe);
    }
    CorrelationTable t;
    t.r[0][0] = pearson(wfs, aar);
    t.r[0][1] = pearson(wfs, sharpe);
    t.r[1][0] = pearson(acc, aar);
    t.r[1][1] = pearson(acc, sharpe);
    return t;
}

} // namespace cdt
