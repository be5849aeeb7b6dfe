#include "cdt/bar.hpp"

namespace cdt {

std::int64_t GapReport::missing_total() const {
    std::int64_t n = 0;
    for (const Gap& g : gaps) n += g.missing_bars;
    return n;
}

GapReport validate_series(const BarSeries& series, std::int64_t spacing_minutes) {
    GapReport report;
    for (std::size_t i = 1; i < series.bars.size(); ++i) {
        const std::int64_t dt = series.bars[i].ts - series.bars[i - 1].ts;
        if (dt > spacing_minutes) {
            report.gaps.push_back(Gap{series.bars[i - 1].ts, series.bars[i].ts,
                                      dt / spacing_minutes - 1});
        }
    }
    return report;
}

} // namespace cdt
