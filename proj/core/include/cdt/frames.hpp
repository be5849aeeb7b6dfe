#pragma once

#include "cdt/time.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cdt {

// Scaling family of a feature row. Price rows share one affine transform,
// volume rows a second, oscillator rows are standardized per row.
enum class RowKind { Price, Volume, Oscillator };

std::string_view to_string(RowKind k);
RowKind row_kind_from_string(std::string_view s);

// Dense D x N feature matrix over a bar series: one row per schema entry,
// one column per bar. Columns before first_valid carry indicator warm-up
// values (NaN) and are excluded from framing.
struct FeatureMatrix {
    std::vector<std::string> row_names;
    std::vector<RowKind> row_kinds;
    std::size_t close_row = 0; // index of the raw close row
    std::vector<Timestamp> timestamps;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t first_valid = 0;
    std::vector<double> values; // row-major

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
};

// One prediction sample: D rows x frame_len chronological columns sliced
// bit-exactly out of a FeatureMatrix.
struct FeatureFrame {
    Timestamp end_timestamp;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t close_row = 0;
    std::vector<RowKind> row_kinds;
    std::vector<double> values; // row-major

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    double last_close() const { return at(close_row, cols - 1); }
};

struct FrameBuildResult {
    std::vector<FeatureFrame> frames;
    std::size_t dropped_gap_frames = 0; // frames discarded for spanning a data gap
};

// Frame i covers columns [first_valid + i*stride, +frame_len). Frames whose
// column timestamps span a gap larger than max_gap_minutes are dropped and
// counted, not imputed. Throws DataError when fewer than frame_len valid
// columns exist.
FrameBuildResult build_frames(const FeatureMatrix& features, std::size_t frame_len,
                              std::size_t stride, std::int64_t max_gap_minutes = 30);

} // namespace cdt
