#include "cdt/frames.hpp"

#include "cdt/errors.hpp"

namespace cdt {

std::string_view to_string(RowKind k) {
    switch (k) {
    case RowKind::Price: return "price";
    case RowKind::Volume: return "volume";
    case RowKind::Oscillator: return "oscillator";
    }
    return "?";
}

RowKind row_kind_from_string(std::string_view s) {
    if (s == "price") return RowKind::Price;
    if (s == "volume") return RowKind::Volume;
    if (s == "oscillator") return RowKind::Oscillator;
    throw DataError("unknown row kind: '" + std::string(s) + "'");
}

FrameBuildResult build_frames(const FeatureMatrix& features, std::size_t frame_len,
                              std::size_t stride, std::int64_t max_gap_minutes) {
    if (stride < 1) throw ConfigError("frame stride must be >= 1");
    if (features.cols < features.first_valid ||
        features.cols - features.first_valid < frame_len) {
        throw DataError("build_frames: fewer than " + std::to_string(frame_len) +
                        " valid columns");
    }

    const std::size_t n = features.cols - features.first_valid;
    const std::size_t count = (n - frame_len) / stride + 1;

    FrameBuildResult result;
    result.frames.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t begin = features.first_valid + i * stride;

        bool crosses_gap = false;
        for (std::size_t c = begin + 1; c < begin + frame_len; ++c) {
            if (features.timestamps[c] - features.timestamps[c - 1] > max_gap_minutes) {
                crosses_gap = true;
                break;
            }
        }
        if (crosses_gap) {
            ++result.dropped_gap_frames;
            continue;
        }

        FeatureFrame frame;
        frame.end_timestamp = features.timestamps[begin + frame_len - 1];
        frame.rows = features.rows;
        frame.cols = frame_len;
        frame.close_row = features.close_row;
        frame.row_kinds = features.row_kinds;
        frame.values.resize(features.rows * frame_len);
        for (std::size_t r = 0; r < features.rows; ++r) {
            for (std::size_t c = 0; c < frame_len; ++c) {
                frame.values[r * frame_len + c] = features.at(r, begin + c);
            }
        }
        result.frames.push_back(std::move(frame));
    }
    return result;
}

} // namespace cdt
