#include "cdt/bar_csv.hpp"

#include "cdt/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace cdt {

namespace {

std::vector<std::string_view> split_csv(std::string_view line, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

double parse_double(std::string_view s, std::size_t line_no, const char* field) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw DataError("line " + std::to_string(line_no) + ": malformed " + field + " '" +
                        std::string(s) + "'");
    }
    return v;
}

bool looks_like_header(std::string_view line) {
    return line.find("date") != std::string_view::npos ||
           line.find("open") != std::string_view::npos;
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

BarSeries parse_bars(std::istream& source, std::string symbol) {
    BarSeries series;
    series.symbol = std::move(symbol);

    std::string raw;
    std::vector<std::string_view> fields;
    std::size_t line_no = 0;
    while (std::getline(source, raw)) {
        ++line_no;
        const std::string_view line = strip_cr(raw);
        if (line.empty()) continue;
        if (line_no == 1 && looks_like_header(line)) continue;

        split_csv(line, fields);
        if (fields.size() != 7) {
            throw DataError("line " + std::to_string(line_no) + ": expected 7 fields, got " +
                            std::to_string(fields.size()));
        }
        Bar bar;
        try {
            bar.ts = parse_timestamp(fields[0], fields[1]);
        } catch (const DataError& e) {
            throw DataError("line " + std::to_string(line_no) + ": " + e.what());
        }
        bar.open = parse_double(fields[2], line_no, "open");
        bar.high = parse_double(fields[3], line_no, "high");
        bar.low = parse_double(fields[4], line_no, "low");
        bar.close = parse_double(fields[5], line_no, "close");
        bar.volume = parse_double(fields[6], line_no, "volume");
        if (!bar.valid()) {
            throw DataError("line " + std::to_string(line_no) +
                            ": OHLC invariant violation (need low <= open,close <= high, volume >= 0)");
        }
        series.bars.push_back(bar);
    }

    std::stable_sort(series.bars.begin(), series.bars.end(),
                     [](const Bar& a, const Bar& b) { return a.ts < b.ts; });
    for (std::size_t i = 1; i < series.bars.size(); ++i) {
        if (series.bars[i].ts == series.bars[i - 1].ts) {
            throw DataError("duplicate timestamp " + format_timestamp(series.bars[i].ts));
        }
    }
    return series;
}

BarSeries parse_bars_file(const std::string& path, std::string symbol) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open bar file: " + path);
    return parse_bars(in, std::move(symbol));
}

void serialize_bars(std::ostream& out, const BarSeries& series, bool header) {
    if (header) out << "date,time,open,high,low,close,volume\n";
    for (const Bar& b : series.bars) {
        out << format_date(b.ts) << ',' << format_time(b.ts) << ',' << format_double(b.open)
            << ',' << format_double(b.high) << ',' << format_double(b.low) << ','
            << format_double(b.close) << ',' << format_double(b.volume) << '\n';
    }
}

void serialize_bars_file(const std::string& path, const BarSeries& series, bool header) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write bar file: " + path);
    serialize_bars(out, series, header);
}

} // namespace cdt
