#include "tempograph/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>

namespace tempograph {

char delimiter_char(Delimiter d) {
    switch (d) {
        case Delimiter::Comma: return ',';
        case Delimiter::Tab: return '\t';
        case Delimiter::Auto: break;
    }
    throw ArgumentError("delimiter_char: Auto has no fixed character");
}

Delimiter parse_delimiter(const std::string& text) {
    if (text == "auto") return Delimiter::Auto;
    if (text == "comma" || text == ",") return Delimiter::Comma;
    if (text == "tab" || text == "\\t" || text == "\t") return Delimiter::Tab;
    throw ArgumentError("unknown delimiter '" + text + "' (expected auto, comma or tab)");
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto lo = s.find_first_not_of(ws);
    if (lo == std::string_view::npos) return {};
    const auto hi = s.find_last_not_of(ws);
    return s.substr(lo, hi - lo + 1);
}

double parse_real(std::string_view field, std::size_t line) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("cannot parse '" + std::string(field) + "' as a real number", line);
    }
    if (!std::isfinite(value)) {
        throw ParseError("non-finite value '" + std::string(field) + "'", line);
    }
    return value;
}

int parse_label(std::string_view field, std::size_t line) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    int label = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), label);
    if (!field.empty() && ec == std::errc() && ptr == field.data() + field.size()) return label;
    // Older archive files print labels as reals, e.g. "1.0000000e+00".
    const double real = parse_real(field, line);
    if (real != std::floor(real) || std::fabs(real) > 1e9) {
        throw ParseError("label '" + std::string(field) + "' is not an integer", line);
    }
    return static_cast<int>(real);
}

}  // namespace

std::vector<TimeSeries> read_ucr(std::istream& in, Delimiter delimiter, const std::string& name_prefix) {
    std::vector<TimeSeries> rows;
    std::string text;
    std::size_t line = 0;
    char sep = delimiter == Delimiter::Auto ? '\0' : delimiter_char(delimiter);
    Index width = -1;
    while (std::getline(in, text)) {
        ++line;
        const std::string_view body = trim(text);
        if (body.empty()) continue;
        if (sep == '\0') sep = body.find('\t') != std::string_view::npos ? '\t' : ',';

        std::vector<std::string_view> fields;
        std::size_t pos = 0;
        while (true) {
            const auto next = body.find(sep, pos);
            fields.push_back(body.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        if (fields.size() < 2) throw ParseError("record has a label but no values", line);

        TimeSeries series;
        series.label = parse_label(fields[0], line);
        series.values.resize(static_cast<Index>(fields.size() - 1));
        for (std::size_t i = 1; i < fields.size(); ++i) {
            series.values(static_cast<Index>(i - 1)) = parse_real(fields[i], line);
        }
        if (width >= 0 && series.size() != width) {
            throw ParseError("ragged record: " + std::to_string(series.size()) + " values, expected " +
                                 std::to_string(width),
                             line);
        }
        width = series.size();
        series.name = name_prefix + "-" + std::to_string(rows.size());
        rows.push_back(std::move(series));
    }
    return rows;
}

std::vector<TimeSeries> load_ucr(const std::filesystem::path& path, Delimiter delimiter) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path.string());
    return read_ucr(in, delimiter, path.stem().string());
}

void write_ucr(std::ostream& out, const std::vector<TimeSeries>& split, char delimiter) {
    char buf[64];
    for (const auto& series : split) {
        out << series.label.value_or(0);
        for (Index i = 0; i < series.size(); ++i) {
            const auto res = std::to_chars(buf, buf + sizeof buf, series.values(i));
            out << delimiter << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
        }
        out << '\n';
    }
}

Dataset load_ucr_dataset(const std::filesystem::path& dir, const std::string& name) {
    Dataset ds;
    ds.name = name;
    ds.train = load_ucr(dir / (name + "_TRAIN.tsv"));
    ds.test = load_ucr(dir / (name + "_TEST.tsv"));
    if (ds.train.empty() || ds.test.empty()) throw ArgumentError(name + ": empty split");
    if (ds.train.front().size() != ds.test.front().size()) {
        throw ArgumentError(name + ": train and test series lengths differ");
    }
    return ds;
}

}  // namespace tempograph
