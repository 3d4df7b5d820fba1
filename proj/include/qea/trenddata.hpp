#pragma once

// Hardware trend observations: ingestion, validation and per-series slicing.
//
// File format (UTF-8, '\n' line endings, no quoting):
//
//   year,platform,metric,value,source
//   2021.5,superconducting,physical_qubits,127,vendor announcement
//
// `source` is free text and must not contain commas.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <tuple>
#include <utility>
#include <vector>

#include "qea/errors.hpp"

namespace qea {

enum class Metric { physical_qubits, two_qubit_gate_error, two_qubit_gate_time_s };

inline constexpr Metric all_metrics[] = {
    Metric::physical_qubits, Metric::two_qubit_gate_error, Metric::two_qubit_gate_time_s};

inline std::string_view to_string(Metric m) {
    switch (m) {
    case Metric::physical_qubits: return "physical_qubits";
    case Metric::two_qubit_gate_error: return "two_qubit_gate_error";
    case Metric::two_qubit_gate_time_s: return "two_qubit_gate_time_s";
    }
    return "?";
}

inline std::optional<Metric> parse_metric(std::string_view s) {
    for (Metric m : all_metrics)
        if (to_string(m) == s) return m;
    return std::nullopt;
}

/// Hardware family tag: one of the three known families or `other:<name>`.
inline bool valid_platform_tag(std::string_view s) {
    if (s == "superconducting" || s == "ion_trap" || s == "neutral_atom") return true;
    constexpr std::string_view prefix = "other:";
    return s.size() > prefix.size() && s.substr(0, prefix.size()) == prefix;
}

struct TrendRecord {
    double year = 0.0;
    std::string platform;
    Metric metric = Metric::physical_qubits;
    double value = 0.0;
    std::string source;

    friend bool operator==(const TrendRecord&, const TrendRecord&) = default;
};

struct SeriesPoint {
    double year;
    double value;

    friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

using Series = std::vector<SeriesPoint>;

inline constexpr double min_record_year = 1990.0;
inline constexpr double max_record_year = 2100.0;

namespace detail {

inline bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        std::size_t len = 0;
        unsigned cp = 0;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > s.size()) return false;
        for (std::size_t k = 1; k < len; ++k) {
            auto cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        // overlong encodings and surrogates
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
            cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            return false;
        i += len;
    }
    return true;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::optional<double> parse_double(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

inline std::string format_shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

} // namespace detail

/// Sorted collection of trend observations. Immutable once constructed.
class Dataset {
public:
    Dataset() = default;

    explicit Dataset(std::vector<TrendRecord> records) : records_(std::move(records)) {
        std::stable_sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
            return std::tie(a.platform, a.metric, a.year, a.value) <
                   std::tie(b.platform, b.metric, b.year, b.value);
        });
    }

    const std::vector<TrendRecord>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    /// Distinct platform tags in sorted order.
    std::vector<std::string> platforms() const {
        std::vector<std::string> out;
        for (const auto& r : records_)
            if (out.empty() || out.back() != r.platform) out.push_back(r.platform);
        return out;
    }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<TrendRecord> records_;
};

inline constexpr std::string_view trend_header = "year,platform,metric,value,source";

/// Parses the delimited trend format. Errors carry the 1-based line number.
inline Dataset load_records(std::string_view text) {
    if (!detail::valid_utf8(text)) throw DataError(0, "input is not valid UTF-8");

    std::vector<TrendRecord> records;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool saw_header = false;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (!saw_header) {
            if (line != trend_header)
                throw DataError(line_no, "expected header '" + std::string(trend_header) + "'");
            saw_header = true;
            continue;
        }

        auto cols = detail::split(line, ',');
        if (cols.size() != 5)
            throw DataError(line_no, "expected 5 columns, found " + std::to_string(cols.size()));

        TrendRecord rec;
        auto year = detail::parse_double(cols[0]);
        if (!year) throw DataError(line_no, "non-numeric year '" + std::string(cols[0]) + "'");
        if (*year < min_record_year || *year > max_record_year)
            throw DataError(line_no, "year outside [1990, 2100]");
        rec.year = *year;

        if (!valid_platform_tag(cols[1]))
            throw DataError(line_no, "unknown platform '" + std::string(cols[1]) + "'");
        rec.platform = std::string(cols[1]);

        auto metric = parse_metric(cols[2]);
        if (!metric) throw DataError(line_no, "unknown metric '" + std::string(cols[2]) + "'");
        rec.metric = *metric;

        auto value = detail::parse_double(cols[3]);
        if (!value) throw DataError(line_no, "non-numeric value '" + std::string(cols[3]) + "'");
        if (*value <= 0.0) throw DataError(line_no, "value must be positive");
        if (rec.metric == Metric::two_qubit_gate_error && *value >= 1.0)
            throw DataError(line_no, "gate error must be below 1");
        rec.value = *value;

        rec.source = std::string(cols[4]);
        records.push_back(std::move(rec));
    }
    if (!saw_header) throw DataError(1, "missing header");
    return Dataset(std::move(records));
}

inline Dataset load_records(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return load_records(std::string_view(text));
}

/// Inverse of load_records. Numbers use the shortest round-trip representation.
inline std::string write_records(const Dataset& ds) {
    std::string out(trend_header);
    out += '\n';
    for (const auto& r : ds.records()) {
        out += detail::format_shortest(r.year);
        out += ',';
        out += r.platform;
        out += ',';
        out += to_string(r.metric);
        out += ',';
        out += detail::format_shortest(r.value);
        out += ',';
        out += r.source;
        out += '\n';
    }
    return out;
}

/// All records for one (platform, metric), ordered by (year, value).
inline Series series(const Dataset& ds, std::string_view platform, Metric metric) {
    Series out;
    for (const auto& r : ds.records())
        if (r.platform == platform && r.metric == metric) out.push_back({r.year, r.value});
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.year, a.value) < std::tie(b.year, b.value);
    });
    return out;
}

} // namespace qea
