#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "monkey/paper_data.hpp"
#include "monkey/records.hpp"
#include "monkey/scaled_decimal.hpp"

namespace monkey {

// CSV files are comma separated, dot-decimal, LF terminated. Fields holding a
// comma, a quote, a line break or edge whitespace are quoted (RFC 4180).

inline std::string csv_field(std::string_view value) {
    const bool needs_quotes = value.find_first_of(",\"\r\n") != std::string_view::npos ||
                              (!value.empty() && (value.front() == ' ' || value.back() == ' '));
    if (!needs_quotes) {
        return std::string(value);
    }
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

/// Splits one CSV record; quoted fields may contain separators and doubled quotes.
inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    if (quoted) {
        throw std::invalid_argument("unterminated quoted CSV field");
    }
    return fields;
}

inline constexpr std::string_view kMeasurementHeader = "test,prefix_len,attempts,elapsed_seconds,seed";

/// One row per trial, then one `average` row per prefix length. `no_timing` zeroes elapsed time.
inline void write_measurements_csv(std::ostream& out, const MeasurementTable& table, bool no_timing) {
    auto seconds = [no_timing](double value) { return fmt::format("{:.6f}", no_timing ? 0.0 : value); };
    out << kMeasurementHeader << '\n';
    for (std::size_t i = 0; i < table.trials.size(); ++i) {
        for (const auto& cell : table.trials[i]) {
            out << fmt::format("{},{},{},{},{}\n", i + 1, cell.prefix_length, cell.attempts,
                               seconds(cell.elapsed_seconds), cell.seed);
        }
    }
    for (std::size_t c = 0; c < table.prefix_lengths.size(); ++c) {
        out << fmt::format("average,{},{},{},\n", table.prefix_lengths[c], table.attempts_averages[c],
                           seconds(table.time_averages[c]));
    }
}

struct MeasurementAverages {
    std::vector<std::size_t> prefix_lengths;
    std::vector<double> attempts;
    std::vector<double> seconds;
};

/// Reads the `average` rows of a measurements CSV, ordered by prefix length.
inline MeasurementAverages read_measurement_averages(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) != split_csv_line(kMeasurementHeader)) {
        throw std::invalid_argument("measurements CSV must start with header '" + std::string(kMeasurementHeader) +
                                    "'");
    }
    std::map<std::size_t, std::pair<double, double>> rows;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 5) {
            throw std::invalid_argument("measurements CSV line " + std::to_string(line_number) +
                                        ": expected 5 fields");
        }
        if (fields[0] != "average") {
            continue;
        }
        try {
            rows[std::stoul(fields[1])] = {std::stod(fields[2]), std::stod(fields[3])};
        } catch (const std::exception&) {
            throw std::invalid_argument("measurements CSV line " + std::to_string(line_number) +
                                        ": malformed number");
        }
    }
    MeasurementAverages out;
    for (const auto& [prefix, values] : rows) {
        out.prefix_lengths.push_back(prefix);
        out.attempts.push_back(values.first);
        out.seconds.push_back(values.second);
    }
    for (std::size_t i = 0; i < out.prefix_lengths.size(); ++i) {
        if (out.prefix_lengths[i] != i + 1) {
            throw std::invalid_argument("measurements CSV averages must cover prefix lengths 1..n without gaps");
        }
    }
    return out;
}

/// Comma-separated list of reals, e.g. `60,3101,159174`.
inline std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    for (const auto& field : split_csv_line(text)) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != field.size()) {
            throw std::invalid_argument("not a number: '" + field + "'");
        }
        out.push_back(value);
    }
    return out;
}

/// Published trial matrices as a MeasurementTable (seeds are zero).
inline MeasurementTable paper_measurement_table() {
    std::vector<std::vector<TrialRecord>> trials(paper::kTests);
    for (std::size_t t = 0; t < paper::kTests; ++t) {
        for (std::size_t p = 0; p < paper::kPrefixes; ++p) {
            TrialRecord cell;
            cell.prefix_length = p + 1;
            cell.attempts = paper::kAttempts[t][p];
            cell.elapsed_seconds = paper::kSeconds[t][p];
            trials[t].push_back(cell);
        }
    }
    return MeasurementTable::from_trials({1, 2, 3, 4, 5}, std::move(trials));
}

/// Number style for projection output.
struct NumberStyle {
    bool paper = false;
    int digits = kDefaultSignificantDigits;

    [[nodiscard]] std::string operator()(const ScaledDecimal& x) const {
        return paper ? to_paper_string(x, 3) : to_string(x, digits);
    }
};

inline constexpr std::string_view kProjectionHeader = "prefix_len,text_part,attempts,seconds,hours,region";

inline void write_projection_csv(std::ostream& out, const ProjectionTable& table, const NumberStyle& style) {
    out << kProjectionHeader << '\n';
    for (const auto& row : table.rows) {
        out << row.prefix_length << ',' << csv_field(row.text_part) << ',' << csv_field(style(row.estimated_attempts))
            << ',' << csv_field(style(row.estimated_seconds)) << ',' << csv_field(style(row.estimated_hours)) << ','
            << to_string(row.region) << '\n';
    }
}

inline nlohmann::ordered_json projection_json(const ProjectionTable& table, const NumberStyle& style) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"prefix_len", row.prefix_length},
                        {"text_part", row.text_part},
                        {"attempts", style(row.estimated_attempts)},
                        {"seconds", style(row.estimated_seconds)},
                        {"hours", style(row.estimated_hours)},
                        {"region", to_string(row.region)}});
    }
    return rows;
}

/// Rows shown by the closing-stretch plot: the last few prefixes of the phrase.
inline constexpr std::size_t kTailPlotRows = 4;

/**
 * Plot series of log10(value) by prefix length, tagged with the figure they
 * belong to: 1 = measured region, 2 = closing stretch (last kTailPlotRows
 * prefixes), 3 = whole table.
 */
inline void write_log10_series(std::ostream& out, const ProjectionTable& table, std::string_view value_name,
                               const std::function<const ScaledDecimal&(const ProjectionRow&)>& pick) {
    out << "figure,prefix_len,log10_" << value_name << '\n';
    auto emit = [&](int figure, const ProjectionRow& row) {
        out << fmt::format("{},{},{:.6f}\n", figure, row.prefix_length,
                           static_cast<double>(log10(pick(row)).convert_to<double>()));
    };
    for (const auto& row : table.rows) {
        if (row.region == Region::measured) {
            emit(1, row);
        }
    }
    const std::size_t tail_start = table.rows.size() > kTailPlotRows ? table.rows.size() - kTailPlotRows : 0;
    for (std::size_t i = tail_start; i < table.rows.size(); ++i) {
        emit(2, table.rows[i]);
    }
    for (const auto& row : table.rows) {
        emit(3, row);
    }
}

}  // namespace monkey
