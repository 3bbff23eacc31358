#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monkey/scaled_decimal.hpp"

namespace monkey {

/// One prefix trial: how many candidates it took and how long.
struct TrialRecord {
    std::size_t prefix_length = 0;
    std::uint64_t attempts = 0;
    double elapsed_seconds = 0.0;
    /// Per-trial stream seed; `RngStream::from_stream_seed(seed)` replays the trial.
    std::uint64_t seed = 0;
    /// Set when the attempt budget ran out; `attempts` then equals the budget.
    bool budget_exceeded = false;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Trials indexed (iteration x prefix length) plus per-column means.
struct MeasurementTable {
    std::vector<std::size_t> prefix_lengths;
    std::vector<std::vector<TrialRecord>> trials;
    std::vector<double> attempts_averages;
    std::vector<double> time_averages;

    /// Builds the table and computes column means. Rows must all match `prefix_lengths` in width.
    static MeasurementTable from_trials(std::vector<std::size_t> prefix_lengths,
                                        std::vector<std::vector<TrialRecord>> trials) {
        MeasurementTable table;
        const std::size_t columns = prefix_lengths.size();
        if (trials.empty()) {
            throw std::invalid_argument("measurement table needs at least one iteration");
        }
        for (const auto& row : trials) {
            if (row.size() != columns) {
                throw std::invalid_argument("measurement table rows must have one cell per prefix length");
            }
        }
        table.attempts_averages.assign(columns, 0.0);
        table.time_averages.assign(columns, 0.0);
        for (std::size_t c = 0; c < columns; ++c) {
            double attempts_sum = 0.0;
            double time_sum = 0.0;
            for (const auto& row : trials) {
                attempts_sum += static_cast<double>(row[c].attempts);
                time_sum += row[c].elapsed_seconds;
            }
            table.attempts_averages[c] = attempts_sum / static_cast<double>(trials.size());
            table.time_averages[c] = time_sum / static_cast<double>(trials.size());
        }
        table.prefix_lengths = std::move(prefix_lengths);
        table.trials = std::move(trials);
        return table;
    }

    [[nodiscard]] std::size_t iterations() const { return trials.size(); }

    [[nodiscard]] bool any_budget_exceeded() const {
        for (const auto& row : trials) {
            for (const auto& cell : row) {
                if (cell.budget_exceeded) {
                    return true;
                }
            }
        }
        return false;
    }
};

/// Measured base series and their consecutive-ratio growth factors.
struct GrowthModel {
    std::vector<double> attempts_base;
    std::vector<double> times_base;
    double attempts_growth_factor = 0.0;
    double time_growth_factor = 0.0;
};

enum class Region { measured, extrapolated };

inline std::string_view to_string(Region region) {
    return region == Region::measured ? "measured" : "extrapolated";
}

struct ProjectionRow {
    std::size_t prefix_length = 0;
    std::string text_part;
    ScaledDecimal estimated_attempts;
    ScaledDecimal estimated_seconds;
    ScaledDecimal estimated_hours;
    Region region = Region::measured;
};

struct ProjectionTable {
    std::vector<ProjectionRow> rows;
};

}  // namespace monkey
