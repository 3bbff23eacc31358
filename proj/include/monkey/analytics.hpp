#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monkey/alphabet.hpp"
#include "monkey/records.hpp"
#include "monkey/scaled_decimal.hpp"

namespace monkey {

inline constexpr double kJulianYearSeconds = 3.15576e7;
inline constexpr double kUniverseAgeYears = 1.38e10;
inline constexpr double kSecondsPerHour = 3600.0;

/// Probability that one uniform draw of `n` symbols equals a fixed string: (1/A)^n.
inline ScaledDecimal success_probability(std::uint64_t alphabet_size, std::uint64_t n) {
    if (alphabet_size == 0 || n == 0) {
        throw std::invalid_argument("success_probability: alphabet size and length must be >= 1");
    }
    return reciprocal(scaled_int_pow(alphabet_size, n));
}

/// Mean of the geometric waiting time, A^n.
inline ScaledDecimal expected_attempts(std::uint64_t alphabet_size, std::uint64_t n) {
    if (alphabet_size == 0 || n == 0) {
        throw std::invalid_argument("expected_attempts: alphabet size and length must be >= 1");
    }
    return scaled_int_pow(alphabet_size, n);
}

/// Arithmetic mean of values[i] / values[i-1].
inline double growth_factor(std::span<const double> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("growth_factor: need at least two values");
    }
    for (double v : values) {
        if (!(v > 0) || !std::isfinite(v)) {
            throw std::invalid_argument("growth_factor: values must be positive and finite");
        }
    }
    double sum = 0.0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        sum += values[i] / values[i - 1];
    }
    return sum / static_cast<double>(values.size() - 1);
}

/**
 * Geometric continuation of `base` out to `total_length` positions.
 *
 * The first `base.size()` positions repeat the base values; each later one is
 * its predecessor times `factor`. Values are carried as ScaledDecimal since
 * the tail easily passes 10^300.
 */
inline std::vector<ScaledDecimal> project_series(std::span<const double> base, double factor,
                                                 std::size_t total_length) {
    if (base.empty() && total_length > 0) {
        throw std::invalid_argument("project_series: empty base");
    }
    if (total_length < base.size()) {
        throw std::invalid_argument("project_series: total length shorter than the base series");
    }
    if (!(factor > 0) || !std::isfinite(factor)) {
        throw std::invalid_argument("project_series: factor must be positive");
    }
    for (double v : base) {
        if (!(v > 0) || !std::isfinite(v)) {
            throw std::invalid_argument("project_series: base values must be positive and finite");
        }
    }
    std::vector<ScaledDecimal> out;
    out.reserve(total_length);
    for (double v : base) {
        out.push_back(ScaledDecimal::from_double(v));
    }
    const ScaledDecimal step = ScaledDecimal::from_double(factor);
    while (out.size() < total_length) {
        out.push_back(scaled_mul(out.back(), step));
    }
    return out;
}

inline GrowthModel make_growth_model(std::vector<double> attempts_base, std::vector<double> times_base) {
    if (attempts_base.size() != times_base.size()) {
        throw std::invalid_argument("attempts and times lists must have equal length (got " +
                                    std::to_string(attempts_base.size()) + " and " +
                                    std::to_string(times_base.size()) + ")");
    }
    GrowthModel model;
    model.attempts_growth_factor = growth_factor(attempts_base);
    model.time_growth_factor = growth_factor(times_base);
    model.attempts_base = std::move(attempts_base);
    model.times_base = std::move(times_base);
    return model;
}

/// One row per prefix of `target`; rows past the base lists are extrapolated.
inline ProjectionTable build_projection_table(const GrowthModel& model, const TargetText& target) {
    if (model.attempts_base.empty() || model.attempts_base.size() != model.times_base.size()) {
        throw std::invalid_argument("growth model base lists must be nonempty and of equal length");
    }
    const std::size_t measured = model.attempts_base.size();
    if (target.length() < measured) {
        throw std::invalid_argument("target has " + std::to_string(target.length()) +
                                    " characters but the base series has " + std::to_string(measured));
    }
    const auto attempts = project_series(model.attempts_base, model.attempts_growth_factor, target.length());
    const auto seconds = project_series(model.times_base, model.time_growth_factor, target.length());

    ProjectionTable table;
    table.rows.reserve(target.length());
    for (std::size_t i = 0; i < target.length(); ++i) {
        ProjectionRow row;
        row.prefix_length = i + 1;
        row.text_part = std::string(target.prefix(i + 1));
        row.estimated_attempts = attempts[i];
        row.estimated_seconds = seconds[i];
        row.estimated_hours = scaled_div(seconds[i], kSecondsPerHour);
        row.region = i < measured ? Region::measured : Region::extrapolated;
        table.rows.push_back(std::move(row));
    }
    return table;
}

struct TimeBreakdown {
    ScaledDecimal seconds;
    ScaledDecimal hours;
    ScaledDecimal years;
    ScaledDecimal universe_age_ratio;
    double year_length_seconds = kJulianYearSeconds;
    double universe_age_years = kUniverseAgeYears;
};

inline TimeBreakdown convert_time(const ScaledDecimal& seconds, double year_length_seconds = kJulianYearSeconds,
                                  double universe_age_years = kUniverseAgeYears) {
    if (!(year_length_seconds > 0) || !(universe_age_years > 0)) {
        throw std::invalid_argument("convert_time: year length and universe age must be positive");
    }
    TimeBreakdown out;
    out.seconds = seconds;
    out.hours = scaled_div(seconds, kSecondsPerHour);
    out.years = scaled_div(seconds, year_length_seconds);
    out.universe_age_ratio = scaled_div(out.years, universe_age_years);
    out.year_length_seconds = year_length_seconds;
    out.universe_age_years = universe_age_years;
    return out;
}

inline constexpr std::size_t kPaperCorpusLength = 1520;

struct CensusEntry {
    std::string_view normalization;
    std::size_t count = 0;
    bool matches_paper_count = false;
};

/// Character counts of a text under several counting rules.
struct CensusReport {
    std::size_t raw = 0;
    std::size_t newlines_excluded = 0;
    std::size_t whitespace_collapsed = 0;
    std::size_t letters_and_space = 0;

    [[nodiscard]] std::array<CensusEntry, 4> entries() const {
        auto entry = [](std::string_view name, std::size_t count) {
            return CensusEntry{name, count, count == kPaperCorpusLength};
        };
        return {entry("raw", raw), entry("newlines_excluded", newlines_excluded),
                entry("whitespace_collapsed", whitespace_collapsed),
                entry("letters_and_space", letters_and_space)};
    }
};

namespace detail {

inline bool is_utf8_lead(char c) { return (static_cast<unsigned char>(c) & 0xC0U) != 0x80U; }

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

inline bool is_ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

}  // namespace detail

/**
 * Counts characters (UTF-8 code points) four ways:
 *   raw                  every character;
 *   newlines_excluded    without CR/LF;
 *   whitespace_collapsed whitespace runs become one space, ends trimmed;
 *   letters_and_space    only ASCII letters and the space character.
 */
inline CensusReport corpus_census(std::string_view text) {
    CensusReport report;
    bool pending_space = false;
    bool started = false;
    for (char c : text) {
        if (!detail::is_utf8_lead(c)) {
            continue;
        }
        ++report.raw;
        if (c != '\n' && c != '\r') {
            ++report.newlines_excluded;
        }
        if (c == ' ' || detail::is_ascii_letter(c)) {
            ++report.letters_and_space;
        }
        if (detail::is_space(c)) {
            pending_space = started;
        } else {
            report.whitespace_collapsed += pending_space ? 2 : 1;
            pending_space = false;
            started = true;
        }
    }
    return report;
}

}  // namespace monkey
