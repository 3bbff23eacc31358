#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "monkey/alphabet.hpp"
#include "monkey/analytics.hpp"
#include "monkey/io.hpp"
#include "monkey/paper_data.hpp"
#include "monkey/records.hpp"
#include "monkey/scaled_decimal.hpp"
#include "monkey/simulator.hpp"

namespace monkey::cli {

inline constexpr std::string_view kToolName = "monkey";
inline constexpr std::string_view kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// What a command did and how to do it again.
struct RunManifest {
    std::string command;
    Json config = Json::object();
    std::vector<std::string> outputs;
    Json notes = Json::object();

    [[nodiscard]] Json to_json() const {
        Json out;
        out["tool"] = kToolName;
        out["version"] = kToolVersion;
        out["command"] = command;
        out["config"] = config;
        out["outputs"] = outputs;
        if (!notes.empty()) {
            out["notes"] = notes;
        }
        return out;
    }
};

struct SimulationOptions {
    std::string target{kHamletPhrase.substr(0, 5)};
    std::string alphabet{Alphabet::kLettersSpaceName};
    bool extend_alphabet = false;
    std::optional<std::size_t> max_prefix;
    std::size_t iterations = 10;
    std::uint64_t seed = 42;
    std::optional<std::uint64_t> budget = kDefaultAttemptBudget;
    std::size_t workers = 1;
    bool no_timing = false;
};

struct SimulateOptions : SimulationOptions {
    std::filesystem::path out = "out";
};

struct ProjectOptions {
    std::optional<std::filesystem::path> measurements;
    std::optional<std::string> attempts;
    std::optional<std::string> times;
    std::optional<double> throughput;
    std::string target{kHamletPhrase};
    bool paper_style = false;
    int digits = kDefaultSignificantDigits;
    double year_length_seconds = kJulianYearSeconds;
    double universe_age_years = kUniverseAgeYears;
    std::filesystem::path out = "out";
};

struct ProbOptions {
    std::int64_t alphabet_size = 52;
    std::int64_t length = 41;
    int digits = kDefaultSignificantDigits;
    std::optional<std::filesystem::path> out;
};

struct CensusOptions {
    std::optional<std::filesystem::path> file;
    bool bundled_hamlet = false;
    std::optional<std::filesystem::path> out;
};

struct ReportOptions : SimulationOptions {
    ReportOptions() {
        target = std::string(kHamletPhrase);
        max_prefix = 3;
    }

    bool use_paper_data = false;
    /// `throughput` derives base times from measured generation rates; `wallclock` uses trial timings.
    std::string time_source = "throughput";
    double throughput_seconds = 0.25;
    bool paper_style = false;
    int digits = kDefaultSignificantDigits;
    double year_length_seconds = kJulianYearSeconds;
    double universe_age_years = kUniverseAgeYears;
    std::filesystem::path out = "report";
};

namespace detail {

inline void write_file(const std::filesystem::path& dir, const std::string& name, const std::string& contents,
                       RunManifest& manifest) {
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot write " + path.string());
    }
    file << contents;
    if (!file.flush()) {
        throw std::runtime_error("failed writing " + path.string());
    }
    manifest.outputs.push_back(name);
}

inline void write_manifest(const std::filesystem::path& dir, RunManifest& manifest) {
    manifest.outputs.push_back("manifest.json");
    std::filesystem::create_directories(dir);
    const auto path = dir / "manifest.json";
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot write " + path.string());
    }
    file << manifest.to_json().dump(2) << '\n';
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::string text{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    if (file.bad()) {
        throw std::runtime_error("error reading " + path.string());
    }
    return text;
}

inline Json simulation_config_json(const SimulationOptions& options, const Alphabet& alphabet,
                                   std::size_t max_prefix) {
    Json config;
    config["target"] = options.target;
    config["alphabet"] = options.alphabet;
    config["extend_alphabet"] = options.extend_alphabet;
    config["alphabet_symbols"] = alphabet.symbols();
    config["alphabet_size"] = alphabet.size();
    config["max_prefix"] = max_prefix;
    config["iterations"] = options.iterations;
    config["seed"] = options.seed;
    config["budget"] = options.budget ? Json(*options.budget) : Json(nullptr);
    config["workers"] = options.workers;
    config["no_timing"] = options.no_timing;
    return config;
}

inline ExperimentConfig make_experiment_config(const SimulationOptions& options) {
    Alphabet alphabet = Alphabet::parse(options.alphabet);
    TargetText target(options.target);
    const std::size_t max_prefix = options.max_prefix.value_or(std::min<std::size_t>(5, target.length()));
    if (options.extend_alphabet) {
        alphabet = alphabet.extended_with(target.prefix(max_prefix));
    }
    ExperimentConfig config;
    config.target = target;
    config.alphabet = alphabet;
    config.max_prefix_length = max_prefix;
    config.iterations = options.iterations;
    config.seed = options.seed;
    config.attempt_budget = options.budget;
    config.worker_count = options.workers;
    config.validate();
    return config;
}

inline Json budget_notes(const MeasurementTable& table) {
    auto cells = Json::array();
    for (std::size_t i = 0; i < table.trials.size(); ++i) {
        for (const auto& cell : table.trials[i]) {
            if (cell.budget_exceeded) {
                cells.push_back({{"test", i + 1}, {"prefix_len", cell.prefix_length}, {"attempts", cell.attempts}});
            }
        }
    }
    return cells;
}

inline std::string average_rows(const MeasurementTable& table, bool no_timing) {
    std::ostringstream text;
    write_measurements_csv(text, table, no_timing);
    const std::string csv = text.str();
    std::string out(kMeasurementHeader);
    out += '\n';
    std::size_t pos = csv.find("\naverage,");
    if (pos != std::string::npos) {
        out += csv.substr(pos + 1);
    }
    return out;
}

inline void print_time_breakdown(std::ostream& out, const TimeBreakdown& time, int digits) {
    out << "seconds: " << to_string(time.seconds, digits) << '\n'
        << "hours: " << to_string(time.hours, digits) << '\n'
        << fmt::format("years ({} s/year): ", time.year_length_seconds) << to_string(time.years, digits) << '\n'
        << fmt::format("universe-age multiple ({} years): ", time.universe_age_years)
        << to_string(time.universe_age_ratio, digits) << '\n';
}

struct ProjectionOutputs {
    ProjectionTable table;
    TimeBreakdown final_time;
};

inline ProjectionOutputs emit_projection(const GrowthModel& model, const TargetText& target, const NumberStyle& style,
                                         double year_length, double universe_age, const std::filesystem::path& dir,
                                         RunManifest& manifest) {
    ProjectionOutputs result;
    result.table = build_projection_table(model, target);
    result.final_time = convert_time(result.table.rows.back().estimated_seconds, year_length, universe_age);

    std::ostringstream csv;
    write_projection_csv(csv, result.table, style);
    write_file(dir, "projection.csv", csv.str(), manifest);
    write_file(dir, "projection.json", projection_json(result.table, style).dump(2) + "\n", manifest);

    std::ostringstream attempts_series;
    write_log10_series(attempts_series, result.table, "attempts",
                       [](const ProjectionRow& row) -> const ScaledDecimal& { return row.estimated_attempts; });
    write_file(dir, "attempts_log10.csv", attempts_series.str(), manifest);

    std::ostringstream seconds_series;
    write_log10_series(seconds_series, result.table, "seconds",
                       [](const ProjectionRow& row) -> const ScaledDecimal& { return row.estimated_seconds; });
    write_file(dir, "seconds_log10.csv", seconds_series.str(), manifest);
    return result;
}

inline Json model_json(const GrowthModel& model) {
    Json out;
    out["attempts_base"] = model.attempts_base;
    out["times_base"] = model.times_base;
    out["attempts_growth_factor"] = model.attempts_growth_factor;
    out["time_growth_factor"] = model.time_growth_factor;
    return out;
}

inline Json census_json(const CensusReport& report) {
    auto out = Json::array();
    for (const auto& entry : report.entries()) {
        out.push_back({{"normalization", entry.normalization},
                       {"count", entry.count},
                       {"equals_1520", entry.matches_paper_count}});
    }
    return out;
}

inline void print_census(std::ostream& out, const CensusReport& report) {
    for (const auto& entry : report.entries()) {
        out << fmt::format("{:<22} {:>6}  equals 1520: {}\n", entry.normalization, entry.count,
                           entry.matches_paper_count ? "yes" : "no");
    }
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const OutOfAlphabetError& e) {
        err << "error: " << e.what() << " (use --extend-alphabet to add it)\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 1;
}

}  // namespace detail

/// Runs the trial matrix; writes measurements.csv and manifest.json; prints the average rows.
inline int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const ExperimentConfig config = detail::make_experiment_config(options);
        const MeasurementTable table = run_experiment(config);

        RunManifest manifest;
        manifest.command = "simulate";
        manifest.config = detail::simulation_config_json(options, config.alphabet, config.max_prefix_length);

        std::ostringstream csv;
        write_measurements_csv(csv, table, options.no_timing);
        detail::write_file(options.out, "measurements.csv", csv.str(), manifest);
        if (table.any_budget_exceeded()) {
            manifest.notes["budget_exceeded"] = detail::budget_notes(table);
            err << "warning: attempt budget exhausted in some trials; their averages are lower bounds\n";
        }
        detail::write_manifest(options.out, manifest);
        out << detail::average_rows(table, options.no_timing);
        return 0;
    });
}

/// Growth factors, projection table, plot series; prints the final row and its time breakdown.
inline int cmd_project(const ProjectOptions& options, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        std::vector<double> attempts;
        std::vector<double> times;
        Json source;
        if (options.measurements) {
            if (options.attempts) {
                throw std::invalid_argument("--measurements and --attempts are mutually exclusive");
            }
            std::ifstream file(*options.measurements);
            if (!file) {
                throw std::runtime_error("cannot read " + options.measurements->string());
            }
            auto averages = read_measurement_averages(file);
            attempts = std::move(averages.attempts);
            times = std::move(averages.seconds);
            source["measurements"] = options.measurements->string();
        } else if (options.attempts) {
            attempts = parse_number_list(*options.attempts);
            source["attempts"] = *options.attempts;
        } else {
            throw std::invalid_argument("either --measurements or --attempts is required");
        }
        if (options.times) {
            times = parse_number_list(*options.times);
            source["times"] = *options.times;
        } else if (options.throughput) {
            if (!(*options.throughput > 0)) {
                throw std::invalid_argument("--throughput must be positive");
            }
            times.clear();
            for (double a : attempts) {
                times.push_back(a / *options.throughput);
            }
            source["throughput"] = *options.throughput;
        } else if (!options.measurements) {
            throw std::invalid_argument("--attempts needs --times or --throughput");
        }
        if (attempts.size() < 2) {
            throw std::invalid_argument("need at least 2 base points, got " + std::to_string(attempts.size()));
        }

        const GrowthModel model = make_growth_model(attempts, times);
        const TargetText target(options.target);
        const NumberStyle style{options.paper_style, options.digits};

        RunManifest manifest;
        manifest.command = "project";
        manifest.config["source"] = source;
        manifest.config["target"] = options.target;
        manifest.config["paper_style"] = options.paper_style;
        manifest.config["digits"] = options.digits;
        manifest.config["year_length_seconds"] = options.year_length_seconds;
        manifest.config["universe_age_years"] = options.universe_age_years;
        manifest.notes["model"] = detail::model_json(model);

        const auto result = detail::emit_projection(model, target, style, options.year_length_seconds,
                                                    options.universe_age_years, options.out, manifest);
        detail::write_manifest(options.out, manifest);

        const auto& last = result.table.rows.back();
        out << fmt::format("attempts growth factor: {:.6f}\ntime growth factor: {:.6f}\n",
                           model.attempts_growth_factor, model.time_growth_factor);
        out << fmt::format("final row ({} characters, {}): attempts {}\n", last.prefix_length, to_string(last.region),
                           style(last.estimated_attempts));
        detail::print_time_breakdown(out, result.final_time, options.digits);
        return 0;
    });
}

/// Prints (1/A)^n and A^n.
inline int cmd_prob(const ProbOptions& options, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        if (options.alphabet_size <= 0) {
            throw std::invalid_argument("--alphabet-size must be positive, got " +
                                        std::to_string(options.alphabet_size));
        }
        if (options.length <= 0) {
            throw std::invalid_argument("--length must be positive, got " + std::to_string(options.length));
        }
        const auto a = static_cast<std::uint64_t>(options.alphabet_size);
        const auto n = static_cast<std::uint64_t>(options.length);
        const std::string probability = to_string(success_probability(a, n), options.digits);
        const std::string expected = to_string(expected_attempts(a, n), options.digits);
        out << "success_probability: " << probability << '\n' << "expected_attempts: " << expected << '\n';
        if (options.out) {
            RunManifest manifest;
            manifest.command = "prob";
            manifest.config = {{"alphabet_size", a}, {"length", n}, {"digits", options.digits}};
            const Json result = {{"alphabet_size", a},
                                 {"length", n},
                                 {"success_probability", probability},
                                 {"expected_attempts", expected}};
            detail::write_file(*options.out, "probability.json", result.dump(2) + "\n", manifest);
            detail::write_manifest(*options.out, manifest);
        }
        return 0;
    });
}

/// Prints the character census of a file or of the bundled soliloquy.
inline int cmd_census(const CensusOptions& options, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        if (options.file.has_value() == options.bundled_hamlet) {
            throw std::invalid_argument("exactly one of --file or --bundled-hamlet is required");
        }
        const std::string text =
            options.bundled_hamlet ? std::string(paper::kHamletSoliloquy) : detail::read_file(*options.file);
        const CensusReport report = corpus_census(text);
        out << "source: " << (options.bundled_hamlet ? std::string("bundled soliloquy") : options.file->string())
            << '\n';
        detail::print_census(out, report);
        if (options.out) {
            RunManifest manifest;
            manifest.command = "census";
            manifest.config["source"] = options.bundled_hamlet ? "bundled-hamlet" : options.file->string();
            detail::write_file(*options.out, "census.json", detail::census_json(report).dump(2) + "\n", manifest);
            detail::write_manifest(*options.out, manifest);
        }
        return 0;
    });
}

/**
 * Whole pipeline: measurements (fresh or published), projection of the full
 * target, probabilities, corpus census and a plain-text summary.
 *
 * With fresh data the base times are, by default, attempts divided by the
 * measured generation rate at each prefix length; `time_source = "wallclock"`
 * uses the trial timings instead.
 */
inline int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const TargetText target(options.target);
        const NumberStyle style{options.paper_style, options.digits};
        RunManifest manifest;
        manifest.command = "report";

        GrowthModel model;
        std::size_t alphabet_size = 52;
        std::string source_line;
        if (options.use_paper_data) {
            const MeasurementTable table = paper_measurement_table();
            std::ostringstream csv;
            write_measurements_csv(csv, table, options.no_timing);
            detail::write_file(options.out, "measurements.csv", csv.str(), manifest);
            model = make_growth_model({paper::kAttemptsBase.begin(), paper::kAttemptsBase.end()},
                                      {paper::kTimesBase.begin(), paper::kTimesBase.end()});
            manifest.config["source"] = "paper-data";
            source_line = "published averages (ten tests, prefixes 1..5)";
        } else {
            if (options.time_source != "throughput" && options.time_source != "wallclock") {
                throw std::invalid_argument("--time-source must be 'throughput' or 'wallclock', got '" +
                                            options.time_source + "'");
            }
            if (options.time_source == "wallclock" && options.no_timing) {
                throw std::invalid_argument("--time-source wallclock needs timings; drop --no-timing");
            }
            const ExperimentConfig config = detail::make_experiment_config(options);
            const MeasurementTable table = run_experiment(config);
            std::ostringstream csv;
            write_measurements_csv(csv, table, options.no_timing);
            detail::write_file(options.out, "measurements.csv", csv.str(), manifest);
            if (table.any_budget_exceeded()) {
                manifest.notes["budget_exceeded"] = detail::budget_notes(table);
            }

            std::vector<double> times;
            if (options.time_source == "wallclock") {
                times = table.time_averages;
            } else {
                if (!(options.throughput_seconds > 0)) {
                    throw std::invalid_argument("--throughput-seconds must be positive");
                }
                auto rates = Json::array();
                for (std::size_t i = 0; i < table.prefix_lengths.size(); ++i) {
                    const double rate =
                        measure_throughput(config.alphabet, table.prefix_lengths[i], options.throughput_seconds);
                    rates.push_back({{"prefix_len", table.prefix_lengths[i]}, {"candidates_per_second", rate}});
                    times.push_back(table.attempts_averages[i] / rate);
                }
                manifest.notes["throughput"] = rates;
            }
            model = make_growth_model(table.attempts_averages, times);
            alphabet_size = config.alphabet.size();
            manifest.config["source"] = "simulation";
            manifest.config["simulation"] =
                detail::simulation_config_json(options, config.alphabet, config.max_prefix_length);
            manifest.config["time_source"] = options.time_source;
            manifest.config["throughput_seconds"] = options.throughput_seconds;
            source_line = fmt::format("fresh simulation (seed {}, {} iterations, prefixes 1..{}, A = {})",
                                      options.seed, options.iterations, config.max_prefix_length, alphabet_size);
        }
        manifest.config["target"] = options.target;
        manifest.config["paper_style"] = options.paper_style;
        manifest.config["digits"] = options.digits;
        manifest.config["year_length_seconds"] = options.year_length_seconds;
        manifest.config["universe_age_years"] = options.universe_age_years;
        manifest.notes["model"] = detail::model_json(model);

        const auto projection = detail::emit_projection(model, target, style, options.year_length_seconds,
                                                        options.universe_age_years, options.out, manifest);

        std::vector<std::pair<std::uint64_t, std::uint64_t>> cases = {
            {52, target.length()}, {52, kPaperCorpusLength}};
        if (alphabet_size != 52) {
            cases.emplace_back(alphabet_size, target.length());
        }
        auto probabilities = Json::array();
        for (const auto& [a, n] : cases) {
            probabilities.push_back({{"alphabet_size", a},
                                     {"length", n},
                                     {"success_probability", to_string(success_probability(a, n), options.digits)},
                                     {"expected_attempts", to_string(expected_attempts(a, n), options.digits)}});
        }
        detail::write_file(options.out, "probabilities.json", probabilities.dump(2) + "\n", manifest);

        const CensusReport census = corpus_census(paper::kHamletSoliloquy);
        detail::write_file(options.out, "census.json", detail::census_json(census).dump(2) + "\n", manifest);

        const auto& last = projection.table.rows.back();
        const TimeBreakdown& time = projection.final_time;
        const int d = options.digits;
        std::ostringstream summary;
        summary << "target: \"" << target.text() << "\" (" << target.length() << " characters)\n"
                << "source: " << source_line << '\n'
                << fmt::format("attempts growth factor: {:.6f}\n", model.attempts_growth_factor)
                << fmt::format("time growth factor: {:.6f}\n", model.time_growth_factor)
                << "final attempts: " << to_string(last.estimated_attempts, d)
                << fmt::format("  (published {:.2e})\n", paper::kFinalAttempts)
                << "final seconds: " << to_string(time.seconds, d)
                << fmt::format("  (published {:.2e})\n", paper::kFinalSeconds)
                << "final hours: " << to_string(time.hours, d)
                << fmt::format("  (published {:.2e})\n", paper::kFinalHours)
                << fmt::format("final years ({} s/year): ", time.year_length_seconds) << to_string(time.years, d)
                << fmt::format("  (published {:.2e}; note: seconds / year length does not give the published value)\n",
                               paper::kFinalYears)
                << fmt::format("universe-age multiple ({} years): ", time.universe_age_years)
                << to_string(time.universe_age_ratio, d)
                << fmt::format("  (published {:.2e}, derived from the published years)\n", paper::kUniverseRatio);
        for (const auto& p : probabilities) {
            summary << fmt::format("success probability A={} n={}: {}\n", p["alphabet_size"].get<std::uint64_t>(),
                                   p["length"].get<std::uint64_t>(), p["success_probability"].get<std::string>());
        }
        summary << "corpus census (bundled soliloquy):\n";
        detail::print_census(summary, census);
        if (manifest.notes.contains("budget_exceeded")) {
            summary << "warning: attempt budget exhausted in some trials; averages are lower bounds\n";
        }
        detail::write_file(options.out, "summary.txt", summary.str(), manifest);
        detail::write_manifest(options.out, manifest);
        out << summary.str();
        return 0;
    });
}

}  // namespace monkey::cli
