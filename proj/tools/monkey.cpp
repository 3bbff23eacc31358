#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "monkey/cli.hpp"

namespace {

void add_simulation_flags(CLI::App& cmd, monkey::cli::SimulationOptions& o, bool& no_budget) {
    cmd.add_option("--target", o.target, "Target phrase")->capture_default_str();
    cmd.add_option("--alphabet", o.alphabet, "Preset (letters+space, letters) or explicit symbols")
        ->capture_default_str();
    cmd.add_flag("--extend-alphabet", o.extend_alphabet, "Append target symbols missing from the alphabet");
    cmd.add_option("--max-prefix", o.max_prefix, "Longest prefix to simulate")->check(CLI::PositiveNumber);
    cmd.add_option("--iterations", o.iterations, "Tests per prefix length")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd.add_option("--seed", o.seed, "Experiment seed")->capture_default_str();
    cmd.add_option("--budget", o.budget, "Attempt cap per trial")->capture_default_str()->check(CLI::PositiveNumber);
    cmd.add_flag("--no-budget", no_budget, "Run trials without an attempt cap");
    cmd.add_option("--workers", o.workers, "Concurrent workers")->capture_default_str()->check(CLI::PositiveNumber);
    cmd.add_flag("--no-timing", o.no_timing, "Write zero elapsed times for byte-stable output");
}

void add_unit_flags(CLI::App& cmd, double& year_length, double& universe_age) {
    cmd.add_option("--year-seconds", year_length, "Seconds per year")->capture_default_str();
    cmd.add_option("--universe-age", universe_age, "Age of the universe in years")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-typing simulation, projection and probability toolkit", std::string(monkey::cli::kToolName)};
    app.set_version_flag("--version", std::string(monkey::cli::kToolVersion));
    app.require_subcommand(1);

    monkey::cli::SimulateOptions simulate;
    bool simulate_no_budget = false;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run prefix trials and write measurements.csv");
    add_simulation_flags(*simulate_cmd, simulate, simulate_no_budget);
    simulate_cmd->add_option("--out", simulate.out, "Output directory")->capture_default_str();

    monkey::cli::ProjectOptions project;
    auto* project_cmd = app.add_subcommand("project", "Extrapolate measured averages to the full target");
    auto* measurements = project_cmd->add_option("--measurements", project.measurements, "measurements.csv to read");
    project_cmd->add_option("--attempts", project.attempts, "Comma-separated attempts averages")
        ->excludes(measurements);
    project_cmd->add_option("--times", project.times, "Comma-separated seconds averages");
    project_cmd->add_option("--throughput", project.throughput, "Candidates per second; times = attempts / rate");
    project_cmd->add_option("--target", project.target, "Full target phrase")->capture_default_str();
    project_cmd->add_flag("--paper-style", project.paper_style, "3 significant figures with decimal comma");
    project_cmd->add_option("--digits", project.digits, "Significant digits")->capture_default_str()->check(
        CLI::Range(1, 40));
    add_unit_flags(*project_cmd, project.year_length_seconds, project.universe_age_years);
    project_cmd->add_option("--out", project.out, "Output directory")->capture_default_str();

    monkey::cli::ProbOptions prob;
    auto* prob_cmd = app.add_subcommand("prob", "Print (1/A)^n and A^n");
    prob_cmd->add_option("--alphabet-size", prob.alphabet_size, "Alphabet size A")->capture_default_str();
    prob_cmd->add_option("--length", prob.length, "Text length n")->capture_default_str();
    prob_cmd->add_option("--digits", prob.digits, "Significant digits")->capture_default_str()->check(
        CLI::Range(1, 40));
    prob_cmd->add_option("--out", prob.out, "Optional output directory");

    monkey::cli::CensusOptions census;
    auto* census_cmd = app.add_subcommand("census", "Count characters under several rules");
    auto* file = census_cmd->add_option("--file", census.file, "Text file to count");
    census_cmd->add_flag("--bundled-hamlet", census.bundled_hamlet, "Use the bundled soliloquy")->excludes(file);
    census_cmd->add_option("--out", census.out, "Optional output directory");

    monkey::cli::ReportOptions report;
    bool report_no_budget = false;
    auto* report_cmd = app.add_subcommand("report", "Run the whole pipeline and write a bundle");
    add_simulation_flags(*report_cmd, report, report_no_budget);
    report_cmd->add_flag("--use-paper-data", report.use_paper_data, "Use the published averages instead of simulating");
    report_cmd->add_option("--time-source", report.time_source, "throughput or wallclock")
        ->capture_default_str()
        ->check(CLI::IsMember({"throughput", "wallclock"}));
    report_cmd->add_option("--throughput-seconds", report.throughput_seconds, "Seconds per throughput measurement")
        ->capture_default_str();
    report_cmd->add_flag("--paper-style", report.paper_style, "3 significant figures with decimal comma");
    report_cmd->add_option("--digits", report.digits, "Significant digits")->capture_default_str()->check(
        CLI::Range(1, 40));
    add_unit_flags(*report_cmd, report.year_length_seconds, report.universe_age_years);
    report_cmd->add_option("--out", report.out, "Output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (simulate_no_budget) {
        simulate.budget.reset();
    }
    if (report_no_budget) {
        report.budget.reset();
    }

    if (simulate_cmd->parsed()) {
        return monkey::cli::cmd_simulate(simulate, std::cout, std::cerr);
    }
    if (project_cmd->parsed()) {
        return monkey::cli::cmd_project(project, std::cout, std::cerr);
    }
    if (prob_cmd->parsed()) {
        return monkey::cli::cmd_prob(prob, std::cout, std::cerr);
    }
    if (census_cmd->parsed()) {
        return monkey::cli::cmd_census(census, std::cout, std::cerr);
    }
    return monkey::cli::cmd_report(report, std::cout, std::cerr);
}
