#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "monkey/simulator.hpp"

using monkey::Alphabet;
using monkey::ExperimentConfig;
using monkey::RngStream;
using monkey::TargetText;

namespace {

double mean_attempts(const TargetText& target, std::size_t prefix, const Alphabet& alphabet, std::size_t trials,
                     std::uint64_t seed) {
    double sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        RngStream rng(seed, t);
        sum += static_cast<double>(monkey::run_prefix_trial(target, prefix, alphabet, rng).attempts);
    }
    return sum / static_cast<double>(trials);
}

}  // namespace

TEST(RngStream, SameKeySameSequenceDifferentKeyDifferentSequence) {
    RngStream a(42, 7);
    RngStream b(42, 7);
    RngStream c(42, 8);
    RngStream d(43, 7);
    int same_c = 0;
    int same_d = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto x = a();
        ASSERT_EQ(x, b());
        same_c += static_cast<int>(x == c());
        same_d += static_cast<int>(x == d());
    }
    EXPECT_EQ(same_c, 0);
    EXPECT_EQ(same_d, 0);

    RngStream replay = RngStream::from_stream_seed(RngStream(42, 7).stream_seed());
    RngStream original(42, 7);
    for (int i = 0; i < 100; ++i) {
        ASSERT_EQ(replay(), original());
    }
}

TEST(RngStream, BoundedStaysInRange) {
    RngStream rng(1, 1);
    for (std::uint64_t range : {1ULL, 2ULL, 3ULL, 53ULL, 1000ULL}) {
        for (int i = 0; i < 10000; ++i) {
            ASSERT_LT(rng.bounded(range), range);
        }
    }
}

TEST(RngStream, NeighbouringStreamsAreUncorrelated) {
    // Pearson correlation of paired uniform draws from adjacent stream ids.
    constexpr int kDraws = 200000;
    RngStream a(99, monkey::trial_stream_id(1, 1));
    RngStream b(99, monkey::trial_stream_id(1, 2));
    double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
    for (int i = 0; i < kDraws; ++i) {
        const double x = static_cast<double>(a() >> 11U) * 0x1.0p-53;
        const double y = static_cast<double>(b() >> 11U) * 0x1.0p-53;
        sa += x;
        sb += y;
        sab += x * y;
        saa += x * x;
        sbb += y * y;
    }
    const double n = kDraws;
    const double cov = sab / n - (sa / n) * (sb / n);
    const double r = cov / std::sqrt((saa / n - (sa / n) * (sa / n)) * (sbb / n - (sb / n) * (sb / n)));
    // |r| < 4 / sqrt(n) for independent streams.
    EXPECT_LT(std::abs(r), 4.0 / std::sqrt(n));
}

TEST(GenerateCandidate, Examples) {
    RngStream rng(5, 0);
    EXPECT_EQ(monkey::generate_candidate(Alphabet::letters_space(), 0, rng), "");
    EXPECT_EQ(monkey::generate_candidate(Alphabet::from_symbols("a"), 4, rng), "aaaa");
    const auto text = monkey::generate_candidate(Alphabet::letters(), 64, rng);
    EXPECT_EQ(text.size(), 64U);
    EXPECT_TRUE(TargetText(text).is_valid_for(Alphabet::letters()));
}

TEST(GenerateCandidate, UniformByChiSquare) {
    const auto alphabet = Alphabet::letters_space();
    RngStream rng(42, 0);
    std::vector<std::uint64_t> counts(256, 0);
    constexpr int kDraws = 1'000'000;
    for (int i = 0; i < kDraws; ++i) {
        ++counts[static_cast<unsigned char>(monkey::generate_candidate(alphabet, 1, rng)[0])];
    }
    const double expected = static_cast<double>(kDraws) / 53.0;
    double chi2 = 0.0;
    for (char c : alphabet.symbols()) {
        const double diff = static_cast<double>(counts[static_cast<unsigned char>(c)]) - expected;
        chi2 += diff * diff / expected;
    }
    // chi2.ppf(0.999, df = 52) = 89.2722 (scipy)
    EXPECT_LT(chi2, 89.2722);
}

TEST(RunPrefixTrial, SingleSymbolAlphabetNeedsExactlyOneAttempt) {
    RngStream rng(1, 1);
    const auto record = monkey::run_prefix_trial(TargetText("aaaa"), 3, Alphabet::from_symbols("a"), rng);
    EXPECT_EQ(record.attempts, 1U);
    EXPECT_EQ(record.prefix_length, 3U);
    EXPECT_FALSE(record.budget_exceeded);
    EXPECT_GE(record.elapsed_seconds, 0.0);
}

TEST(RunPrefixTrial, TwoSymbolMeanIsTwo) {
    // Geometric with p = 1/2: E = 2, sigma_mean = sqrt(2)/100 = 0.014.
    const double mean = mean_attempts(TargetText("ab"), 1, Alphabet::from_symbols("ab"), 10000, 2024);
    EXPECT_GE(mean, 1.9);
    EXPECT_LE(mean, 2.1);
}

TEST(RunPrefixTrial, RejectsOutOfAlphabetBeforeGenerating) {
    RngStream rng(3, 3);
    RngStream untouched(3, 3);
    const TargetText phrase{"To be, or"};
    EXPECT_THROW((void)monkey::run_prefix_trial(phrase, 6, Alphabet::letters_space(), rng),
                 monkey::OutOfAlphabetError);
    EXPECT_EQ(rng(), untouched());
}

TEST(RunPrefixTrial, RejectsBadPrefixLength) {
    RngStream rng(3, 3);
    EXPECT_THROW((void)monkey::run_prefix_trial(TargetText("ab"), 0, Alphabet::from_symbols("ab"), rng),
                 std::invalid_argument);
    EXPECT_THROW((void)monkey::run_prefix_trial(TargetText("ab"), 3, Alphabet::from_symbols("ab"), rng),
                 std::invalid_argument);
}

TEST(RunPrefixTrial, BudgetExhaustionIsReported) {
    RngStream rng(9, 9);
    const auto record = monkey::run_prefix_trial(TargetText("zzzzzz"), 6, Alphabet::letters(), rng, 10);
    EXPECT_TRUE(record.budget_exceeded);
    EXPECT_EQ(record.attempts, 10U);

    RngStream unlimited(9, 9);
    const auto easy = monkey::run_prefix_trial(TargetText("ab"), 1, Alphabet::from_symbols("ab"), unlimited,
                                               std::nullopt);
    EXPECT_FALSE(easy.budget_exceeded);
}

TEST(RunPrefixTrial, ReplaysFromRecordedSeed) {
    const TargetText target("abc");
    const auto alphabet = Alphabet::from_symbols("abcd");
    RngStream rng(77, 5);
    const auto first = monkey::run_prefix_trial(target, 3, alphabet, rng);
    RngStream replay = RngStream::from_stream_seed(first.seed);
    const auto second = monkey::run_prefix_trial(target, 3, alphabet, replay);
    EXPECT_EQ(first.attempts, second.attempts);
}

TEST(RunPrefixTrialProperties, SampleMeanWithinThreeSigmaOfGeometricMean) {
    struct Case {
        const char* symbols;
        const char* target;
        std::size_t n;
    };
    // A^n <= 10^4 in every case.
    const Case cases[] = {{"ab", "ba", 2}, {"abc", "cab", 3}, {"abcdefghij", "jihg", 4}, {"xyz", "zzzz", 4}};
    constexpr std::size_t kTrials = 1000;
    for (const auto& c : cases) {
        const auto alphabet = Alphabet::from_symbols(c.symbols);
        const double expected = std::pow(static_cast<double>(alphabet.size()), static_cast<double>(c.n));
        const double mean = mean_attempts(TargetText(c.target), c.n, alphabet, kTrials, 31337);
        EXPECT_NEAR(mean, expected, 3.0 * expected / std::sqrt(static_cast<double>(kTrials))) << c.symbols;
    }
}

TEST(RunExperiment, SingleCell) {
    ExperimentConfig config;
    config.target = TargetText("a");
    config.alphabet = Alphabet::from_symbols("a");
    config.max_prefix_length = 1;
    config.iterations = 1;
    const auto table = monkey::run_experiment(config);
    ASSERT_EQ(table.trials.size(), 1U);
    ASSERT_EQ(table.trials[0].size(), 1U);
    EXPECT_EQ(table.trials[0][0].attempts, 1U);
    EXPECT_EQ(table.attempts_averages, std::vector<double>{1.0});
}

TEST(RunExperiment, ShapeAndAverages) {
    ExperimentConfig config;
    config.target = TargetText("abcab");
    config.alphabet = Alphabet::from_symbols("abc");
    config.max_prefix_length = 4;
    config.iterations = 10;
    config.seed = 5;
    const auto table = monkey::run_experiment(config);
    ASSERT_EQ(table.iterations(), 10U);
    EXPECT_EQ(table.prefix_lengths, (std::vector<std::size_t>{1, 2, 3, 4}));
    for (std::size_t c = 0; c < 4; ++c) {
        double sum = 0.0;
        double seconds = 0.0;
        for (const auto& row : table.trials) {
            EXPECT_EQ(row[c].prefix_length, c + 1);
            EXPECT_GE(row[c].attempts, 1U);
            sum += static_cast<double>(row[c].attempts);
            seconds += row[c].elapsed_seconds;
        }
        EXPECT_NEAR(table.attempts_averages[c], sum / 10.0, 1e-9 * sum / 10.0);
        EXPECT_NEAR(table.time_averages[c], seconds / 10.0, 1e-9 * seconds / 10.0 + 1e-15);
    }
}

TEST(RunExperiment, DeterministicAcrossRunsAndWorkerCounts) {
    ExperimentConfig config;
    config.target = TargetText("To b");
    config.max_prefix_length = 3;
    config.iterations = 6;
    config.seed = 42;

    auto attempts_of = [](const monkey::MeasurementTable& table) {
        std::vector<std::uint64_t> out;
        for (const auto& row : table.trials) {
            for (const auto& cell : row) {
                out.push_back(cell.attempts);
                out.push_back(cell.seed);
            }
        }
        return out;
    };
    const auto serial = attempts_of(monkey::run_experiment(config));
    EXPECT_EQ(serial, attempts_of(monkey::run_experiment(config)));
    for (std::size_t workers : {2U, 3U, 8U}) {
        config.worker_count = workers;
        EXPECT_EQ(serial, attempts_of(monkey::run_experiment(config))) << workers;
    }
    config.seed = 43;
    EXPECT_NE(serial, attempts_of(monkey::run_experiment(config)));
}

TEST(RunExperiment, ValidatesConfig) {
    ExperimentConfig config;
    config.target = TargetText("To be, or");
    config.max_prefix_length = 6;
    EXPECT_THROW((void)monkey::run_experiment(config), monkey::OutOfAlphabetError);
    config.max_prefix_length = 10;
    EXPECT_THROW((void)monkey::run_experiment(config), std::invalid_argument);
    config.max_prefix_length = 2;
    config.iterations = 0;
    EXPECT_THROW((void)monkey::run_experiment(config), std::invalid_argument);
    config.iterations = 1;
    config.worker_count = 0;
    EXPECT_THROW((void)monkey::run_experiment(config), std::invalid_argument);
}

TEST(RunExperiment, BudgetExhaustionKeepsPartialResults) {
    ExperimentConfig config;
    config.target = TargetText("zzzzz");
    config.alphabet = Alphabet::letters();
    config.max_prefix_length = 5;
    config.iterations = 2;
    config.attempt_budget = 50;
    const auto table = monkey::run_experiment(config);
    EXPECT_TRUE(table.any_budget_exceeded());
    EXPECT_TRUE(table.trials[0][4].budget_exceeded);
    EXPECT_EQ(table.trials[0][4].attempts, 50U);
    EXPECT_EQ(table.trials.size(), 2U);
}

TEST(RunExperimentProperties, ColumnMeansNondecreasingWithinThreeSigma) {
    ExperimentConfig config;
    config.target = TargetText("cabc");
    config.alphabet = Alphabet::from_symbols("abc");
    config.max_prefix_length = 4;
    config.iterations = 2000;
    config.seed = 8;
    const auto table = monkey::run_experiment(config);
    const double t = static_cast<double>(config.iterations);
    for (std::size_t c = 1; c < 4; ++c) {
        // sigma of a geometric mean is about its expectation / sqrt(T)
        const double slack = 3.0 * (table.attempts_averages[c] + table.attempts_averages[c - 1]) / std::sqrt(t);
        EXPECT_GE(table.attempts_averages[c] + slack, table.attempts_averages[c - 1]);
    }
}

TEST(MeasureThroughput, PositiveAndDefinitional) {
    const auto alphabet = Alphabet::letters_space();
    EXPECT_GT(monkey::measure_throughput(alphabet, 3, 0.02), 0.0);
    EXPECT_THROW((void)monkey::measure_throughput(alphabet, 3, 0.0), std::invalid_argument);

    const auto sample = monkey::measure_throughput_workload(alphabet, 2, 100000);
    EXPECT_EQ(sample.candidates, 100000U);
    EXPECT_DOUBLE_EQ(sample.rate(), 100000.0 / sample.seconds);
}

TEST(MeasureThroughput, LongerCandidatesCostMore) {
    const auto alphabet = Alphabet::letters_space();
    auto best_rate = [&](std::size_t length) {
        double best = 0.0;
        for (int i = 0; i < 3; ++i) {
            best = std::max(best, monkey::measure_throughput_workload(alphabet, length, 2'000'000).rate());
        }
        return best;
    };
    EXPECT_LT(best_rate(5), best_rate(1));
}
