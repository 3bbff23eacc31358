#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "monkey/alphabet.hpp"
#include "monkey/records.hpp"
#include "monkey/rng.hpp"

namespace monkey {

inline constexpr std::uint64_t kDefaultAttemptBudget = 10'000'000'000ULL;

namespace detail {

inline void fill_candidate(const Alphabet& alphabet, RngStream& rng, char* out, std::size_t length) {
    const std::uint64_t range = alphabet.size();
    const char* symbols = alphabet.symbols().data();
    for (std::size_t i = 0; i < length; ++i) {
        out[i] = symbols[rng.bounded(range)];
    }
}

}  // namespace detail

/// `length` symbols drawn independently and uniformly from `alphabet`.
inline std::string generate_candidate(const Alphabet& alphabet, std::size_t length, RngStream& rng) {
    if (alphabet.size() == 0) {
        throw std::invalid_argument("generate_candidate: empty alphabet");
    }
    std::string out(length, '\0');
    detail::fill_candidate(alphabet, rng, out.data(), length);
    return out;
}

/**
 * Generates fresh candidates of `prefix_length` symbols until one equals the
 * target's prefix of that length.
 *
 * `attempts` counts every candidate generated, the matching one included. If
 * `budget` runs out first the record comes back with `budget_exceeded` set and
 * `attempts == *budget`. A prefix containing a symbol outside `alphabet` can
 * never match and raises OutOfAlphabetError before any generation.
 */
inline TrialRecord run_prefix_trial(const TargetText& target, std::size_t prefix_length, const Alphabet& alphabet,
                                    RngStream& rng, std::optional<std::uint64_t> budget = kDefaultAttemptBudget) {
    if (prefix_length == 0 || prefix_length > target.length()) {
        throw std::invalid_argument("prefix length " + std::to_string(prefix_length) + " outside 1.." +
                                    std::to_string(target.length()));
    }
    if (budget && *budget == 0) {
        throw std::invalid_argument("attempt budget must be positive");
    }
    target.require_valid(alphabet, prefix_length);

    const std::string_view wanted = target.prefix(prefix_length);
    std::string candidate(prefix_length, '\0');
    TrialRecord record;
    record.prefix_length = prefix_length;
    record.seed = rng.stream_seed();

    const auto start = std::chrono::steady_clock::now();
    std::uint64_t attempts = 0;
    for (;;) {
        detail::fill_candidate(alphabet, rng, candidate.data(), prefix_length);
        ++attempts;
        if (std::memcmp(candidate.data(), wanted.data(), prefix_length) == 0) {
            break;
        }
        if (budget && attempts >= *budget) {
            record.budget_exceeded = true;
            break;
        }
    }
    record.attempts = attempts;
    record.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

struct ExperimentConfig {
    TargetText target{std::string(kHamletPhrase.substr(0, 5))};
    Alphabet alphabet = Alphabet::letters_space();
    std::size_t max_prefix_length = 5;
    std::size_t iterations = 10;
    std::uint64_t seed = 42;
    std::optional<std::uint64_t> attempt_budget = kDefaultAttemptBudget;
    std::size_t worker_count = 1;

    void validate() const {
        if (max_prefix_length == 0 || max_prefix_length > target.length()) {
            throw std::invalid_argument("max prefix length must lie in 1.." + std::to_string(target.length()));
        }
        if (iterations == 0) {
            throw std::invalid_argument("iterations must be >= 1");
        }
        if (worker_count == 0) {
            throw std::invalid_argument("worker count must be >= 1");
        }
        if (attempt_budget && *attempt_budget == 0) {
            throw std::invalid_argument("attempt budget must be positive");
        }
        target.require_valid(alphabet, max_prefix_length);
    }
};

/**
 * Runs every (iteration, prefix length) trial and collects the table.
 *
 * Each trial gets its own stream derived from (seed, iteration, prefix length),
 * so the attempts matrix does not depend on `worker_count` or on the order in
 * which workers finish.
 */
inline MeasurementTable run_experiment(const ExperimentConfig& config) {
    config.validate();

    const std::size_t columns = config.max_prefix_length;
    const std::size_t task_count = config.iterations * columns;
    std::vector<std::vector<TrialRecord>> trials(config.iterations, std::vector<TrialRecord>(columns));

    std::atomic<std::size_t> next_task{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t task = next_task.fetch_add(1, std::memory_order_relaxed);
            if (task >= task_count) {
                return;
            }
            const std::size_t iteration = task / columns;
            const std::size_t column = task % columns;
            try {
                RngStream rng(config.seed, trial_stream_id(iteration + 1, column + 1));
                trials[iteration][column] =
                    run_prefix_trial(config.target, column + 1, config.alphabet, rng, config.attempt_budget);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next_task.store(task_count);
                return;
            }
        }
    };

    const std::size_t thread_count = std::min(config.worker_count, task_count);
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(thread_count);
        for (std::size_t i = 0; i < thread_count; ++i) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<std::size_t> prefix_lengths(columns);
    for (std::size_t c = 0; c < columns; ++c) {
        prefix_lengths[c] = c + 1;
    }
    return MeasurementTable::from_trials(std::move(prefix_lengths), std::move(trials));
}

struct ThroughputSample {
    std::uint64_t candidates = 0;
    double seconds = 0.0;

    [[nodiscard]] double rate() const { return static_cast<double>(candidates) / seconds; }
};

namespace detail {

// Generate-and-compare loop against a fixed prefix; checks the clock every 4096 candidates.
template <typename Stop>
ThroughputSample throughput_loop(const Alphabet& alphabet, std::size_t length, Stop should_stop) {
    if (length == 0) {
        throw std::invalid_argument("throughput: candidate length must be >= 1");
    }
    const std::string fixed(length, alphabet[0]);
    std::string candidate(length, '\0');
    RngStream rng(0x5eed, length);
    std::uint64_t candidates = 0;
    std::uint64_t matches = 0;
    const auto start = std::chrono::steady_clock::now();
    double elapsed = 0.0;
    do {
        for (int i = 0; i < 4096; ++i) {
            fill_candidate(alphabet, rng, candidate.data(), length);
            matches += static_cast<std::uint64_t>(std::memcmp(candidate.data(), fixed.data(), length) == 0);
            ++candidates;
            if (should_stop(candidates, -1.0)) {
                break;
            }
        }
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } while (!should_stop(candidates, elapsed));
    // Keeps the comparison observable.
    volatile std::uint64_t sink = matches;
    (void)sink;
    return {candidates, std::max(elapsed, 1e-9)};
}

}  // namespace detail

/// Candidates of `length` generated and compared per second over roughly `duration_seconds`.
inline double measure_throughput(const Alphabet& alphabet, std::size_t length, double duration_seconds) {
    if (!(duration_seconds > 0)) {
        throw std::invalid_argument("throughput duration must be positive");
    }
    return detail::throughput_loop(alphabet, length,
                                   [duration_seconds](std::uint64_t, double elapsed) {
                                       return elapsed >= duration_seconds;
                                   })
        .rate();
}

/// Fixed workload of exactly `candidates` generations.
inline ThroughputSample measure_throughput_workload(const Alphabet& alphabet, std::size_t length,
                                                    std::uint64_t candidates) {
    if (candidates == 0) {
        throw std::invalid_argument("throughput workload must be positive");
    }
    return detail::throughput_loop(alphabet, length, [candidates](std::uint64_t done, double) {
        return done >= candidates;
    });
}

}  // namespace monkey
