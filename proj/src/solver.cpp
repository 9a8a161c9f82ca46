#include "ffsga/solver.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <thread>

#include "ffsga/errors.hpp"
#include "ffsga/model.hpp"

namespace ffsga {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

RunMode parse_run_mode(const std::string& name) {
    if (name == "dual") return RunMode::dual;
    if (name == "cellular" || name == "cellular-only") return RunMode::cellular_only;
    if (name == "pseudo" || name == "pseudo-only") return RunMode::pseudo_only;
    throw ConfigError("unknown mode '" + name + "' (expected dual, cellular or pseudo)");
}

std::string run_mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::dual: return "dual";
        case RunMode::cellular_only: return "cellular";
        case RunMode::pseudo_only: return "pseudo";
    }
    throw ContractError("run_mode_name: invalid mode value");
}

void RunConfig::validate() const {
    if (generations < 1) throw ConfigError("generations must be at least 1");
    if (migration_gap < 1) throw ConfigError("migration gap must be at least 1");
    if (theta < 0.0 || theta > 1.0) throw ConfigError("theta must lie in [0, 1]");
    if (workers < 1) throw ConfigError("workers must be at least 1");
    if (cellular.crossover_rate < 0.0 || cellular.crossover_rate > 1.0)
        throw ConfigError("cellular crossover rate must lie in [0, 1]");
    if (cellular.mutation_rate < 0.0 || cellular.mutation_rate > 1.0)
        throw ConfigError("cellular mutation rate must lie in [0, 1]");
    if (pseudo.crossover_rate < 0.0 || pseudo.crossover_rate > 1.0)
        throw ConfigError("pseudo crossover rate must lie in [0, 1]");
    switch (mode) {
        case RunMode::dual:
            if (population < 8 || population % 4 != 0)
                throw ConfigError(
                    "dual mode needs a population divisible by 4 and at least 8 so each "
                    "island gets an even share");
            break;
        case RunMode::cellular_only:
            if (population < 4) throw ConfigError("cellular mode needs a population of at least 4");
            break;
        case RunMode::pseudo_only:
            if (population < 2 || population % 2 != 0)
                throw ConfigError("pseudo mode needs an even population of at least 2");
            break;
    }
    if (grid_shape) {
        int cell_count = mode == RunMode::pseudo_only ? 0 : island_population();
        if (mode != RunMode::pseudo_only && grid_shape->first * grid_shape->second != cell_count)
            throw ConfigError("grid shape does not cover the cellular island population");
    }
}

namespace {

// Single driver behind run and run_serialized; `concurrent` only changes
// whether island segments overlap in time, never what they compute.
RunResult drive(const RunConfig& config, const Instance& inst, bool concurrent) {
    config.validate();
    inst.validate();
    const auto run_start = Clock::now();

    RunResult result;
    result.emax = estimate_emax(inst);
    const int island_size = config.island_population();
    const std::uint64_t budget = static_cast<std::uint64_t>(config.generations);

    const bool want_cellular = config.mode != RunMode::pseudo_only;
    const bool want_pseudo = config.mode != RunMode::cellular_only;

    std::unique_ptr<CellGrid> grid;
    std::unique_ptr<PairPopulation> pairs;
    if (want_cellular)
        grid = std::make_unique<CellGrid>(inst, result.emax, island_size, config.cellular,
                                          derive_seed(config.seed, 0), config.grid_shape);
    if (want_pseudo)
        pairs = std::make_unique<PairPopulation>(inst, result.emax, island_size, config.pseudo,
                                                 derive_seed(config.seed, 1));

    result.trace_combined.resize(budget);
    if (want_cellular) result.trace_island_a.resize(budget);
    if (want_pseudo) result.trace_island_b.resize(budget);

    double cellular_seconds = 0.0;
    double pseudo_seconds = 0.0;
    double migration_seconds = 0.0;

    // Generations are 1-based; trace index g-1 holds generation g. Each
    // island writes only its own trace column, so the concurrent variant
    // needs no locking.
    auto advance_cellular = [&](std::uint64_t from, std::uint64_t to) {
        const auto start = Clock::now();
        for (std::uint64_t g = from + 1; g <= to; ++g) {
            grid->step(config.workers);
            result.trace_island_a[g - 1] = grid->best_objective();
        }
        cellular_seconds += seconds_since(start);
    };
    auto advance_pseudo = [&](std::uint64_t from, std::uint64_t to) {
        const auto start = Clock::now();
        for (std::uint64_t g = from + 1; g <= to; ++g) {
            pairs->step(config.workers);
            result.trace_island_b[g - 1] = pairs->archive_objective();
        }
        pseudo_seconds += seconds_since(start);
    };

    const bool both = want_cellular && want_pseudo;
    std::uint64_t done = 0;
    while (done < budget) {
        const std::uint64_t gap = static_cast<std::uint64_t>(config.migration_gap);
        const std::uint64_t stop = std::min(budget, (done / gap + 1) * gap);

        if (both && concurrent) {
            std::thread cellular_worker(advance_cellular, done, stop);
            advance_pseudo(done, stop);
            cellular_worker.join();
        } else {
            if (want_cellular) advance_cellular(done, stop);
            if (want_pseudo) advance_pseudo(done, stop);
        }
        done = stop;

        if (both && done < budget && done % gap == 0) {
            const auto start = Clock::now();
            double fit_a = grid->best_fitness();
            double fit_b = config.pseudo_fit_from_archive ? pairs->archive_fitness()
                                                          : pairs->best_fitness();
            MigrationPolicy policy{config.theta, config.migration_gap};
            MigrationDecision decision = decide(fit_a, fit_b, policy, island_size);
            if (decision.direction != MigrationDirection::none) {
                if (decision.direction == MigrationDirection::a_to_b)
                    migrate_cellular_to_pseudo(*grid, *pairs, decision.migrants);
                else
                    migrate_pseudo_to_cellular(*pairs, *grid, decision.migrants);
                result.migrations.push_back({done, decision.beta, decision.alpha,
                                             decision.direction, decision.migrants});
                // Immigrants may beat the island's previous champion, so
                // the entries already written for this generation are
                // refreshed at the rendezvous.
                result.trace_island_a[done - 1] = grid->best_objective();
                result.trace_island_b[done - 1] = pairs->archive_objective();
            }
            migration_seconds += seconds_since(start);
        }
    }

    for (std::uint64_t g = 0; g < budget; ++g) {
        if (!both)
            result.trace_combined[g] =
                want_cellular ? result.trace_island_a[g] : result.trace_island_b[g];
        else
            result.trace_combined[g] =
                std::min(result.trace_island_a[g], result.trace_island_b[g]);
    }

    // Champion selection prefers the cellular island on exact fitness
    // ties to keep the result independent of island evaluation order.
    double fit_a = want_cellular ? grid->best_fitness() : -1.0;
    double fit_b = want_pseudo ? pairs->archive_fitness() : -1.0;
    if (want_cellular && fit_a >= fit_b) {
        result.best_chromosome = grid->cell(grid->best_index());
    } else {
        result.best_chromosome = bits_to_int(pairs->archive_chromosome(), pairs->layout());
    }
    ObjectiveReport report =
        evaluate(inst, decode(inst, result.best_chromosome.genes), result.emax);
    result.best_objective = report.objective;
    result.best_fitness = report.fitness;
    result.best_makespan = report.makespan;
    result.best_tardiness = report.total_tardiness;

    result.timings.total_seconds = seconds_since(run_start);
    result.timings.island_a_seconds = cellular_seconds;
    result.timings.island_b_seconds = pseudo_seconds;
    result.timings.migration_seconds = migration_seconds;
    result.timings.workers = config.workers;
    result.timings.concurrent_islands = both && concurrent;
    return result;
}

}  // namespace

RunResult run(const RunConfig& config, const Instance& inst) {
    return drive(config, inst, true);
}

RunResult run_serialized(const RunConfig& config, const Instance& inst) {
    RunConfig serialized = config;
    serialized.workers = 1;
    return drive(serialized, inst, false);
}

}  // namespace ffsga
