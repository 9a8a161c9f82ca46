#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffsga/cellular.hpp"
#include "ffsga/chromosome.hpp"
#include "ffsga/instance.hpp"
#include "ffsga/migration.hpp"
#include "ffsga/pseudo.hpp"

namespace ffsga {

enum class RunMode { dual, cellular_only, pseudo_only };

// Accepts "dual", "cellular", "pseudo" (also the -only spellings).
RunMode parse_run_mode(const std::string& name);
std::string run_mode_name(RunMode mode);

struct RunConfig {
    int population = 512;  // total; dual mode splits it evenly across islands
    int generations = 2000;
    int migration_gap = 500;
    double theta = 1.0;
    CellularParams cellular;
    PseudoParams pseudo;
    RunMode mode = RunMode::dual;
    std::uint64_t seed = 1;
    int workers = 1;  // data-parallel workers inside each island
    std::optional<std::pair<int, int>> grid_shape;
    // The migration policy reads the pseudo island's champion from the
    // live population by default; the archive is reporting-only.
    bool pseudo_fit_from_archive = false;

    int island_population() const {
        return mode == RunMode::dual ? population / 2 : population;
    }
    void validate() const;  // throws ConfigError
};

struct MigrationEvent {
    std::uint64_t generation = 0;
    double beta = 1.0;
    double alpha = 0.0;
    MigrationDirection direction = MigrationDirection::none;
    int migrants = 0;
};

// Everything wall-clock dependent lives here so callers can compare the
// rest of a RunResult bit for bit across worker counts.
struct Timings {
    double total_seconds = 0.0;
    double island_a_seconds = 0.0;
    double island_b_seconds = 0.0;
    double migration_seconds = 0.0;
    int workers = 1;
    bool concurrent_islands = false;
};

struct RunResult {
    double best_objective = 0.0;
    double best_fitness = 0.0;
    double best_makespan = 0.0;
    double best_tardiness = 0.0;
    IntChromosome best_chromosome;
    double emax = 0.0;
    // Per-generation best-so-far objective, index g-1 for generation g.
    // Island A is the cellular island, island B the pseudo island; the
    // column of an island that is not running stays empty.
    std::vector<double> trace_combined;
    std::vector<double> trace_island_a;
    std::vector<double> trace_island_b;
    std::vector<MigrationEvent> migrations;  // executed migrations only
    Timings timings;
};

// Evolves per config for the full generation budget. Dual mode advances
// the two islands on concurrent threads between migration rendezvous
// points; every field except timings is a pure function of (config,
// instance, seed).
RunResult run(const RunConfig& config, const Instance& inst);

// Reference semantics: islands advance strictly one after the other on a
// single worker. Must match run() bit for bit outside timings.
RunResult run_serialized(const RunConfig& config, const Instance& inst);

}  // namespace ffsga
