#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ffsga/chromosome.hpp"
#include "ffsga/instance.hpp"
#include "ffsga/model.hpp"
#include "ffsga/rng.hpp"

namespace ffsga {

struct CellularParams {
    double crossover_rate = 1.0;
    double mutation_rate = 0.05;
    int neighborhood_radius = 1;  // von Neumann radius (1 = NEWS)
};

struct GridPos {
    int x = 0;
    int y = 0;
    bool operator==(const GridPos&) const = default;
};

// Toroidal von Neumann neighbors of pos (center excluded): all cells at
// Manhattan distance 1..radius with coordinates wrapped mod width/height.
std::vector<GridPos> neighborhood(GridPos pos, int width, int height, int radius = 1);

// Fitness-descending index permutation, ties by ascending index. This is
// the ordering contract used when islands are sorted at a migration
// rendezvous; the sorting algorithm behind it is unspecified on purpose.
std::vector<int> sort_island(std::span<const double> fitness);

// Most-square factorization (width >= height). Throws if the best split
// would leave a dimension below 2, which degenerates the torus.
std::pair<int, int> grid_shape_for(int population);

// Synchronous cellular GA on a 2D torus. Every generation each cell
// recombines two tournament-selected neighbors, mutates the child and
// keeps it only on strict fitness improvement; all cells update from a
// frozen snapshot of the previous generation, each on an RNG substream
// keyed by (island seed, generation, cell), so any worker split yields
// bit-identical results.
class CellGrid {
  public:
    CellGrid(const Instance& inst, double emax, int population, CellularParams params,
             std::uint64_t island_seed, std::optional<std::pair<int, int>> shape = std::nullopt);

    // Explicit population, for tests; fitness cache is evaluated here.
    CellGrid(const Instance& inst, double emax, std::vector<IntChromosome> cells, int width,
             int height, CellularParams params, std::uint64_t island_seed);

    void step(int workers = 1);

    // Candidate for one cell against the current state as the frozen
    // snapshot; exposed for its unit tests.
    struct Candidate {
        IntChromosome chromosome;
        double fitness;
        double objective;
        bool replaced;  // child won the strict-improvement comparison
    };
    Candidate cell_candidate(int index, Rng& rng) const;

    std::span<const int> neighbor_slots(int index) const {
        return {neighbor_slots_.data() + static_cast<std::size_t>(index) * neighbors_per_cell_,
                static_cast<std::size_t>(neighbors_per_cell_)};
    }

    int size() const { return static_cast<int>(cells_.size()); }
    int width() const { return width_; }
    int height() const { return height_; }
    std::uint64_t generation() const { return generation_; }
    const Instance& instance() const { return *inst_; }
    double emax() const { return emax_; }
    const CellularParams& params() const { return params_; }

    std::span<const double> fitness() const { return fitness_; }
    std::span<const double> objective() const { return objective_; }
    const IntChromosome& cell(int index) const { return cells_[index]; }

    int best_index() const;
    double best_fitness() const { return fitness_[best_index()]; }
    double best_objective() const { return objective_[best_index()]; }

    // Migration support: overwrite one slot with an already-scored
    // chromosome (fitness cache stays exact because scoring is pure).
    void install(int index, IntChromosome chromosome, double fitness, double objective);

  private:
    struct StepOutcome {
        IntChromosome child;  // meaningful only when replaced
        double fitness;
        double objective;
        bool replaced;
    };
    StepOutcome compute_cell(int index, Rng& rng, Evaluator& eval) const;
    void finish_setup();

    const Instance* inst_;
    double emax_;
    int width_ = 0;
    int height_ = 0;
    CellularParams params_;
    std::uint64_t island_seed_ = 0;
    std::uint64_t generation_ = 0;
    std::vector<IntChromosome> cells_;
    std::vector<double> fitness_;
    std::vector<double> objective_;
    std::vector<int> neighbor_slots_;  // flattened, neighbors_per_cell_ per cell
    int neighbors_per_cell_ = 0;
};

}  // namespace ffsga
