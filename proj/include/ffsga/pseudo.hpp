#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ffsga/chromosome.hpp"
#include "ffsga/instance.hpp"
#include "ffsga/rng.hpp"

namespace ffsga {

struct PseudoParams {
    double crossover_rate = 0.75;
};

// Mask crossover of one parent pair: with probability crossover_rate a
// uniform random bit mask m gives children (a&m | b&~m, b&m | a&~m),
// otherwise the pair passes through unchanged. Complementary parents
// always produce complementary children.
struct PairStepResult {
    BitChromosome child1;
    BitChromosome child2;
    bool crossover_applied = false;
};
PairStepResult pair_step(const BitChromosome& a, const BitChromosome& b, Rng& rng,
                         double crossover_rate);

// Crossover-only GA over parent pairs initialized as (x, ~x). Children
// replace their parents unconditionally every generation, so there is no
// selection pressure between pairs; a best-so-far archive (never fed back
// into the population) records the island's discoveries. Per-pair RNG
// substreams are keyed by (island seed, generation, pair).
class PairPopulation {
  public:
    PairPopulation(const Instance& inst, double emax, int population, PseudoParams params,
                   std::uint64_t island_seed);

    void step(int workers = 1);

    int size() const { return static_cast<int>(members_.size()); }
    int num_pairs() const { return size() / 2; }
    std::uint64_t generation() const { return generation_; }
    const Instance& instance() const { return *inst_; }
    const BitLayout& layout() const { return layout_; }
    double emax() const { return emax_; }
    const PseudoParams& params() const { return params_; }

    std::span<const double> fitness() const { return fitness_; }
    std::span<const double> objective() const { return objective_; }
    const BitChromosome& member(int index) const { return members_[index]; }

    int best_index() const;
    double best_fitness() const { return fitness_[best_index()]; }
    double best_objective() const { return objective_[best_index()]; }

    const BitChromosome& archive_chromosome() const { return archive_; }
    double archive_fitness() const { return archive_fitness_; }
    double archive_objective() const { return archive_objective_; }

    // Migration support: overwrite one slot with an already-scored
    // chromosome; the archive absorbs the installed score.
    void install(int index, BitChromosome chromosome, double fitness, double objective);

  private:
    void consider_for_archive(const BitChromosome& c, double fitness, double objective);

    const Instance* inst_;
    double emax_;
    BitLayout layout_;
    PseudoParams params_;
    std::uint64_t island_seed_ = 0;
    std::uint64_t generation_ = 0;
    std::vector<BitChromosome> members_;  // pair p occupies slots 2p, 2p+1
    std::vector<double> fitness_;
    std::vector<double> objective_;
    BitChromosome archive_;
    double archive_fitness_ = -1.0;
    double archive_objective_ = 0.0;
};

}  // namespace ffsga
