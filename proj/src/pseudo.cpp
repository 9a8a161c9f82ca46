#include "ffsga/pseudo.hpp"

#include <algorithm>

#include "ffsga/errors.hpp"
#include "ffsga/model.hpp"
#include "ffsga/parallel.hpp"

namespace ffsga {

PairStepResult pair_step(const BitChromosome& a, const BitChromosome& b, Rng& rng,
                         double crossover_rate) {
    if (a.bits.size() != b.bits.size())
        throw ContractError("pair_step: parents must share one layout");
    if (!rng.next_coin(crossover_rate)) return {a, b, false};
    const std::size_t n = a.bits.size();
    PairStepResult out;
    out.child1.bits.resize(n);
    out.child2.bits.resize(n);
    out.crossover_applied = true;
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) word = rng.next_u64();
        bool take_a = (word >> (i % 64)) & 1u;
        out.child1.bits[i] = take_a ? a.bits[i] : b.bits[i];
        out.child2.bits[i] = take_a ? b.bits[i] : a.bits[i];
    }
    return out;
}

PairPopulation::PairPopulation(const Instance& inst, double emax, int population,
                               PseudoParams params, std::uint64_t island_seed)
    : inst_(&inst),
      emax_(emax),
      layout_(BitLayout::for_instance(inst)),
      params_(params),
      island_seed_(island_seed) {
    if (population < 2 || population % 2 != 0)
        throw ConfigError("pseudo island population must be even and >= 2");
    Rng init_rng(island_seed_);
    members_.reserve(population);
    for (int p = 0; p < population / 2; ++p) {
        BitChromosome a = int_to_bits(random_int_chromosome(inst, init_rng), layout_);
        BitChromosome b = complement(a);
        members_.push_back(std::move(a));
        members_.push_back(std::move(b));
    }
    Evaluator eval(inst, emax_);
    fitness_.resize(population);
    objective_.resize(population);
    for (int i = 0; i < population; ++i) {
        ObjectiveReport rep = eval.score(bits_to_int(members_[i], layout_).genes);
        fitness_[i] = rep.fitness;
        objective_[i] = rep.objective;
        consider_for_archive(members_[i], fitness_[i], objective_[i]);
    }
}

void PairPopulation::step(int workers) {
    const int pairs = num_pairs();
    const std::uint64_t gen_seed = derive_seed(island_seed_, generation_ + 1);
    std::vector<std::uint8_t> changed(pairs, 0);
    // Pairs never read each other, so each worker commits its own slots;
    // the shared archive is updated after the barrier in pair order.
    parallel_chunks(pairs, workers, [&](int lo, int hi) {
        Evaluator eval(*inst_, emax_);
        for (int p = lo; p < hi; ++p) {
            Rng rng(derive_seed(gen_seed, static_cast<std::uint64_t>(p)));
            PairStepResult result = pair_step(members_[2 * p], members_[2 * p + 1], rng,
                                              params_.crossover_rate);
            if (!result.crossover_applied) continue;  // children equal parents, scores cached
            ObjectiveReport r1 = eval.score(bits_to_int(result.child1, layout_).genes);
            ObjectiveReport r2 = eval.score(bits_to_int(result.child2, layout_).genes);
            members_[2 * p] = std::move(result.child1);
            members_[2 * p + 1] = std::move(result.child2);
            fitness_[2 * p] = r1.fitness;
            objective_[2 * p] = r1.objective;
            fitness_[2 * p + 1] = r2.fitness;
            objective_[2 * p + 1] = r2.objective;
            changed[p] = 1;
        }
    });
    for (int p = 0; p < pairs; ++p) {
        if (!changed[p]) continue;
        consider_for_archive(members_[2 * p], fitness_[2 * p], objective_[2 * p]);
        consider_for_archive(members_[2 * p + 1], fitness_[2 * p + 1], objective_[2 * p + 1]);
    }
    ++generation_;
}

int PairPopulation::best_index() const {
    int best = 0;
    for (int i = 1; i < size(); ++i)
        if (fitness_[i] > fitness_[best]) best = i;
    return best;
}

void PairPopulation::install(int index, BitChromosome chromosome, double fitness,
                             double objective) {
    members_[index] = std::move(chromosome);
    fitness_[index] = fitness;
    objective_[index] = objective;
    consider_for_archive(members_[index], fitness, objective);
}

void PairPopulation::consider_for_archive(const BitChromosome& c, double fitness,
                                          double objective) {
    if (fitness > archive_fitness_) {
        archive_ = c;
        archive_fitness_ = fitness;
        archive_objective_ = objective;
    }
}

}  // namespace ffsga
