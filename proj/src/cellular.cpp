#include "ffsga/cellular.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ffsga/errors.hpp"
#include "ffsga/parallel.hpp"

namespace ffsga {

std::vector<GridPos> neighborhood(GridPos pos, int width, int height, int radius) {
    if (pos.x < 0 || pos.x >= width || pos.y < 0 || pos.y >= height)
        throw ContractError("neighborhood: position off grid");
    if (radius < 1) throw ContractError("neighborhood: radius must be >= 1");
    std::vector<GridPos> out;
    for (int dy = -radius; dy <= radius; ++dy) {
        int budget = radius - std::abs(dy);
        for (int dx = -budget; dx <= budget; ++dx) {
            if (dx == 0 && dy == 0) continue;
            int x = ((pos.x + dx) % width + width) % width;
            int y = ((pos.y + dy) % height + height) % height;
            out.push_back({x, y});
        }
    }
    return out;
}

std::vector<int> sort_island(std::span<const double> fitness) {
    std::vector<int> order(fitness.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&fitness](int a, int b) {
        return fitness[a] > fitness[b] || (fitness[a] == fitness[b] && a < b);
    });
    return order;
}

std::pair<int, int> grid_shape_for(int population) {
    if (population < 4)
        throw ConfigError("cellular island needs a population of at least 4");
    int best = 1;
    for (int d = 1; d * d <= population; ++d)
        if (population % d == 0) best = d;
    if (best < 2)
        throw ConfigError("cellular population " + std::to_string(population) +
                          " has no grid factorization with both sides >= 2");
    return {population / best, best};  // width >= height
}

void CellGrid::finish_setup() {
    Evaluator eval(*inst_, emax_);
    fitness_.resize(cells_.size());
    objective_.resize(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        ObjectiveReport rep = eval.score(cells_[i].genes);
        fitness_[i] = rep.fitness;
        objective_[i] = rep.objective;
    }
    neighbors_per_cell_ = 0;
    neighbor_slots_.clear();
    for (int i = 0; i < size(); ++i) {
        std::vector<GridPos> hood =
            neighborhood({i % width_, i / width_}, width_, height_, params_.neighborhood_radius);
        neighbors_per_cell_ = static_cast<int>(hood.size());
        for (GridPos p : hood) neighbor_slots_.push_back(p.y * width_ + p.x);
    }
}

CellGrid::CellGrid(const Instance& inst, double emax, int population, CellularParams params,
                   std::uint64_t island_seed, std::optional<std::pair<int, int>> shape)
    : inst_(&inst), emax_(emax), params_(params), island_seed_(island_seed) {
    if (shape) {
        width_ = shape->first;
        height_ = shape->second;
        if (width_ * height_ != population)
            throw ConfigError("cellular grid shape does not match island population");
        if (width_ < 2 || height_ < 2)
            throw ConfigError("cellular grid sides must both be >= 2");
    } else {
        auto [w, h] = grid_shape_for(population);
        width_ = w;
        height_ = h;
    }
    Rng init_rng(island_seed_);
    cells_.reserve(population);
    for (int i = 0; i < population; ++i) cells_.push_back(random_int_chromosome(inst, init_rng));
    finish_setup();
}

CellGrid::CellGrid(const Instance& inst, double emax, std::vector<IntChromosome> cells, int width,
                   int height, CellularParams params, std::uint64_t island_seed)
    : inst_(&inst),
      emax_(emax),
      width_(width),
      height_(height),
      params_(params),
      island_seed_(island_seed),
      cells_(std::move(cells)) {
    if (width_ * height_ != static_cast<int>(cells_.size()) || width_ < 1 || height_ < 1)
        throw ConfigError("cellular grid shape does not match cell count");
    finish_setup();
}

namespace {

// Binary tournament over neighbor slots: two independent picks (they may
// coincide), higher cached fitness wins, first pick wins ties.
int tournament(std::span<const int> slots, std::span<const double> fitness, Rng& rng) {
    int a = slots[rng.next_index(static_cast<int>(slots.size()))];
    int b = slots[rng.next_index(static_cast<int>(slots.size()))];
    return fitness[b] > fitness[a] ? b : a;
}

}  // namespace

CellGrid::StepOutcome CellGrid::compute_cell(int index, Rng& rng, Evaluator& eval) const {
    std::span<const int> slots = neighbor_slots(index);

    int parent1 = tournament(slots, fitness_, rng);
    int parent2 = tournament(slots, fitness_, rng);
    for (int tries = 0; parent2 == parent1 && tries < 8; ++tries)
        parent2 = tournament(slots, fitness_, rng);
    if (parent2 == parent1) {
        for (int slot : slots)
            if (slot != parent1) {
                parent2 = slot;
                break;
            }
    }

    const std::vector<int>& genes1 = cells_[parent1].genes;
    const std::vector<int>& genes2 = cells_[parent2].genes;
    const int len = static_cast<int>(genes1.size());

    IntChromosome child;
    if (rng.next_coin(params_.crossover_rate)) {
        // two-point crossover: cut pair uniform over distinct positions
        int a = rng.next_index(len + 1);
        int b = rng.next_index(len + 1);
        while (b == a) b = rng.next_index(len + 1);
        int lo = std::min(a, b), hi = std::max(a, b);
        child.genes = genes1;
        for (int i = lo; i < hi; ++i) child.genes[i] = genes2[i];
    } else {
        child.genes = genes1;
    }

    for (int i = 0; i < len; ++i)
        if (rng.next_coin(params_.mutation_rate))
            child.genes[i] = rng.next_index(inst_->machines_per_stage[i % inst_->num_stages]);

    ObjectiveReport rep = eval.score(child.genes);
    if (rep.fitness > fitness_[index]) return {std::move(child), rep.fitness, rep.objective, true};
    return {{}, fitness_[index], objective_[index], false};
}

CellGrid::Candidate CellGrid::cell_candidate(int index, Rng& rng) const {
    Evaluator eval(*inst_, emax_);
    StepOutcome out = compute_cell(index, rng, eval);
    if (out.replaced) return {std::move(out.child), out.fitness, out.objective, true};
    return {cells_[index], out.fitness, out.objective, false};
}

void CellGrid::step(int workers) {
    const int n = size();
    std::vector<StepOutcome> outcomes(n);
    const std::uint64_t gen_seed = derive_seed(island_seed_, generation_ + 1);
    parallel_chunks(n, workers, [&](int lo, int hi) {
        Evaluator eval(*inst_, emax_);
        for (int i = lo; i < hi; ++i) {
            Rng rng(derive_seed(gen_seed, static_cast<std::uint64_t>(i)));
            outcomes[i] = compute_cell(i, rng, eval);
        }
    });
    for (int i = 0; i < n; ++i) {
        if (!outcomes[i].replaced) continue;
        cells_[i] = std::move(outcomes[i].child);
        fitness_[i] = outcomes[i].fitness;
        objective_[i] = outcomes[i].objective;
    }
    ++generation_;
}

int CellGrid::best_index() const {
    int best = 0;
    for (int i = 1; i < size(); ++i)
        if (fitness_[i] > fitness_[best]) best = i;
    return best;
}

void CellGrid::install(int index, IntChromosome chromosome, double fitness, double objective) {
    cells_[index] = std::move(chromosome);
    fitness_[index] = fitness;
    objective_[index] = objective;
}

}  // namespace ffsga
