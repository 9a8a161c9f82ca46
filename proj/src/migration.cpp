#include "ffsga/migration.hpp"

#include <cmath>

#include "ffsga/errors.hpp"

namespace ffsga {

double compute_beta(double fit_a, double fit_b) {
    if (fit_a < 0.0 || fit_b < 0.0)
        throw ContractError("compute_beta: fitness values must be non-negative");
    if (fit_a == fit_b) return 1.0;
    return fit_a < fit_b ? fit_a / fit_b : fit_b / fit_a;
}

double compute_alpha(double beta, double theta) {
    double rate = 1.0 - beta;
    return rate < theta ? rate : 0.0;
}

MigrationDecision decide(double fit_a, double fit_b, const MigrationPolicy& policy,
                         int island_population) {
    if (island_population < 1)
        throw ContractError("decide: island population must be positive");
    MigrationDecision d;
    d.beta = compute_beta(fit_a, fit_b);
    d.alpha = compute_alpha(d.beta, policy.theta);
    d.migrants = static_cast<int>(std::floor(d.alpha * island_population));
    if (d.migrants <= 0 || fit_a == fit_b) {
        d.direction = MigrationDirection::none;
        d.migrants = 0;
        return d;
    }
    d.direction = fit_a > fit_b ? MigrationDirection::a_to_b : MigrationDirection::b_to_a;
    return d;
}

namespace {

void check_count(int k, int from_size, int to_size) {
    if (k < 0 || k > from_size || k > to_size)
        throw ContractError("migrate: migrant count exceeds an island population");
}

}  // namespace

void migrate_cellular_to_pseudo(const CellGrid& from, PairPopulation& to, int k) {
    check_count(k, from.size(), to.size());
    std::vector<int> best = sort_island(from.fitness());
    std::vector<int> worst = sort_island(to.fitness());
    for (int i = 0; i < k; ++i) {
        int src = best[i];
        int dst = worst[static_cast<int>(worst.size()) - 1 - i];
        to.install(dst, int_to_bits(from.cell(src), to.layout()), from.fitness()[src],
                   from.objective()[src]);
    }
}

void migrate_pseudo_to_cellular(const PairPopulation& from, CellGrid& to, int k) {
    check_count(k, from.size(), to.size());
    std::vector<int> best = sort_island(from.fitness());
    std::vector<int> worst = sort_island(to.fitness());
    for (int i = 0; i < k; ++i) {
        int src = best[i];
        int dst = worst[static_cast<int>(worst.size()) - 1 - i];
        to.install(dst, bits_to_int(from.member(src), from.layout()), from.fitness()[src],
                   from.objective()[src]);
    }
}

}  // namespace ffsga
