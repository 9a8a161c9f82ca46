#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "ffsga/cellular.hpp"
#include "ffsga/errors.hpp"
#include "ffsga/generator.hpp"
#include "ffsga/migration.hpp"
#include "ffsga/model.hpp"
#include "ffsga/pseudo.hpp"

using namespace ffsga;

namespace {

Instance small_instance(std::uint64_t seed = 3) {
    GenParams params;
    params.num_jobs = 6;
    params.num_stages = 2;
    params.machines_per_stage = {2, 2};
    params.seed = seed;
    return generate(params);
}

}  // namespace

TEST_SUITE("migration") {

TEST_CASE("similarity ratio puts the smaller fitness over the larger") {
    CHECK(compute_beta(400.0, 500.0) == 0.8);
    CHECK(compute_beta(500.0, 400.0) == 0.8);
    CHECK(compute_beta(7.0, 7.0) == 1.0);
    CHECK(compute_beta(0.0, 0.0) == 1.0);
    CHECK(compute_beta(0.0, 5.0) == 0.0);
    CHECK(compute_beta(5.0, 0.0) == 0.0);
    CHECK_THROWS_AS(compute_beta(-1.0, 5.0), ContractError);
    CHECK_THROWS_AS(compute_beta(5.0, -0.5), ContractError);
}

TEST_CASE("migration rate is the similarity gap clamped by the threshold") {
    CHECK(compute_alpha(0.8, 1.0) == 1.0 - 0.8);
    CHECK(compute_alpha(0.8, 1.0) == doctest::Approx(0.2));
    CHECK(compute_alpha(1.0, 1.0) == 0.0);
    CHECK(compute_alpha(0.0, 1.0) == 0.0);   // gap 1.0 is not below the threshold
    CHECK(compute_alpha(0.8, 0.1) == 0.0);   // gap 0.2 exceeds a tight threshold
    CHECK(compute_alpha(0.5, 0.5) == 0.0);   // equal to the threshold clamps too
    CHECK(compute_alpha(0.95, 0.1) == doctest::Approx(0.05));
    CHECK(compute_alpha(0.9, 0.0) == 0.0);   // zero threshold disables migration
}

TEST_CASE("the decision sends a fifth of the island when fitness is 400 against 500") {
    MigrationPolicy policy;  // theta 1.0
    MigrationDecision d = decide(400.0, 500.0, policy, 256);
    CHECK(d.beta == 0.8);
    CHECK(d.alpha == 1.0 - 0.8);
    CHECK(d.migrants == 51);  // floor(0.19999.. * 256)
    CHECK(d.direction == MigrationDirection::b_to_a);

    MigrationDecision reversed = decide(500.0, 400.0, policy, 256);
    CHECK(reversed.migrants == 51);
    CHECK(reversed.direction == MigrationDirection::a_to_b);
}

TEST_CASE("equal islands and sub one counts both degenerate to no migration") {
    MigrationPolicy policy;
    MigrationDecision same = decide(7.0, 7.0, policy, 256);
    CHECK(same.beta == 1.0);
    CHECK(same.alpha == 0.0);
    CHECK(same.migrants == 0);
    CHECK(same.direction == MigrationDirection::none);

    // the rate alone would move 0.8 of a member; the floor kills it
    MigrationDecision tiny = decide(400.0, 500.0, policy, 4);
    CHECK(tiny.migrants == 0);
    CHECK(tiny.direction == MigrationDirection::none);

    MigrationPolicy clamped;
    clamped.theta = 0.1;
    MigrationDecision wide = decide(400.0, 500.0, clamped, 256);
    CHECK(wide.migrants == 0);
    CHECK(wide.direction == MigrationDirection::none);

    CHECK_THROWS_AS(decide(1.0, 2.0, policy, 0), ContractError);
    CHECK_THROWS_AS(decide(-1.0, 2.0, policy, 256), ContractError);
}

TEST_CASE("grid to pairs migration copies the best over the worst") {
    Instance inst = small_instance(23);
    double emax = estimate_emax(inst);
    CellGrid grid(inst, emax, 16, CellularParams{}, 101);
    PairPopulation pairs(inst, emax, 16, PseudoParams{}, 202);
    for (int g = 0; g < 5; ++g) grid.step();

    std::vector<double> src_fitness(grid.fitness().begin(), grid.fitness().end());
    std::vector<std::vector<std::uint8_t>> old_members;
    for (int i = 0; i < pairs.size(); ++i) old_members.push_back(pairs.member(i).bits);
    std::vector<double> old_fitness(pairs.fitness().begin(), pairs.fitness().end());

    const int k = 4;
    std::vector<int> best = sort_island(grid.fitness());
    std::vector<int> worst = sort_island(pairs.fitness());
    migrate_cellular_to_pseudo(grid, pairs, k);

    // the source island is untouched
    for (int i = 0; i < grid.size(); ++i) CHECK(grid.fitness()[i] == src_fitness[i]);

    std::set<int> replaced;
    for (int i = 0; i < k; ++i) {
        int src = best[i];
        int dst = worst[static_cast<int>(worst.size()) - 1 - i];
        replaced.insert(dst);
        CHECK(pairs.member(dst).bits == int_to_bits(grid.cell(src), pairs.layout()).bits);
        CHECK(pairs.fitness()[dst] == grid.fitness()[src]);
        CHECK(pairs.objective()[dst] == grid.objective()[src]);
        // the copied caches stay exact under the representation change
        Evaluator eval(inst, emax);
        ObjectiveReport rep = eval.score(bits_to_int(pairs.member(dst), pairs.layout()).genes);
        CHECK(rep.fitness == pairs.fitness()[dst]);
    }
    for (int i = 0; i < pairs.size(); ++i) {
        if (replaced.count(i)) continue;
        CHECK(pairs.member(i).bits == old_members[i]);
        CHECK(pairs.fitness()[i] == old_fitness[i]);
    }
    // the destination archive absorbed the strongest immigrant
    CHECK(pairs.archive_fitness() >= grid.best_fitness());
}

TEST_CASE("pairs to grid migration copies the best over the worst") {
    Instance inst = small_instance(29);
    double emax = estimate_emax(inst);
    CellGrid grid(inst, emax, 16, CellularParams{}, 303);
    PairPopulation pairs(inst, emax, 16, PseudoParams{}, 404);
    for (int g = 0; g < 5; ++g) pairs.step();

    std::vector<std::vector<int>> old_cells;
    for (int i = 0; i < grid.size(); ++i) old_cells.push_back(grid.cell(i).genes);
    std::vector<double> old_fitness(grid.fitness().begin(), grid.fitness().end());
    double old_best = grid.best_fitness();

    const int k = 3;
    std::vector<int> best = sort_island(pairs.fitness());
    std::vector<int> worst = sort_island(grid.fitness());
    migrate_pseudo_to_cellular(pairs, grid, k);

    std::set<int> replaced;
    for (int i = 0; i < k; ++i) {
        int src = best[i];
        int dst = worst[static_cast<int>(worst.size()) - 1 - i];
        replaced.insert(dst);
        CHECK(grid.cell(dst).genes == bits_to_int(pairs.member(src), pairs.layout()).genes);
        CHECK(grid.fitness()[dst] == pairs.fitness()[src]);
        CHECK(grid.objective()[dst] == pairs.objective()[src]);
    }
    for (int i = 0; i < grid.size(); ++i) {
        if (replaced.count(i)) continue;
        CHECK(grid.cell(i).genes == old_cells[i]);
        CHECK(grid.fitness()[i] == old_fitness[i]);
    }
    // immigrants land on the worst slots, so the island best never drops
    CHECK(grid.best_fitness() >= old_best);
    CHECK(grid.best_fitness() >= pairs.best_fitness());
}

TEST_CASE("zero migrants is a no op and oversize counts are rejected") {
    Instance inst = small_instance(31);
    double emax = estimate_emax(inst);
    CellGrid grid(inst, emax, 16, CellularParams{}, 1);
    PairPopulation pairs(inst, emax, 8, PseudoParams{}, 2);

    std::vector<double> grid_fitness(grid.fitness().begin(), grid.fitness().end());
    std::vector<double> pair_fitness(pairs.fitness().begin(), pairs.fitness().end());
    migrate_cellular_to_pseudo(grid, pairs, 0);
    migrate_pseudo_to_cellular(pairs, grid, 0);
    for (int i = 0; i < grid.size(); ++i) CHECK(grid.fitness()[i] == grid_fitness[i]);
    for (int i = 0; i < pairs.size(); ++i) CHECK(pairs.fitness()[i] == pair_fitness[i]);

    CHECK_THROWS_AS(migrate_cellular_to_pseudo(grid, pairs, 9), ContractError);
    CHECK_THROWS_AS(migrate_pseudo_to_cellular(pairs, grid, 9), ContractError);
    CHECK_THROWS_AS(migrate_cellular_to_pseudo(grid, pairs, -1), ContractError);
}

}  // TEST_SUITE
