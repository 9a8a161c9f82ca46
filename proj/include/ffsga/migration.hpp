#pragma once

#include "ffsga/cellular.hpp"
#include "ffsga/pseudo.hpp"

namespace ffsga {

struct MigrationPolicy {
    double theta = 1.0;  // migration threshold, in [0, 1]
    int gap = 500;       // generations between policy evaluations, >= 1
};

enum class MigrationDirection { none, a_to_b, b_to_a };

struct MigrationDecision {
    double beta = 1.0;
    double alpha = 0.0;
    MigrationDirection direction = MigrationDirection::none;
    int migrants = 0;
};

// Fitness similarity of the two islands' champions: the smaller best
// fitness divided by the larger, so beta is always in [0, 1]. Equal
// champions (including both zero) give beta = 1, which disables
// migration downstream.
double compute_beta(double fit_a, double fit_b);

// Migration rate: alpha = 1 - beta when that is strictly below the
// threshold, else 0. theta = 0 therefore disables migration entirely,
// and alpha can never reach 1 (total replacement is impossible).
double compute_alpha(double beta, double theta);

// Full policy: direction flows from the better island to the worse one,
// migrant count is floor(alpha * island_population). A zero count or
// equal champions degenerate to direction none with migrants = 0.
MigrationDecision decide(double fit_a, double fit_b, const MigrationPolicy& policy,
                         int island_population);

// Copy the k fittest members of one island over the k least fit slots of
// the other (best emigrant lands on the worst slot, second best on the
// second worst, and so on per sort_island order). The source island is
// untouched; destination fitness caches are refreshed from the copied
// scores, which stay exact because the representation conversion is a
// lossless round trip.
void migrate_cellular_to_pseudo(const CellGrid& from, PairPopulation& to, int k);
void migrate_pseudo_to_cellular(const PairPopulation& from, CellGrid& to, int k);

}  // namespace ffsga
