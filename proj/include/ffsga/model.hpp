#pragma once

#include <span>
#include <vector>

#include "ffsga/instance.hpp"

namespace ffsga {

// Decoded timetable: per (job, stage) the chosen machine and the
// non-preemptive processing window on it.
struct Schedule {
    int num_jobs = 0;
    int num_stages = 0;
    std::vector<int> machine;      // flattened [job][stage]
    std::vector<double> start;     // flattened [job][stage]
    std::vector<double> completion;

    int at(int job, int stage) const { return job * num_stages + stage; }
};

struct ObjectiveReport {
    double makespan = 0.0;
    double total_tardiness = 0.0;
    double objective = 0.0;  // weight * total_tardiness + makespan
    double fitness = 0.0;    // max(emax - objective, 0)
    double emax_used = 0.0;
};

struct GeneCoords {
    int job;
    int stage;
};

// Chromosome position i covers job i / S at stage i mod S (job-major).
GeneCoords gene_index_map(int gene, int num_stages, int num_jobs);

// Stage-wise list scheduling. assignment[j*S + s] picks the machine of
// job j at stage s. Jobs enter stage 0 in release order and every later
// stage in the order they left the previous one (ties: lower job index),
// each starting as soon as both the job and its machine are free.
Schedule decode(const Instance& inst, std::span<const int> assignment);

ObjectiveReport evaluate(const Instance& inst, const Schedule& sched, double emax);

// Upper bound on the objective: H = max release + total worst-case work,
// so every decodable assignment keeps a strictly positive fitness.
double estimate_emax(const Instance& inst);

// Per-job mean stage load (machine-averaged processing times) and their
// total; also what the instance generator feeds into release/due draws.
double mean_job_load(const Instance& inst, int job);
double mean_total_load(const Instance& inst);

// decode + evaluate with reusable scratch buffers. One per worker thread;
// results are identical to the standalone functions.
class Evaluator {
  public:
    Evaluator(const Instance& inst, double emax);

    ObjectiveReport score(std::span<const int> assignment);

  private:
    const Instance* inst_;
    double emax_;
    std::vector<int> stage0_order_;  // job indices sorted by release
    std::vector<int> order_;
    std::vector<double> ready_;
    std::vector<double> avail_;
};

}  // namespace ffsga
