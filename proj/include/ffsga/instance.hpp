#pragma once

#include <cstdint>
#include <vector>

namespace ffsga {

// One flexible flow shop problem. Every job passes all stages in order;
// each stage offers machines_per_stage[s] parallel machines and the job
// runs on exactly one of them. Processing times are stored flat as
// [job][stage][machine] with per-stage machine counts.
struct Instance {
    int num_jobs = 0;
    int num_stages = 0;
    std::vector<int> machines_per_stage;
    std::vector<double> proc;     // flattened, see proc_index()
    std::vector<double> release;  // length num_jobs
    std::vector<double> due;      // length num_jobs
    double weight = 100.0;        // tardiness priority in the objective

    // layout helpers, filled by finalize()
    std::vector<int> stage_offset;  // prefix sums of machines_per_stage
    int machines_total = 0;         // sum of machines_per_stage

    int proc_index(int job, int stage, int machine) const {
        return job * machines_total + stage_offset[stage] + machine;
    }
    double proc_time(int job, int stage, int machine) const {
        return proc[proc_index(job, stage, machine)];
    }
    int num_genes() const { return num_jobs * num_stages; }

    // Recomputes the layout helpers after the public fields are set.
    void finalize();
    // Throws ContractError if any structural invariant is violated.
    void validate() const;
};

// Parameters for the random instance generator.
struct GenParams {
    int num_jobs = 300;
    int num_stages = 4;
    std::vector<int> machines_per_stage = {2, 2, 2, 2};
    double weight = 100.0;
    std::uint64_t seed = 1;
    bool integer_times = false;  // round processing times to whole units
};

}  // namespace ffsga
