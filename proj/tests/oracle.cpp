#include "oracle.hpp"

#include <algorithm>

namespace oracle {

Outcome simulate(const ffsga::Instance& inst, const std::vector<int>& machine_choice) {
    const int jobs = inst.num_jobs;
    const int stages = inst.num_stages;
    std::vector<double> entry = inst.release;  // dispatch key for the current stage
    std::vector<double> ready = inst.release;  // earliest start for the current stage
    std::vector<double> done(jobs, 0.0);
    std::vector<std::vector<double>> machine_free(stages);
    for (int s = 0; s < stages; ++s)
        machine_free[s].assign(inst.machines_per_stage[s], 0.0);

    for (int s = 0; s < stages; ++s) {
        // repeated minimum extraction; the strict < keeps the lowest job
        // index on key ties, matching the dispatch contract
        std::vector<char> dispatched(jobs, 0);
        for (int round = 0; round < jobs; ++round) {
            int pick = -1;
            for (int j = 0; j < jobs; ++j) {
                if (dispatched[j]) continue;
                if (pick == -1 || entry[j] < entry[pick]) pick = j;
            }
            dispatched[pick] = 1;
            int machine = machine_choice[pick * stages + s];
            double start = std::max(ready[pick], machine_free[s][machine]);
            double finish = start + inst.proc_time(pick, s, machine);
            machine_free[s][machine] = finish;
            done[pick] = finish;
        }
        entry = done;
        ready = done;
    }

    Outcome out;
    for (int j = 0; j < jobs; ++j) {
        out.makespan = std::max(out.makespan, done[j]);
        out.total_tardiness += std::max(0.0, done[j] - inst.due[j]);
    }
    out.objective = inst.weight * out.total_tardiness + out.makespan;
    return out;
}

double enumerate_min_objective(const ffsga::Instance& inst) {
    const int genes = inst.num_genes();
    std::vector<int> choice(genes, 0);
    double best = simulate(inst, choice).objective;
    while (true) {
        // mixed-radix odometer over all machine assignments
        int pos = 0;
        while (pos < genes) {
            int radix = inst.machines_per_stage[pos % inst.num_stages];
            if (++choice[pos] < radix) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == genes) break;
        best = std::min(best, simulate(inst, choice).objective);
    }
    return best;
}

}  // namespace oracle
