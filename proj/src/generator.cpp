#include "ffsga/generator.hpp"

#include <cmath>

#include "ffsga/errors.hpp"
#include "ffsga/model.hpp"
#include "ffsga/rng.hpp"

namespace ffsga {

Instance generate(const GenParams& params) {
    if (params.num_jobs < 1) throw ConfigError("generate: num_jobs must be >= 1");
    if (params.num_stages < 2) throw ConfigError("generate: num_stages must be >= 2");
    if (static_cast<int>(params.machines_per_stage.size()) != params.num_stages)
        throw ConfigError("generate: machines_per_stage length must equal num_stages");
    if (!(params.weight >= 0.0)) throw ConfigError("generate: weight must be >= 0");

    Instance inst;
    inst.num_jobs = params.num_jobs;
    inst.num_stages = params.num_stages;
    inst.machines_per_stage = params.machines_per_stage;
    inst.weight = params.weight;
    inst.finalize();

    Rng rng(params.seed);
    inst.proc.resize(static_cast<std::size_t>(inst.num_jobs) * inst.machines_total);
    for (int j = 0; j < inst.num_jobs; ++j)
        for (int s = 0; s < inst.num_stages; ++s)
            for (int m = 0; m < inst.machines_per_stage[s]; ++m) {
                double p = rng.next_uniform(1.0, 5.0);
                if (params.integer_times) p = std::round(p);
                inst.proc[inst.proc_index(j, s, m)] = p;
            }

    double total_load = mean_total_load(inst);
    inst.release.resize(inst.num_jobs);
    for (int j = 0; j < inst.num_jobs; ++j)
        inst.release[j] = rng.next_uniform(0.0, total_load);

    inst.due.resize(inst.num_jobs);
    for (int j = 0; j < inst.num_jobs; ++j) {
        double slack = rng.next_uniform(0.0, 2.0);
        inst.due[j] = inst.release[j] + mean_job_load(inst, j) * (1.0 + slack);
    }

    inst.validate();
    return inst;
}

}  // namespace ffsga
