#include "ffsga/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ffsga/errors.hpp"

namespace ffsga {

void Instance::finalize() {
    stage_offset.assign(machines_per_stage.size() + 1, 0);
    for (std::size_t s = 0; s < machines_per_stage.size(); ++s)
        stage_offset[s + 1] = stage_offset[s] + machines_per_stage[s];
    machines_total = stage_offset.empty() ? 0 : stage_offset.back();
}

void Instance::validate() const {
    if (num_jobs < 1) throw ContractError("instance: num_jobs must be >= 1");
    if (num_stages < 2) throw ContractError("instance: num_stages must be >= 2");
    if (static_cast<int>(machines_per_stage.size()) != num_stages)
        throw ContractError("instance: machines_per_stage length must equal num_stages");
    bool any_parallel = false;
    for (int m : machines_per_stage) {
        if (m < 1) throw ContractError("instance: every stage needs at least one machine");
        if (m >= 2) any_parallel = true;
    }
    if (!any_parallel)
        throw ContractError("instance: at least one stage must have more than one machine");
    if (static_cast<int>(stage_offset.size()) != num_stages + 1 ||
        machines_total != std::accumulate(machines_per_stage.begin(), machines_per_stage.end(), 0))
        throw ContractError("instance: layout helpers stale, call finalize()");
    if (static_cast<int>(proc.size()) != num_jobs * machines_total)
        throw ContractError("instance: proc_time size mismatch");
    for (double p : proc)
        if (!(p > 0.0)) throw ContractError("instance: processing times must be positive");
    if (static_cast<int>(release.size()) != num_jobs)
        throw ContractError("instance: release length must equal num_jobs");
    if (static_cast<int>(due.size()) != num_jobs)
        throw ContractError("instance: due length must equal num_jobs");
    for (int j = 0; j < num_jobs; ++j) {
        if (!(release[j] >= 0.0)) throw ContractError("instance: release times must be >= 0");
        if (!(due[j] >= release[j]))
            throw ContractError("instance: due time before release of job " + std::to_string(j));
    }
    if (!(weight >= 0.0)) throw ContractError("instance: weight must be >= 0");
}

GeneCoords gene_index_map(int gene, int num_stages, int num_jobs) {
    if (num_stages < 1) throw ContractError("gene_index_map: num_stages must be >= 1");
    if (gene < 0 || gene >= num_jobs * num_stages)
        throw ContractError("gene_index_map: gene index out of range");
    return {gene / num_stages, gene % num_stages};
}

namespace {

// Shared core of decode() and Evaluator::score(). Dispatches stage by
// stage; `order` and the time buffers are caller-provided scratch.
// When sched is null only completion times are produced (into ready).
void run_list_schedule(const Instance& inst, std::span<const int> assignment,
                       std::span<const int> stage0_order, std::vector<int>& order,
                       std::vector<double>& ready, std::vector<double>& avail,
                       Schedule* sched) {
    const int jobs = inst.num_jobs;
    const int stages = inst.num_stages;
    for (int j = 0; j < jobs; ++j) ready[j] = inst.release[j];
    for (int s = 0; s < stages; ++s) {
        if (s == 0) {
            order.assign(stage0_order.begin(), stage0_order.end());
        } else {
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&ready](int a, int b) {
                return ready[a] < ready[b] || (ready[a] == ready[b] && a < b);
            });
        }
        const int machines = inst.machines_per_stage[s];
        avail.assign(machines, 0.0);
        for (int j : order) {
            int m = assignment[j * stages + s];
            if (m < 0 || m >= machines)
                throw ContractError("decode: machine index out of range at job " +
                                    std::to_string(j) + " stage " + std::to_string(s));
            double start = std::max(ready[j], avail[m]);
            double completion = start + inst.proc_time(j, s, m);
            avail[m] = completion;
            ready[j] = completion;
            if (sched) {
                int idx = sched->at(j, s);
                sched->machine[idx] = m;
                sched->start[idx] = start;
                sched->completion[idx] = completion;
            }
        }
    }
}

std::vector<int> release_order(const Instance& inst) {
    std::vector<int> order(inst.num_jobs);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&inst](int a, int b) {
        return inst.release[a] < inst.release[b] || (inst.release[a] == inst.release[b] && a < b);
    });
    return order;
}

ObjectiveReport report_from_completions(const Instance& inst,
                                        const std::vector<double>& last_completion,
                                        double emax) {
    ObjectiveReport rep;
    rep.emax_used = emax;
    for (int j = 0; j < inst.num_jobs; ++j) {
        double c = last_completion[j];
        rep.makespan = std::max(rep.makespan, c);
        rep.total_tardiness += std::max(0.0, c - inst.due[j]);
    }
    rep.objective = inst.weight * rep.total_tardiness + rep.makespan;
    rep.fitness = std::max(emax - rep.objective, 0.0);
    return rep;
}

}  // namespace

Schedule decode(const Instance& inst, std::span<const int> assignment) {
    if (static_cast<int>(assignment.size()) != inst.num_genes())
        throw ContractError("decode: assignment length must be num_jobs * num_stages");
    Schedule sched;
    sched.num_jobs = inst.num_jobs;
    sched.num_stages = inst.num_stages;
    sched.machine.assign(inst.num_genes(), 0);
    sched.start.assign(inst.num_genes(), 0.0);
    sched.completion.assign(inst.num_genes(), 0.0);

    std::vector<int> order(inst.num_jobs);
    std::vector<double> ready(inst.num_jobs);
    std::vector<double> avail;
    run_list_schedule(inst, assignment, release_order(inst), order, ready, avail, &sched);
    return sched;
}

ObjectiveReport evaluate(const Instance& inst, const Schedule& sched, double emax) {
    if (sched.num_jobs != inst.num_jobs || sched.num_stages != inst.num_stages)
        throw ContractError("evaluate: schedule shape does not match instance");
    if (!(emax >= 0.0)) throw ContractError("evaluate: emax must be >= 0");
    std::vector<double> last(inst.num_jobs);
    for (int j = 0; j < inst.num_jobs; ++j)
        last[j] = sched.completion[sched.at(j, inst.num_stages - 1)];
    return report_from_completions(inst, last, emax);
}

double mean_job_load(const Instance& inst, int job) {
    double total = 0.0;
    for (int s = 0; s < inst.num_stages; ++s) {
        double sum = 0.0;
        for (int m = 0; m < inst.machines_per_stage[s]; ++m) sum += inst.proc_time(job, s, m);
        total += sum / inst.machines_per_stage[s];
    }
    return total;
}

double mean_total_load(const Instance& inst) {
    double total = 0.0;
    for (int j = 0; j < inst.num_jobs; ++j) total += mean_job_load(inst, j);
    return total;
}

double estimate_emax(const Instance& inst) {
    double horizon = 0.0;
    for (int j = 0; j < inst.num_jobs; ++j) horizon = std::max(horizon, inst.release[j]);
    for (int j = 0; j < inst.num_jobs; ++j)
        for (int s = 0; s < inst.num_stages; ++s) {
            double worst = 0.0;
            for (int m = 0; m < inst.machines_per_stage[s]; ++m)
                worst = std::max(worst, inst.proc_time(j, s, m));
            horizon += worst;
        }
    double tardiness_bound = 0.0;
    for (int j = 0; j < inst.num_jobs; ++j)
        tardiness_bound += std::max(0.0, horizon - inst.due[j]);
    return inst.weight * tardiness_bound + horizon;
}

Evaluator::Evaluator(const Instance& inst, double emax)
    : inst_(&inst),
      emax_(emax),
      stage0_order_(release_order(inst)),
      order_(inst.num_jobs),
      ready_(inst.num_jobs) {
    avail_.reserve(*std::max_element(inst.machines_per_stage.begin(), inst.machines_per_stage.end()));
}

ObjectiveReport Evaluator::score(std::span<const int> assignment) {
    run_list_schedule(*inst_, assignment, stage0_order_, order_, ready_, avail_, nullptr);
    return report_from_completions(*inst_, ready_, emax_);
}

}  // namespace ffsga
