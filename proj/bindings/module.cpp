#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ffsga/errors.hpp"
#include "ffsga/generator.hpp"
#include "ffsga/io.hpp"
#include "ffsga/model.hpp"
#include "ffsga/solver.hpp"

namespace py = pybind11;

namespace {

std::vector<int> broadcast_machines(std::vector<int> machines, int stages) {
    if (machines.size() == 1 && stages > 1)
        machines.assign(static_cast<std::size_t>(stages), machines[0]);
    return machines;
}

py::dict report_to_dict(const ffsga::ObjectiveReport& report) {
    py::dict out;
    out["objective"] = report.objective;
    out["fitness"] = report.fitness;
    out["makespan"] = report.makespan;
    out["total_tardiness"] = report.total_tardiness;
    out["emax_used"] = report.emax_used;
    return out;
}

py::dict result_to_dict(const ffsga::RunResult& result) {
    py::dict out;
    out["best_objective"] = result.best_objective;
    out["best_fitness"] = result.best_fitness;
    out["best_makespan"] = result.best_makespan;
    out["best_total_tardiness"] = result.best_tardiness;
    out["best_chromosome"] = result.best_chromosome.genes;
    out["emax"] = result.emax;
    out["trace_combined"] = result.trace_combined;
    out["trace_island_a"] = result.trace_island_a;
    out["trace_island_b"] = result.trace_island_b;
    py::list migrations;
    for (const ffsga::MigrationEvent& event : result.migrations) {
        py::dict row;
        row["generation"] = event.generation;
        row["beta"] = event.beta;
        row["alpha"] = event.alpha;
        row["direction"] = ffsga::migration_direction_name(event.direction);
        row["migrants"] = event.migrants;
        migrations.append(row);
    }
    out["migrations"] = migrations;
    py::dict timings;
    timings["total_seconds"] = result.timings.total_seconds;
    timings["island_a_seconds"] = result.timings.island_a_seconds;
    timings["island_b_seconds"] = result.timings.island_b_seconds;
    timings["migration_seconds"] = result.timings.migration_seconds;
    timings["workers"] = result.timings.workers;
    timings["concurrent_islands"] = result.timings.concurrent_islands;
    out["timings"] = timings;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "flexible flow shop scheduling with a dual heterogeneous island GA";

    py::register_exception<ffsga::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ffsga::ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ffsga::IoError>(m, "IoError", PyExc_OSError);

    py::class_<ffsga::Instance>(m, "Instance")
        .def_readonly("num_jobs", &ffsga::Instance::num_jobs)
        .def_readonly("num_stages", &ffsga::Instance::num_stages)
        .def_readonly("machines_per_stage", &ffsga::Instance::machines_per_stage)
        .def_readonly("release", &ffsga::Instance::release)
        .def_readonly("due", &ffsga::Instance::due)
        .def_readonly("weight", &ffsga::Instance::weight)
        .def_property_readonly("num_genes", &ffsga::Instance::num_genes)
        .def("proc_time", &ffsga::Instance::proc_time, py::arg("job"), py::arg("stage"),
             py::arg("machine"))
        .def("__repr__", [](const ffsga::Instance& inst) {
            return "<ffsga.Instance " + std::to_string(inst.num_jobs) + " jobs x " +
                   std::to_string(inst.num_stages) + " stages>";
        });

    m.def(
        "generate_instance",
        [](int jobs, int stages, std::vector<int> machines, double weight, std::uint64_t seed,
           bool integer_times) {
            ffsga::GenParams params;
            params.num_jobs = jobs;
            params.num_stages = stages;
            params.machines_per_stage = broadcast_machines(std::move(machines), stages);
            params.weight = weight;
            params.seed = seed;
            params.integer_times = integer_times;
            return ffsga::generate(params);
        },
        py::arg("jobs") = 300, py::arg("stages") = 4,
        py::arg("machines") = std::vector<int>{2}, py::arg("weight") = 100.0,
        py::arg("seed") = std::uint64_t{1}, py::arg("integer_times") = false,
        "Draw a random instance from the benchmark distributions.");

    m.def("load_instance", &ffsga::load_instance, py::arg("path"));
    m.def("save_instance", &ffsga::save_instance, py::arg("instance"), py::arg("path"));
    m.def("estimate_emax", &ffsga::estimate_emax, py::arg("instance"),
          "Upper bound on the objective used to build non-negative fitness.");
    m.def("mean_total_load", &ffsga::mean_total_load, py::arg("instance"));

    m.def(
        "evaluate_assignment",
        [](const ffsga::Instance& inst, const std::vector<int>& genes, py::object emax) {
            double bound = emax.is_none() ? ffsga::estimate_emax(inst) : emax.cast<double>();
            ffsga::Schedule sched = ffsga::decode(inst, genes);
            return report_to_dict(ffsga::evaluate(inst, sched, bound));
        },
        py::arg("instance"), py::arg("genes"), py::arg("emax") = py::none(),
        "Decode one machine-assignment chromosome and score it.");

    m.def(
        "solve",
        [](const ffsga::Instance& inst, int population, int generations, int gap, double theta,
           const std::string& mode, std::uint64_t seed, int workers, bool serialized,
           double cellular_crossover, double cellular_mutation, double pseudo_crossover) {
            ffsga::RunConfig config;
            config.population = population;
            config.generations = generations;
            config.migration_gap = gap;
            config.theta = theta;
            config.mode = ffsga::parse_run_mode(mode);
            config.seed = seed;
            config.workers = workers;
            config.cellular.crossover_rate = cellular_crossover;
            config.cellular.mutation_rate = cellular_mutation;
            config.pseudo.crossover_rate = pseudo_crossover;
            ffsga::RunResult result;
            {
                py::gil_scoped_release release;
                result = serialized ? ffsga::run_serialized(config, inst)
                                    : ffsga::run(config, inst);
            }
            return result_to_dict(result);
        },
        py::arg("instance"), py::arg("population") = 512, py::arg("generations") = 2000,
        py::arg("gap") = 500, py::arg("theta") = 1.0, py::arg("mode") = "dual",
        py::arg("seed") = std::uint64_t{1}, py::arg("workers") = 1,
        py::arg("serialized") = false, py::arg("cellular_crossover") = 1.0,
        py::arg("cellular_mutation") = 0.05, py::arg("pseudo_crossover") = 0.75,
        "Run the GA and return the result as a dictionary.");
}
