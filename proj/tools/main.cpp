#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ffsga/errors.hpp"
#include "ffsga/generator.hpp"
#include "ffsga/io.hpp"
#include "ffsga/model.hpp"
#include "ffsga/solver.hpp"

namespace {

using ffsga::derive_seed;
using ffsga::format_double;
using ffsga::GenParams;
using ffsga::Instance;
using ffsga::RunConfig;
using ffsga::RunResult;

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

// Unbiased sample variance; 0 for fewer than two samples.
double variance_of(const std::vector<double>& values) {
    if (values.size() < 2) return 0.0;
    double m = mean_of(values);
    double sum = 0.0;
    for (double v : values) sum += (v - m) * (v - m);
    return sum / static_cast<double>(values.size() - 1);
}

// Instance supply for the multi-run commands: either one file-backed
// instance reused for every run, or generator parameters, optionally
// re-seeded per run so each run sees a fresh instance. Run indices keep
// instances matched across the algorithms or settings being compared.
struct InstanceSource {
    std::string path;
    GenParams gen;
    bool vary_per_run = false;

    Instance fixed;  // filled by prepare()

    void prepare() {
        if (!path.empty() && vary_per_run)
            throw ffsga::ConfigError(
                "--vary-instance regenerates instances and cannot be combined with --instance");
        if (!path.empty())
            fixed = ffsga::load_instance(path);
        else if (!vary_per_run)
            fixed = ffsga::generate(gen);
    }
    Instance for_run(int run) const {
        if (!vary_per_run) return fixed;
        GenParams params = gen;
        params.seed = derive_seed(gen.seed, static_cast<std::uint64_t>(run));
        return ffsga::generate(params);
    }
};

void add_generator_flags(CLI::App* cmd, GenParams& gen, const char* seed_name) {
    cmd->add_option("--jobs", gen.num_jobs, "number of jobs")->capture_default_str();
    cmd->add_option("--stages", gen.num_stages, "number of stages")->capture_default_str();
    cmd->add_option("--machines", gen.machines_per_stage,
                    "machines per stage; one value is broadcast to every stage")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--wt", gen.weight, "tardiness weight in the objective")
        ->capture_default_str();
    cmd->add_option(seed_name, gen.seed, "instance generator seed")->capture_default_str();
    cmd->add_flag("--integer-times", gen.integer_times,
                  "round processing times to whole units");
}

void broadcast_machines(GenParams& gen) {
    if (gen.machines_per_stage.size() == 1 && gen.num_stages > 1)
        gen.machines_per_stage.assign(static_cast<std::size_t>(gen.num_stages),
                                      gen.machines_per_stage[0]);
}

void add_run_flags(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--population", config.population, "total population size")
        ->capture_default_str();
    cmd->add_option("--generations", config.generations, "generation budget")
        ->capture_default_str();
    cmd->add_option("--gap", config.migration_gap, "generations between migration checks")
        ->capture_default_str();
    cmd->add_option("--theta", config.theta, "migration threshold in [0, 1]")
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "master GA seed")->capture_default_str();
    cmd->add_option("--workers", config.workers, "data-parallel workers per island")
        ->capture_default_str();
    cmd->add_option("--cellular-crossover", config.cellular.crossover_rate,
                    "cellular island crossover rate")
        ->capture_default_str();
    cmd->add_option("--cellular-mutation", config.cellular.mutation_rate,
                    "cellular island per-gene mutation rate")
        ->capture_default_str();
    cmd->add_option("--pseudo-crossover", config.pseudo.crossover_rate,
                    "pseudo island crossover rate")
        ->capture_default_str();
    cmd->add_flag("--pseudo-fit-from-archive", config.pseudo_fit_from_archive,
                  "feed the migration policy from the pseudo archive instead of the live "
                  "population");
}

void write_table(const std::string& csv, const std::string& out_path) {
    std::fputs(csv.c_str(), stdout);
    if (!out_path.empty()) {
        ffsga::write_text_file(out_path, csv);
        std::printf("wrote %s\n", out_path.c_str());
    }
}

int cmd_generate(const GenParams& gen, const std::string& out_path) {
    Instance inst = ffsga::generate(gen);
    ffsga::save_instance(inst, out_path);
    std::string machines;
    for (int m : inst.machines_per_stage) {
        if (!machines.empty()) machines += ' ';
        machines += std::to_string(m);
    }
    auto [min_due, max_due] = std::minmax_element(inst.due.begin(), inst.due.end());
    std::printf("instance: %d jobs, %d stages, machines %s, weight %s\n", inst.num_jobs,
                inst.num_stages, machines.c_str(), format_double(inst.weight).c_str());
    std::printf("mean total load: %s\n", format_double(ffsga::mean_total_load(inst)).c_str());
    std::printf("due range: [%s, %s]\n", format_double(*min_due).c_str(),
                format_double(*max_due).c_str());
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

int cmd_solve(const std::string& instance_path, RunConfig config, const std::string& mode_name,
              bool serialized, const std::string& out_path, const std::string& trace_path) {
    config.mode = ffsga::parse_run_mode(mode_name);
    Instance inst = ffsga::load_instance(instance_path);
    RunResult result = serialized ? ffsga::run_serialized(config, inst)
                                  : ffsga::run(config, inst);
    ffsga::save_result_json(result, config, out_path);
    if (!trace_path.empty()) ffsga::save_trace_csv(result, trace_path);
    std::printf("best objective: %s (makespan %s, total tardiness %s)\n",
                format_double(result.best_objective).c_str(),
                format_double(result.best_makespan).c_str(),
                format_double(result.best_tardiness).c_str());
    std::printf("migrations executed: %zu\n", result.migrations.size());
    std::printf("total seconds: %s\n", format_double(result.timings.total_seconds).c_str());
    std::printf("wrote %s\n", out_path.c_str());
    if (!trace_path.empty()) std::printf("wrote %s\n", trace_path.c_str());
    return 0;
}

int cmd_sweep_gap(InstanceSource& source, RunConfig config, const std::vector<int>& gaps,
                  int runs, const std::string& out_path) {
    if (gaps.empty()) throw ffsga::ConfigError("--gaps needs at least one value");
    if (runs < 1) throw ffsga::ConfigError("--runs must be at least 1");
    source.prepare();
    const std::uint64_t master = config.seed;
    std::string csv = "gap,mean_objective,std\n";
    for (int gap : gaps) {
        std::vector<double> objectives;
        objectives.reserve(runs);
        for (int r = 0; r < runs; ++r) {
            RunConfig cfg = config;
            cfg.migration_gap = gap;
            cfg.seed = derive_seed(master, static_cast<std::uint64_t>(r));
            objectives.push_back(ffsga::run(cfg, source.for_run(r)).best_objective);
        }
        csv += std::to_string(gap);
        csv += ',';
        csv += format_double(mean_of(objectives));
        csv += ',';
        csv += format_double(std::sqrt(variance_of(objectives)));
        csv += '\n';
    }
    write_table(csv, out_path);
    return 0;
}

int cmd_compare(InstanceSource& source, RunConfig config, int runs,
                const std::string& out_path) {
    if (runs < 2) throw ffsga::ConfigError("--runs must be at least 2 to report a variance");
    source.prepare();
    const std::uint64_t master = config.seed;
    struct Row {
        const char* label;
        ffsga::RunMode mode;
    };
    const Row rows[] = {{"Heterogeneous", ffsga::RunMode::dual},
                        {"Cellular", ffsga::RunMode::cellular_only},
                        {"Pseudo", ffsga::RunMode::pseudo_only}};
    std::string csv = "algorithm,best,average,variance\n";
    for (const Row& row : rows) {
        std::vector<double> objectives;
        objectives.reserve(runs);
        for (int r = 0; r < runs; ++r) {
            RunConfig cfg = config;
            cfg.mode = row.mode;
            cfg.seed = derive_seed(master, static_cast<std::uint64_t>(r));
            objectives.push_back(ffsga::run(cfg, source.for_run(r)).best_objective);
        }
        csv += row.label;
        csv += ',';
        csv += format_double(*std::min_element(objectives.begin(), objectives.end()));
        csv += ',';
        csv += format_double(mean_of(objectives));
        csv += ',';
        csv += format_double(variance_of(objectives));
        csv += '\n';
    }
    write_table(csv, out_path);
    return 0;
}

int cmd_bench_time(InstanceSource& source, RunConfig config,
                   const std::vector<int>& populations, const std::string& out_path) {
    if (populations.empty()) throw ffsga::ConfigError("--populations needs at least one value");
    source.prepare();
    std::string csv = "population,concurrent_seconds,serialized_seconds,speedup\n";
    for (int population : populations) {
        RunConfig cfg = config;
        cfg.population = population;
        Instance inst = source.for_run(0);
        RunResult concurrent = ffsga::run(cfg, inst);
        RunResult serialized = ffsga::run_serialized(cfg, inst);
        if (concurrent.best_objective != serialized.best_objective)
            throw ffsga::ContractError(
                "concurrent and serialized runs disagree; determinism contract broken");
        csv += std::to_string(population);
        csv += ',';
        csv += format_double(concurrent.timings.total_seconds);
        csv += ',';
        csv += format_double(serialized.timings.total_seconds);
        csv += ',';
        csv += format_double(serialized.timings.total_seconds /
                             concurrent.timings.total_seconds);
        csv += '\n';
    }
    write_table(csv, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "flexible flow shop solver: dual heterogeneous island GA with adaptive migration"};
    app.require_subcommand(1);

    // generate
    GenParams gen_params;
    std::string gen_out = "instance.json";
    CLI::App* generate = app.add_subcommand("generate", "write a random instance file");
    add_generator_flags(generate, gen_params, "--seed");
    generate->add_option("--out", gen_out, "output instance path")->capture_default_str();

    // solve
    RunConfig solve_config;
    std::string solve_instance;
    std::string solve_mode = "dual";
    std::string solve_out = "result.json";
    std::string solve_trace;
    bool solve_serialized = false;
    CLI::App* solve = app.add_subcommand("solve", "run one GA configuration on an instance");
    solve->add_option("--instance", solve_instance, "instance JSON path")->required();
    add_run_flags(solve, solve_config);
    solve->add_option("--mode", solve_mode, "dual | cellular | pseudo")->capture_default_str();
    solve->add_flag("--serialized", solve_serialized,
                    "advance islands one after the other instead of concurrently");
    solve->add_option("--out", solve_out, "result JSON path")->capture_default_str();
    solve->add_option("--trace", solve_trace, "per-generation trace CSV path");

    // shared experiment flags
    auto add_source_flags = [](CLI::App* cmd, InstanceSource& source) {
        cmd->add_option("--instance", source.path,
                        "instance JSON path (omit to generate from the flags below)");
        add_generator_flags(cmd, source.gen, "--instance-seed");
        cmd->add_flag("--vary-instance", source.vary_per_run,
                      "regenerate the instance for every run index");
    };

    // sweep-gap
    InstanceSource sweep_source;
    RunConfig sweep_config;
    std::vector<int> sweep_gaps = {10, 50, 100, 200, 400, 500, 800};
    int sweep_runs = 50;
    std::string sweep_out;
    CLI::App* sweep = app.add_subcommand(
        "sweep-gap", "mean final objective as a function of the migration gap");
    add_source_flags(sweep, sweep_source);
    add_run_flags(sweep, sweep_config);
    sweep->add_option("--gaps", sweep_gaps, "migration gaps to sweep")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--runs", sweep_runs, "runs per gap value")->capture_default_str();
    sweep->add_option("--out", sweep_out, "also write the CSV here");

    // compare
    InstanceSource compare_source;
    RunConfig compare_config;
    int compare_runs = 50;
    std::string compare_out;
    CLI::App* compare = app.add_subcommand(
        "compare", "dual vs cellular-only vs pseudo-only quality with matched seeds");
    add_source_flags(compare, compare_source);
    add_run_flags(compare, compare_config);
    compare->add_option("--runs", compare_runs, "runs per algorithm")->capture_default_str();
    compare->add_option("--out", compare_out, "also write the CSV here");

    // bench-time
    InstanceSource bench_source;
    RunConfig bench_config;
    bench_config.generations = 200;  // desk-scale timing default
    std::vector<int> bench_populations = {512, 1024, 2048, 4096};
    std::string bench_out;
    CLI::App* bench = app.add_subcommand(
        "bench-time", "concurrent vs serialized wall-clock across population sizes");
    add_source_flags(bench, bench_source);
    add_run_flags(bench, bench_config);
    bench->add_option("--populations", bench_populations, "population sizes to time")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--out", bench_out, "also write the CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    try {
        if (app.got_subcommand(generate)) {
            broadcast_machines(gen_params);
            return cmd_generate(gen_params, gen_out);
        }
        if (app.got_subcommand(solve))
            return cmd_solve(solve_instance, solve_config, solve_mode, solve_serialized,
                             solve_out, solve_trace);
        if (app.got_subcommand(sweep)) {
            broadcast_machines(sweep_source.gen);
            return cmd_sweep_gap(sweep_source, sweep_config, sweep_gaps, sweep_runs, sweep_out);
        }
        if (app.got_subcommand(compare)) {
            broadcast_machines(compare_source.gen);
            return cmd_compare(compare_source, compare_config, compare_runs, compare_out);
        }
        if (app.got_subcommand(bench)) {
            broadcast_machines(bench_source.gen);
            return cmd_bench_time(bench_source, bench_config, bench_populations, bench_out);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    std::fprintf(stderr, "error: no subcommand selected\n");
    return 2;
}
