#include "ffsga/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ffsga/errors.hpp"

namespace ffsga {

std::string format_double(double value) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc())
        throw ContractError("format_double: value does not fit the buffer");
    return std::string(buffer, end);
}

std::string migration_direction_name(MigrationDirection direction) {
    switch (direction) {
        case MigrationDirection::none: return "none";
        case MigrationDirection::a_to_b: return "a_to_b";
        case MigrationDirection::b_to_a: return "b_to_a";
    }
    throw ContractError("migration_direction_name: invalid direction value");
}

namespace {

const Json& require_key(const Json& doc, const char* key) {
    if (!doc.contains(key))
        throw ParseError(std::string("instance key '") + key + "' is missing");
    return doc.at(key);
}

int require_count(const Json& doc, const char* key) {
    const Json& node = require_key(doc, key);
    if (!node.is_number_integer() && !node.is_number_unsigned())
        throw ParseError(std::string("instance key '") + key + "' must be an integer");
    return node.get<int>();
}

double require_number(const Json& node, const std::string& key) {
    if (!node.is_number())
        throw ParseError("instance key '" + key + "' must be a number");
    return node.get<double>();
}

const Json& require_array(const Json& doc, const char* key, std::size_t size,
                          const char* size_hint) {
    const Json& node = require_key(doc, key);
    if (!node.is_array())
        throw ParseError(std::string("instance key '") + key + "' must be an array");
    if (node.size() != size)
        throw ParseError(std::string("instance key '") + key + "' must have one entry per " +
                         size_hint);
    return node;
}

}  // namespace

Json instance_to_json(const Instance& inst) {
    Json doc;
    doc["num_jobs"] = inst.num_jobs;
    doc["num_stages"] = inst.num_stages;
    doc["machines_per_stage"] = inst.machines_per_stage;
    Json jobs = Json::array();
    for (int j = 0; j < inst.num_jobs; ++j) {
        Json stages = Json::array();
        for (int s = 0; s < inst.num_stages; ++s) {
            Json machines = Json::array();
            for (int m = 0; m < inst.machines_per_stage[s]; ++m)
                machines.push_back(inst.proc_time(j, s, m));
            stages.push_back(std::move(machines));
        }
        jobs.push_back(std::move(stages));
    }
    doc["proc_time"] = std::move(jobs);
    doc["release"] = inst.release;
    doc["due"] = inst.due;
    doc["weight"] = inst.weight;
    return doc;
}

Instance instance_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
    Instance inst;
    inst.num_jobs = require_count(doc, "num_jobs");
    inst.num_stages = require_count(doc, "num_stages");
    if (inst.num_jobs < 1) throw ParseError("instance key 'num_jobs' must be positive");
    if (inst.num_stages < 1) throw ParseError("instance key 'num_stages' must be positive");

    const Json& machines = require_array(doc, "machines_per_stage",
                                         static_cast<std::size_t>(inst.num_stages), "stage");
    for (std::size_t s = 0; s < machines.size(); ++s) {
        const Json& node = machines[s];
        if (!node.is_number_integer() && !node.is_number_unsigned())
            throw ParseError("instance key 'machines_per_stage' must hold integers");
        inst.machines_per_stage.push_back(node.get<int>());
        if (inst.machines_per_stage.back() < 1)
            throw ParseError("instance key 'machines_per_stage' must hold positive counts");
    }

    const Json& proc = require_array(doc, "proc_time", static_cast<std::size_t>(inst.num_jobs),
                                     "job");
    for (int j = 0; j < inst.num_jobs; ++j) {
        const Json& stages = proc[static_cast<std::size_t>(j)];
        std::string job_key = "proc_time[" + std::to_string(j) + "]";
        if (!stages.is_array() || stages.size() != static_cast<std::size_t>(inst.num_stages))
            throw ParseError("instance key '" + job_key + "' must have one entry per stage");
        for (int s = 0; s < inst.num_stages; ++s) {
            const Json& row = stages[static_cast<std::size_t>(s)];
            std::string stage_key = job_key + "[" + std::to_string(s) + "]";
            if (!row.is_array() ||
                row.size() != static_cast<std::size_t>(inst.machines_per_stage[s]))
                throw ParseError("instance key '" + stage_key +
                                 "' must have one entry per machine");
            for (const Json& cell : row) inst.proc.push_back(require_number(cell, stage_key));
        }
    }

    const Json& release = require_array(doc, "release", static_cast<std::size_t>(inst.num_jobs),
                                        "job");
    for (const Json& cell : release) inst.release.push_back(require_number(cell, "release"));
    const Json& due = require_array(doc, "due", static_cast<std::size_t>(inst.num_jobs), "job");
    for (const Json& cell : due) inst.due.push_back(require_number(cell, "due"));
    inst.weight = require_number(require_key(doc, "weight"), "weight");

    inst.finalize();
    inst.validate();
    return inst;
}

Instance load_instance(const std::string& path) {
    Json doc;
    try {
        doc = Json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("instance file '" + path + "' is not valid JSON: " + e.what());
    }
    return instance_from_json(doc);
}

void save_instance(const Instance& inst, const std::string& path) {
    write_text_file(path, instance_to_json(inst).dump(2) + "\n");
}

Json result_to_json(const RunResult& result, const RunConfig& config) {
    Json doc;
    doc["schema"] = "ffsga-result-v1";

    Json cfg;
    cfg["mode"] = run_mode_name(config.mode);
    cfg["population"] = config.population;
    cfg["generations"] = config.generations;
    cfg["migration_gap"] = config.migration_gap;
    cfg["theta"] = config.theta;
    cfg["seed"] = config.seed;
    cfg["cellular_crossover_rate"] = config.cellular.crossover_rate;
    cfg["cellular_mutation_rate"] = config.cellular.mutation_rate;
    cfg["cellular_neighborhood_radius"] = config.cellular.neighborhood_radius;
    cfg["pseudo_crossover_rate"] = config.pseudo.crossover_rate;
    cfg["pseudo_fit_from_archive"] = config.pseudo_fit_from_archive;
    if (config.grid_shape) {
        cfg["grid_width"] = config.grid_shape->first;
        cfg["grid_height"] = config.grid_shape->second;
    }
    doc["config"] = std::move(cfg);

    doc["emax"] = result.emax;
    Json best;
    best["objective"] = result.best_objective;
    best["fitness"] = result.best_fitness;
    best["makespan"] = result.best_makespan;
    best["total_tardiness"] = result.best_tardiness;
    best["chromosome"] = result.best_chromosome.genes;
    doc["best"] = std::move(best);

    Json migrations = Json::array();
    for (const MigrationEvent& event : result.migrations) {
        Json row;
        row["generation"] = event.generation;
        row["beta"] = event.beta;
        row["alpha"] = event.alpha;
        row["direction"] = migration_direction_name(event.direction);
        row["migrants"] = event.migrants;
        migrations.push_back(std::move(row));
    }
    doc["migrations"] = std::move(migrations);

    Json timings;
    timings["total_seconds"] = result.timings.total_seconds;
    timings["island_a_seconds"] = result.timings.island_a_seconds;
    timings["island_b_seconds"] = result.timings.island_b_seconds;
    timings["migration_seconds"] = result.timings.migration_seconds;
    timings["workers"] = result.timings.workers;
    timings["concurrent_islands"] = result.timings.concurrent_islands;
    doc["timings"] = std::move(timings);
    return doc;
}

void save_result_json(const RunResult& result, const RunConfig& config, const std::string& path) {
    write_text_file(path, result_to_json(result, config).dump(2) + "\n");
}

std::string trace_to_csv(const RunResult& result) {
    std::size_t budget = result.trace_combined.size();
    std::vector<char> migrated(budget, 0);
    for (const MigrationEvent& event : result.migrations)
        if (event.generation >= 1 && event.generation <= budget)
            migrated[event.generation - 1] = 1;

    std::string csv =
        "generation,best_objective_combined,best_objective_island_a,best_objective_island_b,"
        "migration_flag\n";
    for (std::size_t g = 0; g < budget; ++g) {
        csv += std::to_string(g + 1);
        csv += ',';
        csv += format_double(result.trace_combined[g]);
        csv += ',';
        if (g < result.trace_island_a.size()) csv += format_double(result.trace_island_a[g]);
        csv += ',';
        if (g < result.trace_island_b.size()) csv += format_double(result.trace_island_b[g]);
        csv += ',';
        csv += migrated[g] ? '1' : '0';
        csv += '\n';
    }
    return csv;
}

void save_trace_csv(const RunResult& result, const std::string& path) {
    write_text_file(path, trace_to_csv(result));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed while reading '" + path + "'");
    return std::move(buffer).str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace ffsga
