#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "ffsga/errors.hpp"
#include "ffsga/generator.hpp"
#include "ffsga/io.hpp"
#include "ffsga/rng.hpp"
#include "ffsga/solver.hpp"

using namespace ffsga;

namespace {

Instance sample_instance(std::uint64_t seed = 7) {
    GenParams params;
    params.num_jobs = 5;
    params.num_stages = 2;
    params.machines_per_stage = {2, 3};
    params.seed = seed;
    return generate(params);
}

std::filesystem::path temp_file(const std::string& name) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "ffsga_io_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("doubles print in their shortest round trip form") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(0.0) == "0");
    Rng rng(15);
    for (int i = 0; i < 1000; ++i) {
        double value = rng.next_uniform(-1e6, 1e6);
        CHECK(std::stod(format_double(value)) == value);
    }
}

TEST_CASE("direction names cover every enumerator") {
    CHECK(migration_direction_name(MigrationDirection::none) == "none");
    CHECK(migration_direction_name(MigrationDirection::a_to_b) == "a_to_b");
    CHECK(migration_direction_name(MigrationDirection::b_to_a) == "b_to_a");
}

TEST_CASE("instance documents round trip byte for byte") {
    Instance inst = sample_instance();
    Json doc = instance_to_json(inst);
    Instance back = instance_from_json(doc);
    CHECK(instance_to_json(back).dump() == doc.dump());
    CHECK(back.num_jobs == inst.num_jobs);
    CHECK(back.num_stages == inst.num_stages);
    CHECK(back.machines_per_stage == inst.machines_per_stage);
    CHECK(back.proc == inst.proc);
    CHECK(back.release == inst.release);
    CHECK(back.due == inst.due);
    CHECK(back.weight == inst.weight);
    CHECK(back.machines_total == inst.machines_total);
}

TEST_CASE("parse failures name the offending key") {
    Json doc = instance_to_json(sample_instance());

    Json missing = doc;
    missing.erase("num_jobs");
    CHECK_THROWS_WITH_AS(instance_from_json(missing), "instance key 'num_jobs' is missing",
                         ParseError);

    Json wrong_type = doc;
    wrong_type["num_stages"] = "two";
    CHECK_THROWS_WITH_AS(instance_from_json(wrong_type),
                         "instance key 'num_stages' must be an integer", ParseError);

    Json short_machines = doc;
    short_machines["machines_per_stage"] = {2};
    CHECK_THROWS_WITH_AS(instance_from_json(short_machines),
                         "instance key 'machines_per_stage' must have one entry per stage",
                         ParseError);

    Json short_row = doc;
    short_row["proc_time"][3][1].erase(0);
    CHECK_THROWS_WITH_AS(instance_from_json(short_row),
                         "instance key 'proc_time[3][1]' must have one entry per machine",
                         ParseError);

    Json bad_cell = doc;
    bad_cell["proc_time"][1][0][1] = "fast";
    CHECK_THROWS_WITH_AS(instance_from_json(bad_cell),
                         "instance key 'proc_time[1][0]' must be a number", ParseError);

    Json short_release = doc;
    short_release["release"].erase(0);
    CHECK_THROWS_WITH_AS(instance_from_json(short_release),
                         "instance key 'release' must have one entry per job", ParseError);

    Json zero_jobs = doc;
    zero_jobs["num_jobs"] = 0;
    CHECK_THROWS_AS(instance_from_json(zero_jobs), ParseError);

    // semantic violations surface from the instance checks instead
    Json late_release = doc;
    late_release["due"][2] = -50.0;
    CHECK_THROWS_AS(instance_from_json(late_release), ContractError);
    Json one_stage = doc;
    one_stage["num_stages"] = 1;
    one_stage["machines_per_stage"] = {2};
    one_stage["proc_time"] = Json::array();
    for (int j = 0; j < 5; ++j) one_stage["proc_time"].push_back({{1.0, 2.0}});
    CHECK_THROWS_AS(instance_from_json(one_stage), ContractError);
}

TEST_CASE("instances survive a disk round trip unchanged") {
    Instance inst = sample_instance(11);
    std::filesystem::path path = temp_file("roundtrip.json");
    save_instance(inst, path.string());
    Instance back = load_instance(path.string());
    CHECK(instance_to_json(back).dump() == instance_to_json(inst).dump());
    // saving the reloaded instance reproduces the file byte for byte
    std::filesystem::path again = temp_file("roundtrip2.json");
    save_instance(back, again.string());
    CHECK(read_text_file(again.string()) == read_text_file(path.string()));
}

TEST_CASE("file failures name the path") {
    CHECK_THROWS_AS(load_instance("/nonexistent/dir/missing.json"), IoError);
    CHECK_THROWS_AS(read_text_file("/nonexistent/dir/missing.txt"), IoError);
    std::filesystem::path garbled = temp_file("garbled.json");
    write_text_file(garbled.string(), "{ not json ]");
    try {
        load_instance(garbled.string());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find(garbled.string()) != std::string::npos);
    }
}

TEST_CASE("result documents keep a fixed key layout") {
    Instance inst = sample_instance(13);
    RunConfig config;
    config.population = 16;
    config.generations = 10;
    config.migration_gap = 5;
    config.seed = 3;
    config.workers = 2;
    RunResult result = run(config, inst);
    Json doc = result_to_json(result, config);

    std::vector<std::string> top_keys;
    for (const auto& item : doc.items()) top_keys.push_back(item.key());
    CHECK(top_keys == std::vector<std::string>{"schema", "config", "emax", "best", "migrations",
                                               "timings"});
    CHECK(doc["schema"] == "ffsga-result-v1");
    CHECK(doc["config"]["mode"] == "dual");
    CHECK(doc["config"]["population"] == 16);
    // worker count is wall clock detail, it lives only under timings
    CHECK_FALSE(doc["config"].contains("workers"));
    CHECK(doc["timings"]["workers"] == 2);
    CHECK(doc["timings"].contains("concurrent_islands"));
    CHECK_FALSE(doc["config"].contains("grid_width"));
    CHECK(doc["best"]["objective"].get<double>() == result.best_objective);
    CHECK(doc["best"]["chromosome"].size() == static_cast<std::size_t>(inst.num_genes()));
    CHECK(doc["emax"].get<double>() == result.emax);

    config.grid_shape = {4, 2};
    Json shaped = result_to_json(result, config);
    CHECK(shaped["config"]["grid_width"] == 4);
    CHECK(shaped["config"]["grid_height"] == 2);

    // two renders of the same run are byte-identical
    CHECK(result_to_json(result, config).dump(2) == shaped.dump(2));
}

TEST_CASE("trace tables carry one row per generation") {
    RunResult fake;
    fake.trace_combined = {10.5, 9.0, 8.25};
    fake.trace_island_a = {10.5, 9.0, 8.25};
    fake.migrations.push_back({2, 0.8, 1.0 - 0.8, MigrationDirection::b_to_a, 3});
    std::string csv = trace_to_csv(fake);
    CHECK(csv ==
          "generation,best_objective_combined,best_objective_island_a,best_objective_island_b,"
          "migration_flag\n"
          "1,10.5,10.5,,0\n"
          "2,9,9,,1\n"
          "3,8.25,8.25,,0\n");
}

TEST_CASE("trace files end with a newline and use LF only") {
    Instance inst = sample_instance(17);
    RunConfig config;
    config.population = 8;
    config.generations = 4;
    config.seed = 5;
    RunResult result = run(config, inst);
    std::string csv = trace_to_csv(result);
    CHECK(csv.back() == '\n');
    CHECK(csv.find('\r') == std::string::npos);
    // header plus one row per generation
    std::size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 5);
    std::filesystem::path path = temp_file("trace.csv");
    save_trace_csv(result, path.string());
    CHECK(read_text_file(path.string()) == csv);
}

}  // TEST_SUITE
