#pragma once

#include <string>

#include "ffsga/instance.hpp"
#include "ffsga/solver.hpp"
#include "json.hpp"

namespace ffsga {

// Key order in emitted documents is fixed, so serialization is
// byte-deterministic for equal inputs.
using Json = nlohmann::ordered_json;

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

std::string migration_direction_name(MigrationDirection direction);

Json instance_to_json(const Instance& inst);
// Structural problems raise ParseError naming the offending key;
// semantic violations surface from Instance::validate.
Instance instance_from_json(const Json& doc);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// Everything except the "timings" object is a pure function of
// (config, instance, seed); consumers strip that one key before
// byte-level comparisons.
Json result_to_json(const RunResult& result, const RunConfig& config);
void save_result_json(const RunResult& result, const RunConfig& config, const std::string& path);

// One row per generation: generation, combined best-so-far objective,
// per-island best-so-far objectives (blank when the island is not
// running), and a flag marking executed migrations. LF line endings.
std::string trace_to_csv(const RunResult& result);
void save_trace_csv(const RunResult& result, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ffsga
