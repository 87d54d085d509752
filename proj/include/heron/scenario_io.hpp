#pragma once

#include <string>
#include <vector>

#include "heron/oracle.hpp"
#include "heron/scenario.hpp"
#include "heron/solver.hpp"
#include "heron/vec.hpp"

namespace heron::io {

/// A scenario file: the problem instance plus optional solver / certify /
/// oracle blocks. Parsing materializes every default (including the start
/// point), so serialize(parse(text)) is a normal form and parsing it again
/// is the identity.
struct ScenarioDoc {
    Scenario scenario;
    SolverConfig solver;
    double certify_tol = 1e-6;
    std::vector<Vec> certify_directions;
    OracleConfig oracle;
};

/// Parses the JSON text of a scenario file. Unknown keys, wrong types,
/// missing required fields and dimension mismatches throw
/// std::invalid_argument naming the offending field.
ScenarioDoc parse_scenario(const std::string& text);

ScenarioDoc load_scenario_file(const std::string& path);

std::string serialize_scenario(const ScenarioDoc& doc);

void save_scenario_file(const std::string& path, const ScenarioDoc& doc);

}  // namespace heron::io
