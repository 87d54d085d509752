#include "heron/scenario_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace heron::io {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument("scenario: " + where + ": " + what);
}

const json& get_field(const json& obj, const std::string& where,
                      const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(where, "must be an object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) {
                known = true;
                break;
            }
        if (!known) fail(where, "unknown field '" + item.key() + "'");
    }
}

double get_number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "must be a number");
    return j.get<double>();
}

std::uint64_t get_positive_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "must be an integer");
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v == 0) fail(where, "must be positive");
        return v;
    }
    const auto v = j.get<std::int64_t>();
    if (v <= 0) fail(where, "must be positive");
    return static_cast<std::uint64_t>(v);
}

Vec get_vec(const json& j, const std::string& where, std::size_t dim) {
    if (!j.is_array()) fail(where, "must be an array of numbers");
    if (j.size() != dim)
        fail(where, "has " + std::to_string(j.size()) +
                        " entries, expected " + std::to_string(dim));
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!j[i].is_number()) fail(where, "must be an array of numbers");
        v[i] = j[i].get<double>();
    }
    return v;
}

ConvexSet parse_set(const json& j, const std::string& where, std::size_t dim) {
    if (!j.is_object()) fail(where, "must be an object");
    const json& kind_j = get_field(j, where, "kind");
    if (!kind_j.is_string()) fail(where, "'kind' must be a string");
    const std::string kind = kind_j.get<std::string>();
    try {
        if (kind == "singleton") {
            check_keys(j, where, {"kind", "point"});
            return ConvexSet::singleton(
                get_vec(get_field(j, where, "point"), where + ".point", dim));
        }
        if (kind == "ball") {
            check_keys(j, where, {"kind", "center", "radius"});
            return ConvexSet::ball(
                get_vec(get_field(j, where, "center"), where + ".center", dim),
                get_number(get_field(j, where, "radius"), where + ".radius"));
        }
        if (kind == "box") {
            check_keys(j, where, {"kind", "center", "half_widths"});
            return ConvexSet::box(
                get_vec(get_field(j, where, "center"), where + ".center", dim),
                get_vec(get_field(j, where, "half_widths"),
                        where + ".half_widths", dim));
        }
        if (kind == "affine") {
            check_keys(j, where, {"kind", "base", "directions"});
            const json& dirs = get_field(j, where, "directions");
            if (!dirs.is_array()) fail(where, "'directions' must be an array");
            std::vector<Vec> spanning;
            for (std::size_t i = 0; i < dirs.size(); ++i)
                spanning.push_back(get_vec(dirs[i],
                                           where + ".directions[" +
                                               std::to_string(i) + "]",
                                           dim));
            return ConvexSet::affine(
                get_vec(get_field(j, where, "base"), where + ".base", dim),
                std::move(spanning));
        }
        if (kind == "halfspace") {
            check_keys(j, where, {"kind", "normal", "offset"});
            return ConvexSet::halfspace(
                get_vec(get_field(j, where, "normal"), where + ".normal", dim),
                get_number(get_field(j, where, "offset"), where + ".offset"));
        }
    } catch (const std::invalid_argument& e) {
        // Re-tag construction failures with the file location.
        const std::string msg = e.what();
        if (msg.rfind("scenario:", 0) == 0) throw;
        fail(where, msg);
    }
    fail(where, "unknown set kind '" + kind + "'");
}

StepSchedule parse_schedule(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "must be an object");
    const json& kind_j = get_field(j, where, "kind");
    if (!kind_j.is_string()) fail(where, "'kind' must be a string");
    const std::string kind = kind_j.get<std::string>();
    if (kind == "harmonic") {
        check_keys(j, where, {"kind", "c"});
        return StepSchedule::harmonic(
            get_number(get_field(j, where, "c"), where + ".c"));
    }
    if (kind == "power") {
        check_keys(j, where, {"kind", "c", "p"});
        return StepSchedule::power(
            get_number(get_field(j, where, "c"), where + ".c"),
            get_number(get_field(j, where, "p"), where + ".p"));
    }
    if (kind == "explicit") {
        check_keys(j, where, {"kind", "alphas"});
        const json& alphas = get_field(j, where, "alphas");
        if (!alphas.is_array()) fail(where, "'alphas' must be an array");
        std::vector<double> steps;
        for (const json& a : alphas)
            steps.push_back(get_number(a, where + ".alphas"));
        return StepSchedule::explicit_list(std::move(steps));
    }
    fail(where, "unknown schedule kind '" + kind + "'");
}

json vec_to_json(const Vec& v) { return json(v.coords()); }

json set_to_json(const ConvexSet& set) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            json j;
            if constexpr (std::is_same_v<T, Singleton>) {
                j["kind"] = "singleton";
                j["point"] = vec_to_json(s.point);
            } else if constexpr (std::is_same_v<T, Ball>) {
                j["kind"] = "ball";
                j["center"] = vec_to_json(s.center);
                j["radius"] = s.radius;
            } else if constexpr (std::is_same_v<T, Box>) {
                j["kind"] = "box";
                j["center"] = vec_to_json(s.center);
                j["half_widths"] = vec_to_json(s.half_widths);
            } else if constexpr (std::is_same_v<T, Affine>) {
                j["kind"] = "affine";
                j["base"] = vec_to_json(s.base);
                j["directions"] = json::array();
                for (const Vec& d : s.directions)
                    j["directions"].push_back(vec_to_json(d));
            } else {
                j["kind"] = "halfspace";
                j["normal"] = vec_to_json(s.normal);
                j["offset"] = s.offset;
            }
            return j;
        },
        set.variant());
}

json schedule_to_json(const StepSchedule& s) {
    json j;
    switch (s.kind()) {
        case StepSchedule::Kind::harmonic:
            j["kind"] = "harmonic";
            j["c"] = s.c();
            break;
        case StepSchedule::Kind::power:
            j["kind"] = "power";
            j["c"] = s.c();
            j["p"] = s.p();
            break;
        case StepSchedule::Kind::explicit_list:
            j["kind"] = "explicit";
            j["alphas"] = json(s.alphas());
            break;
    }
    return j;
}

}  // namespace

ScenarioDoc parse_scenario(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario: not valid JSON: ") +
                                    e.what());
    }
    check_keys(root, "top level",
               {"dim", "constraint", "targets", "solver", "certify", "oracle"});

    const std::size_t dim = static_cast<std::size_t>(
        get_positive_int(get_field(root, "top level", "dim"), "dim"));

    ConvexSet constraint =
        parse_set(get_field(root, "top level", "constraint"), "constraint",
                  dim);
    const json& targets_j = get_field(root, "top level", "targets");
    if (!targets_j.is_array() || targets_j.empty())
        fail("targets", "must be a nonempty array");
    std::vector<ConvexSet> targets;
    for (std::size_t i = 0; i < targets_j.size(); ++i)
        targets.push_back(parse_set(
            targets_j[i], "targets[" + std::to_string(i) + "]", dim));

    Scenario scenario =
        Scenario::make(std::move(constraint), std::move(targets));

    SolverConfig solver;
    if (root.contains("solver")) {
        const json& s = root["solver"];
        check_keys(s, "solver",
                   {"schedule", "max_iters", "start", "trace_stride",
                    "stagnation_window", "ball_boundary_steps"});
        if (s.contains("schedule"))
            solver.schedule = parse_schedule(s["schedule"], "solver.schedule");
        if (s.contains("max_iters"))
            solver.max_iters =
                get_positive_int(s["max_iters"], "solver.max_iters");
        if (s.contains("start"))
            solver.start = get_vec(s["start"], "solver.start", dim);
        if (s.contains("trace_stride"))
            solver.trace_stride =
                get_positive_int(s["trace_stride"], "solver.trace_stride");
        if (s.contains("stagnation_window"))
            solver.stagnation_window = get_positive_int(
                s["stagnation_window"], "solver.stagnation_window");
        if (s.contains("ball_boundary_steps")) {
            if (!s["ball_boundary_steps"].is_boolean())
                fail("solver.ball_boundary_steps", "must be a boolean");
            solver.ball_boundary_steps = s["ball_boundary_steps"].get<bool>();
        }
    }
    if (solver.start.empty()) solver.start = default_start(scenario);

    double certify_tol = 1e-6;
    std::vector<Vec> certify_directions;
    if (root.contains("certify")) {
        const json& c = root["certify"];
        check_keys(c, "certify", {"tolerance", "directions"});
        if (c.contains("tolerance")) {
            certify_tol = get_number(c["tolerance"], "certify.tolerance");
            if (certify_tol <= 0.0) fail("certify.tolerance", "must be positive");
        }
        if (c.contains("directions")) {
            if (!c["directions"].is_array())
                fail("certify.directions", "must be an array");
            for (std::size_t i = 0; i < c["directions"].size(); ++i)
                certify_directions.push_back(get_vec(
                    c["directions"][i],
                    "certify.directions[" + std::to_string(i) + "]", dim));
        }
    }

    OracleConfig oracle;
    if (root.contains("oracle")) {
        const json& o = root["oracle"];
        check_keys(o, "oracle",
                   {"grid_points_per_axis", "refinement_rounds",
                    "bounding_box"});
        if (o.contains("grid_points_per_axis"))
            oracle.grid_points_per_axis = static_cast<std::size_t>(
                get_positive_int(o["grid_points_per_axis"],
                                 "oracle.grid_points_per_axis"));
        if (o.contains("refinement_rounds")) {
            const json& r = o["refinement_rounds"];
            if (!r.is_number_integer())
                fail("oracle.refinement_rounds", "must be an integer");
            if (r.get<std::int64_t>() < 0)
                fail("oracle.refinement_rounds", "must be nonnegative");
            oracle.refinement_rounds =
                static_cast<std::size_t>(r.get<std::int64_t>());
        }
        if (o.contains("bounding_box")) {
            const json& b = o["bounding_box"];
            check_keys(b, "oracle.bounding_box", {"lo", "hi"});
            oracle.bounding_box = BoundingBox{
                get_vec(get_field(b, "oracle.bounding_box", "lo"),
                        "oracle.bounding_box.lo", dim),
                get_vec(get_field(b, "oracle.bounding_box", "hi"),
                        "oracle.bounding_box.hi", dim)};
        }
    }

    return ScenarioDoc{std::move(scenario), std::move(solver), certify_tol,
                       std::move(certify_directions), std::move(oracle)};
}

ScenarioDoc load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const ScenarioDoc& doc) {
    json root;
    root["dim"] = doc.scenario.dim();
    root["constraint"] = set_to_json(doc.scenario.constraint);
    root["targets"] = json::array();
    for (const ConvexSet& t : doc.scenario.targets)
        root["targets"].push_back(set_to_json(t));

    json solver;
    solver["schedule"] = schedule_to_json(doc.solver.schedule);
    solver["max_iters"] = doc.solver.max_iters;
    solver["start"] = vec_to_json(doc.solver.start);
    solver["trace_stride"] = doc.solver.trace_stride;
    if (doc.solver.stagnation_window)
        solver["stagnation_window"] = *doc.solver.stagnation_window;
    if (doc.solver.ball_boundary_steps) solver["ball_boundary_steps"] = true;
    root["solver"] = std::move(solver);

    json certify;
    certify["tolerance"] = doc.certify_tol;
    certify["directions"] = json::array();
    for (const Vec& d : doc.certify_directions)
        certify["directions"].push_back(vec_to_json(d));
    root["certify"] = std::move(certify);

    json oracle;
    oracle["grid_points_per_axis"] = doc.oracle.grid_points_per_axis;
    oracle["refinement_rounds"] = doc.oracle.refinement_rounds;
    if (doc.oracle.bounding_box) {
        json b;
        b["lo"] = vec_to_json(doc.oracle.bounding_box->lo);
        b["hi"] = vec_to_json(doc.oracle.bounding_box->hi);
        oracle["bounding_box"] = std::move(b);
    }
    root["oracle"] = std::move(oracle);

    return root.dump(2) + "\n";
}

void save_scenario_file(const std::string& path, const ScenarioDoc& doc) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << serialize_scenario(doc);
}

}  // namespace heron::io
