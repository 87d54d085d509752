#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heron/certify.hpp"
#include "heron/oracle.hpp"
#include "heron/scenario_io.hpp"
#include "heron/solver.hpp"
#include "heron/svg.hpp"

namespace {

using heron::Scenario;
using heron::Vec;

std::string fmt(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::string fmt(const Vec& v, int precision) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i > 0) out += ", ";
        out += fmt(v[i], precision);
    }
    out += ")";
    return out;
}

double parse_number(const std::string& s, const std::string& what) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(what + ": bad number '" + s + "'");
    return v;
}

Vec parse_point(const std::string& spec) {
    std::vector<double> coords;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = spec.find(',', pos);
        const std::string cell = comma == std::string::npos
                                     ? spec.substr(pos)
                                     : spec.substr(pos, comma - pos);
        coords.push_back(parse_number(cell, "--at"));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Vec(std::move(coords));
}

heron::StepSchedule parse_step(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string rest =
        colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "harmonic") {
        if (rest.empty())
            throw std::invalid_argument("--step harmonic:c needs a constant");
        return heron::StepSchedule::harmonic(parse_number(rest, "--step"));
    }
    if (kind == "power") {
        const std::size_t comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument(
                "--step power:c,p needs two constants");
        return heron::StepSchedule::power(
            parse_number(rest.substr(0, comma), "--step"),
            parse_number(rest.substr(comma + 1), "--step"));
    }
    throw std::invalid_argument(
        "--step must be harmonic:c or power:c,p, got '" + spec + "'");
}

// Orthonormal basis of the orthogonal complement of u, via Gram-Schmidt
// over the standard basis. Used to generate tangent directions on a ball
// boundary.
std::vector<Vec> orthogonal_complement(const Vec& u) {
    std::vector<Vec> basis{u};
    for (std::size_t j = 0; j < u.dim(); ++j) {
        Vec r(u.dim());
        r[j] = 1.0;
        for (const Vec& b : basis) r -= dot(r, b) * b;
        const double n = norm(r);
        if (n < 1e-10) continue;
        r /= n;
        basis.push_back(std::move(r));
    }
    basis.erase(basis.begin());
    return basis;
}

// Unit normal of a codimension-one affine constraint, if that is what the
// constraint is.
std::optional<Vec> affine_normal(const heron::ConvexSet& set) {
    const auto* aff = std::get_if<heron::Affine>(&set.variant());
    if (aff == nullptr || aff->directions.empty() ||
        aff->directions.size() + 1 != set.dim())
        return std::nullopt;
    Vec best(set.dim());
    double best_norm = 0.0;
    for (std::size_t j = 0; j < set.dim(); ++j) {
        Vec r(set.dim());
        r[j] = 1.0;
        for (const Vec& d : aff->directions) r -= dot(r, d) * d;
        const double n = norm(r);
        if (n > best_norm) {
            best_norm = n;
            best = std::move(r);
        }
    }
    if (best_norm == 0.0) return std::nullopt;
    best /= best_norm;
    return best;
}

struct SolveArgs {
    std::string scenario_path;
    std::optional<std::uint64_t> iters;
    std::optional<std::uint64_t> stride;
    std::string step;
    std::string trace_path;
    std::string plot_path;
    int precision = 5;
};

int run_solve(const SolveArgs& a) {
    heron::io::ScenarioDoc doc =
        heron::io::load_scenario_file(a.scenario_path);
    if (a.iters) doc.solver.max_iters = *a.iters;
    if (a.stride) doc.solver.trace_stride = *a.stride;
    if (!a.step.empty()) doc.solver.schedule = parse_step(a.step);

    const heron::SolveResult res = heron::solve(doc.scenario, doc.solver);

    if (!heron::check_existence(doc.scenario))
        std::cerr << "warning: no set is bounded, a nearest point may not "
                     "exist\n";
    if (res.start_projected)
        std::cerr << "warning: start point was outside the constraint and "
                     "has been projected onto it\n";

    std::cout << "best point: " << fmt(res.best_x, a.precision) << "\n";
    std::cout << "best value: " << fmt(res.best_value, a.precision) << "\n";
    std::cout << "iterations: " << res.iterations << "\n";
    if (res.stopped_early)
        std::cout << "stopped early: best value stagnant\n";

    if (!a.trace_path.empty()) {
        std::ofstream out(a.trace_path);
        if (!out)
            throw std::invalid_argument("cannot write trace file: " +
                                        a.trace_path);
        heron::write_trace_csv(out, res);
    }
    if (!a.plot_path.empty()) {
        std::ofstream out(a.plot_path);
        if (!out)
            throw std::invalid_argument("cannot write plot file: " +
                                        a.plot_path);
        out << heron::io::render_svg(doc.scenario, res.trace);
    }
    return 0;
}

struct CertifyArgs {
    std::string scenario_path;
    std::string at;
    std::optional<double> tol;
    std::string json_path;
    int precision = 5;
};

int run_certify(const CertifyArgs& a) {
    heron::io::ScenarioDoc doc =
        heron::io::load_scenario_file(a.scenario_path);
    const Scenario& sc = doc.scenario;
    const Vec point = parse_point(a.at);
    const double tol = a.tol ? *a.tol : doc.certify_tol;

    heron::Certificate cert = heron::stationarity_residual(sc, point, tol);
    if (cert.verdict != heron::Verdict::inapplicable &&
        !doc.certify_directions.empty()) {
        const std::vector<double> sums =
            heron::cosine_sums(sc, point, doc.certify_directions);
        for (std::size_t j = 0; j < sums.size(); ++j)
            cert.cosine_sums.emplace_back(doc.certify_directions[j], sums[j]);
    }

    std::optional<heron::TwoSetCheck> two_set;
    if (sc.targets.size() == 2) {
        Vec a_dir(sc.dim());
        a_dir[0] = 1.0;
        if (const auto normal = affine_normal(sc.constraint))
            a_dir = *normal;
        two_set = heron::two_set_check(sc, point, a_dir, tol);
    }

    std::cout << "point: " << fmt(cert.point, a.precision) << "\n";
    for (std::size_t i = 0; i < cert.unit_vectors.size(); ++i)
        std::cout << "a_" << i + 1 << ": "
                  << fmt(cert.unit_vectors[i], a.precision) << "\n";
    if (cert.verdict != heron::Verdict::inapplicable)
        std::cout << "residual: " << fmt(cert.residual, a.precision) << "\n";
    for (const auto& [dir, sum] : cert.cosine_sums)
        std::cout << "cosine sum along " << fmt(dir, a.precision) << ": "
                  << fmt(sum, a.precision) << "\n";
    if (two_set) {
        if (!two_set->applicable) {
            std::cout << "two-set check: not applicable (" << two_set->reason
                      << ")\n";
        } else {
            std::cout << "two-set check: necessary condition "
                      << (two_set->necessary_holds ? "holds" : "fails");
            if (two_set->sufficient_applicable)
                std::cout << ", sufficient condition "
                          << (two_set->sufficient_holds ? "holds" : "fails");
            std::cout << "\n";
        }
    }
    std::cout << "verdict: " << heron::to_string(cert.verdict);
    if (!cert.reason.empty()) std::cout << " (" << cert.reason << ")";
    std::cout << "\n";

    if (!a.json_path.empty()) {
        nlohmann::ordered_json j;
        j["point"] = cert.point.coords();
        j["unit_vectors"] = nlohmann::ordered_json::array();
        for (const Vec& u : cert.unit_vectors)
            j["unit_vectors"].push_back(u.coords());
        j["residual"] = cert.residual;
        j["tolerance"] = cert.tol;
        j["verdict"] = heron::to_string(cert.verdict);
        j["reason"] = cert.reason;
        j["cosine_sums"] = nlohmann::ordered_json::array();
        for (const auto& [dir, sum] : cert.cosine_sums) {
            nlohmann::ordered_json e;
            e["direction"] = dir.coords();
            e["sum"] = sum;
            j["cosine_sums"].push_back(std::move(e));
        }
        if (two_set) {
            nlohmann::ordered_json t;
            t["applicable"] = two_set->applicable;
            t["reason"] = two_set->reason;
            t["necessary_holds"] = two_set->necessary_holds;
            t["sufficient_applicable"] = two_set->sufficient_applicable;
            t["sufficient_holds"] = two_set->sufficient_holds;
            j["two_set"] = std::move(t);
        }
        std::ofstream out(a.json_path);
        if (!out)
            throw std::invalid_argument("cannot write json file: " +
                                        a.json_path);
        out << j.dump(2) << "\n";
    }
    return 0;
}

struct OracleArgs {
    std::string scenario_path;
    std::optional<std::uint64_t> grid;
    std::optional<std::uint64_t> rounds;
    int precision = 5;
};

int run_oracle(const OracleArgs& a) {
    heron::io::ScenarioDoc doc =
        heron::io::load_scenario_file(a.scenario_path);
    if (a.grid) doc.oracle.grid_points_per_axis = *a.grid;
    if (a.rounds) doc.oracle.refinement_rounds = *a.rounds;

    const heron::OracleResult res = heron::grid_solve(doc.scenario, doc.oracle);
    std::cout << "point: " << fmt(res.point, a.precision) << "\n";
    std::cout << "value: " << fmt(res.value, a.precision) << "\n";
    std::cout << "error bound: " << fmt(res.error_bound, a.precision) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Nearest-point solver for sums of distances to convex sets"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve_cmd =
        app.add_subcommand("solve", "Run the projected subgradient method");
    solve_cmd->add_option("scenario", solve_args.scenario_path,
                          "Scenario file")
        ->required();
    solve_cmd->add_option("--iters", solve_args.iters, "Iteration count");
    solve_cmd->add_option("--stride", solve_args.stride, "Trace stride");
    solve_cmd->add_option("--step", solve_args.step,
                          "Step rule, harmonic:c or power:c,p");
    solve_cmd->add_option("--trace", solve_args.trace_path,
                          "Write the iterate trace as CSV");
    solve_cmd->add_option("--plot", solve_args.plot_path,
                          "Write the trajectory as SVG (2-d only)");
    solve_cmd->add_option("--precision", solve_args.precision,
                          "Printed decimal places")
        ->check(CLI::Range(1, 17));

    CertifyArgs certify_args;
    CLI::App* certify_cmd = app.add_subcommand(
        "certify", "Check the stationarity condition at a point");
    certify_cmd->add_option("scenario", certify_args.scenario_path,
                            "Scenario file")
        ->required();
    certify_cmd->add_option("--at", certify_args.at,
                            "Candidate point, comma-separated coordinates")
        ->required();
    certify_cmd->add_option("--tol", certify_args.tol,
                            "Certificate tolerance");
    certify_cmd->add_option("--json", certify_args.json_path,
                            "Write the certificate as JSON");
    certify_cmd->add_option("--precision", certify_args.precision,
                            "Printed decimal places")
        ->check(CLI::Range(1, 17));

    OracleArgs oracle_args;
    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "Grid-search the scenario independently of the solver");
    oracle_cmd->add_option("scenario", oracle_args.scenario_path,
                           "Scenario file")
        ->required();
    oracle_cmd->add_option("--grid", oracle_args.grid,
                           "Grid points per axis");
    oracle_cmd->add_option("--rounds", oracle_args.rounds,
                           "Refinement rounds");
    oracle_cmd->add_option("--precision", oracle_args.precision,
                           "Printed decimal places")
        ->check(CLI::Range(1, 17));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_args);
        if (certify_cmd->parsed()) return run_certify(certify_args);
        return run_oracle(oracle_args);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
