#include "heron/solver.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace heron {
namespace {

constexpr double kStagnationTol = 1e-12;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Runs iterates k_begin..k_end on top of the state already in `r`.
// r.best_value, r.stall_count and the trace carry over, which is what makes
// resumed runs bitwise identical to single longer runs.
void iterate(SolveResult& r, const Scenario& sc, const SolverConfig& cfg,
             Vec x, std::uint64_t k_begin, std::uint64_t k_end) {
    const Ball* boundary_ball =
        cfg.ball_boundary_steps ? &std::get<Ball>(sc.constraint.variant())
                                : nullptr;
    for (std::uint64_t k = k_begin; k <= k_end; ++k) {
        const ObjectiveEval e = evaluate_with_subgradient(sc, x);
        const bool improved = (r.best_value - e.value) > kStagnationTol;
        if (e.value < r.best_value) {
            r.best_value = e.value;
            r.best_x = x;
        }
        r.stall_count = improved ? 0 : r.stall_count + 1;
        if ((k - 1) % cfg.trace_stride == 0)
            r.trace.push_back(TraceRow{k, x, e.value, r.best_value});
        const Vec y = x - cfg.schedule.alpha(k) * e.subgrad;
        x = boundary_ball ? boundary_project(*boundary_ball, y)
                          : sc.constraint.project(y);
        r.iterations = k;
        if (cfg.stagnation_window && r.stall_count >= *cfg.stagnation_window) {
            r.stopped_early = true;
            break;
        }
    }
    r.next_x = std::move(x);
}

}  // namespace

StepSchedule StepSchedule::harmonic(double c) {
    if (!std::isfinite(c) || c <= 0.0)
        throw std::invalid_argument("harmonic schedule needs c > 0");
    StepSchedule s;
    s.kind_ = Kind::harmonic;
    s.c_ = c;
    return s;
}

StepSchedule StepSchedule::power(double c, double p) {
    if (!std::isfinite(c) || c <= 0.0)
        throw std::invalid_argument("power schedule needs c > 0");
    if (!std::isfinite(p) || p <= 0.5 || p > 1.0)
        throw std::invalid_argument("power schedule needs 0.5 < p <= 1");
    StepSchedule s;
    s.kind_ = Kind::power;
    s.c_ = c;
    s.p_ = p;
    return s;
}

StepSchedule StepSchedule::explicit_list(std::vector<double> alphas) {
    if (alphas.empty())
        throw std::invalid_argument("explicit step list must be nonempty");
    for (double a : alphas)
        if (!std::isfinite(a) || a <= 0.0)
            throw std::invalid_argument("explicit steps must be positive");
    StepSchedule s;
    s.kind_ = Kind::explicit_list;
    s.alphas_ = std::move(alphas);
    return s;
}

double StepSchedule::alpha(std::uint64_t k) const {
    switch (kind_) {
        case Kind::harmonic:
            return c_ / static_cast<double>(k);
        case Kind::power:
            return c_ / std::pow(static_cast<double>(k), p_);
        case Kind::explicit_list:
            if (k > alphas_.size())
                throw std::invalid_argument(
                    "explicit step list exhausted at iteration " +
                    std::to_string(k));
            return alphas_[k - 1];
    }
    return 0.0;  // unreachable
}

void StepSchedule::require_horizon(std::uint64_t iters) const {
    if (kind_ == Kind::explicit_list && iters > alphas_.size())
        throw std::invalid_argument(
            "explicit step list has " + std::to_string(alphas_.size()) +
            " steps, " + std::to_string(iters) + " iterations requested");
}

SolveResult solve(const Scenario& sc, SolverConfig cfg) {
    if (cfg.start.empty()) cfg.start = default_start(sc);
    if (cfg.start.dim() != sc.dim())
        throw std::invalid_argument(
            "start point has dimension " + std::to_string(cfg.start.dim()) +
            ", scenario has dimension " + std::to_string(sc.dim()));
    if (!all_finite(cfg.start))
        throw std::invalid_argument("start point must be finite");
    if (cfg.max_iters == 0)
        throw std::invalid_argument("max_iters must be positive");
    if (cfg.trace_stride == 0)
        throw std::invalid_argument("trace_stride must be positive");
    if (cfg.stagnation_window && *cfg.stagnation_window == 0)
        throw std::invalid_argument("stagnation_window must be positive");
    cfg.schedule.require_horizon(cfg.max_iters);
    if (cfg.ball_boundary_steps &&
        !std::holds_alternative<Ball>(sc.constraint.variant()))
        throw std::invalid_argument(
            "ball_boundary_steps requires a ball constraint, got " +
            sc.constraint.kind_name());

    const bool start_projected =
        !sc.constraint.is_member(cfg.start, kMembershipTol);
    Vec x = sc.constraint.project(cfg.start);

    SolveResult r{Vec(sc.dim()),
                  std::numeric_limits<double>::infinity(),
                  0,
                  {},
                  start_projected,
                  false,
                  Vec(),
                  0,
                  sc,
                  cfg};
    iterate(r, sc, cfg, std::move(x), 1, cfg.max_iters);
    return r;
}

SolveResult resume(const Scenario& sc, SolveResult base,
                   std::uint64_t extra_iters) {
    if (!(sc == base.scenario))
        throw std::invalid_argument(
            "resume: scenario differs from the one the result came from");
    if (extra_iters == 0) return base;
    base.config.schedule.require_horizon(base.iterations + extra_iters);
    base.stopped_early = false;
    Vec x = std::move(base.next_x);
    iterate(base, sc, base.config, std::move(x), base.iterations + 1,
            base.iterations + extra_iters);
    return base;
}

void write_trace_csv(std::ostream& os, const SolveResult& r) {
    const std::size_t s = r.scenario.dim();
    os << 'k';
    for (std::size_t j = 0; j < s; ++j) os << ",x_" << j;
    os << ",D,V\n";
    for (const TraceRow& row : r.trace) {
        os << row.k;
        for (std::size_t j = 0; j < s; ++j) os << ',' << fmt17(row.x[j]);
        os << ',' << fmt17(row.d_value) << ',' << fmt17(row.v_best) << '\n';
    }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

double parse_double(const std::string& s, std::size_t line_no) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                    ": bad number '" + s + "'");
    return v;
}

}  // namespace

std::vector<TraceRow> read_trace_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("trace is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_csv(line);
    if (header.size() < 4 || header.front() != "k" ||
        header[header.size() - 2] != "D" || header.back() != "V")
        throw std::invalid_argument("trace header must be k,x_0,...,D,V");
    const std::size_t s = header.size() - 3;
    for (std::size_t j = 0; j < s; ++j)
        if (header[1 + j] != "x_" + std::to_string(j))
            throw std::invalid_argument("trace header must be k,x_0,...,D,V");

    std::vector<TraceRow> rows;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> cells = split_csv(line);
        if (cells.size() != header.size())
            throw std::invalid_argument("trace line " +
                                        std::to_string(line_no) + " has " +
                                        std::to_string(cells.size()) +
                                        " cells, expected " +
                                        std::to_string(header.size()));
        TraceRow row{0, Vec(s), 0.0, 0.0};
        std::uint64_t k = 0;
        const auto [ptr, ec] = std::from_chars(
            cells[0].data(), cells[0].data() + cells[0].size(), k);
        if (ec != std::errc{} || ptr != cells[0].data() + cells[0].size())
            throw std::invalid_argument("trace line " +
                                        std::to_string(line_no) +
                                        ": bad iteration index");
        row.k = k;
        for (std::size_t j = 0; j < s; ++j)
            row.x[j] = parse_double(cells[1 + j], line_no);
        row.d_value = parse_double(cells[1 + s], line_no);
        row.v_best = parse_double(cells[2 + s], line_no);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace heron
