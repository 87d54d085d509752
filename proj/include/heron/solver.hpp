#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "heron/scenario.hpp"
#include "heron/vec.hpp"

namespace heron {

/// Step-size rule alpha_k for k = 1, 2, ... The built-in rules satisfy the
/// divergent-sum / square-summable conditions by construction; an explicit
/// list is taken as given.
class StepSchedule {
public:
    enum class Kind { harmonic, power, explicit_list };

    /// alpha_k = c / k, c > 0.
    static StepSchedule harmonic(double c);
    /// alpha_k = c / k^p, c > 0, 0.5 < p <= 1.
    static StepSchedule power(double c, double p);
    /// Finite list of positive steps; runs out after alphas.size() steps.
    static StepSchedule explicit_list(std::vector<double> alphas);

    double alpha(std::uint64_t k) const;
    bool diminishing_by_construction() const {
        return kind_ != Kind::explicit_list;
    }
    /// Throws std::invalid_argument when an explicit list is shorter than
    /// `iters`.
    void require_horizon(std::uint64_t iters) const;

    Kind kind() const { return kind_; }
    double c() const { return c_; }
    double p() const { return p_; }
    const std::vector<double>& alphas() const { return alphas_; }

    friend bool operator==(const StepSchedule&, const StepSchedule&) = default;

private:
    StepSchedule() = default;
    Kind kind_ = Kind::harmonic;
    double c_ = 1.0;
    double p_ = 1.0;
    std::vector<double> alphas_;
};

struct SolverConfig {
    StepSchedule schedule = StepSchedule::harmonic(1.0);
    std::uint64_t max_iters = 100000;
    /// Record iterate k when (k - 1) % trace_stride == 0.
    std::uint64_t trace_stride = 1;
    /// Empty means the default start rule (see default_start). The start is
    /// always projected onto the constraint before iterating.
    Vec start;
    /// Stop early when the running best value has not improved by more than
    /// 1e-12 for this many consecutive iterates.
    std::optional<std::uint64_t> stagnation_window;
    /// Compatibility mode for a Ball constraint: map every update step
    /// radially onto the boundary sphere instead of projecting onto the
    /// ball. Off by default.
    bool ball_boundary_steps = false;

    friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

/// One recorded iterate: position, objective value, and the running best
/// value up to and including k.
struct TraceRow {
    std::uint64_t k;
    Vec x;
    double d_value;
    double v_best;

    friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct SolveResult {
    Vec best_x;
    double best_value;
    /// Index of the last visited iterate.
    std::uint64_t iterations;
    std::vector<TraceRow> trace;
    bool start_projected;
    bool stopped_early;

    /// Resume state: the already-computed iterate iterations + 1, the
    /// stagnation counter, and the inputs the run was produced from.
    Vec next_x;
    std::uint64_t stall_count;
    Scenario scenario;
    SolverConfig config;
};

/// Projected subgradient method: x_{k+1} = project(constraint,
/// x_k - alpha_k * subgradient(x_k)), k = 1..max_iters. Deterministic; two
/// runs with equal inputs give bitwise-equal results.
SolveResult solve(const Scenario& sc, SolverConfig cfg);

/// Continues `base` for `extra_iters` more iterations under the schedule's
/// global index. The scenario must equal the one stored in `base`; the
/// combined trace is bitwise identical to a single longer run.
SolveResult resume(const Scenario& sc, SolveResult base,
                   std::uint64_t extra_iters);

/// CSV with header k,x_0,...,x_{s-1},D,V; 17 significant digits.
void write_trace_csv(std::ostream& os, const SolveResult& result);
std::vector<TraceRow> read_trace_csv(std::istream& is);

}  // namespace heron
