#pragma once

#include <vector>

#include "heron/sets.hpp"
#include "heron/vec.hpp"

namespace heron {

/// A problem instance: minimize the sum of distances to the targets over the
/// constraint set. All sets share one ambient dimension.
struct Scenario {
    ConvexSet constraint;
    std::vector<ConvexSet> targets;

    std::size_t dim() const { return constraint.dim(); }

    /// Validates that there is at least one target and that every set lives
    /// in the same dimension; throws std::invalid_argument otherwise.
    static Scenario make(ConvexSet constraint, std::vector<ConvexSet> targets);

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Sum of distances from x to the targets.
double evaluate(const Scenario& sc, const Vec& x);

/// Sum of the per-target distance subgradients at x.
Vec subgradient(const Scenario& sc, const Vec& x);

struct ObjectiveEval {
    double value;
    Vec subgrad;
};

/// Fused evaluation; term-by-term identical to evaluate + subgradient.
ObjectiveEval evaluate_with_subgradient(const Scenario& sc, const Vec& x);

/// True when the constraint or at least one target is bounded, which
/// guarantees a minimizer exists.
bool check_existence(const Scenario& sc);

/// Start point rule used when a scenario does not specify one: the centroid
/// of the target representative points, projected onto the constraint.
Vec default_start(const Scenario& sc);

}  // namespace heron
