#pragma once

#include <cstddef>
#include <optional>

#include "heron/scenario.hpp"
#include "heron/vec.hpp"

namespace heron {

struct BoundingBox {
    Vec lo;
    Vec hi;

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct OracleConfig {
    /// Grid resolution per axis, at least 8.
    std::size_t grid_points_per_axis = 64;
    /// Number of times the box is shrunk 4x around the incumbent and
    /// re-scanned.
    std::size_t refinement_rounds = 3;
    /// Overrides the derived search box.
    std::optional<BoundingBox> bounding_box;

    friend bool operator==(const OracleConfig&, const OracleConfig&) = default;
};

struct OracleResult {
    /// Feasible incumbent (a projected grid point).
    Vec point;
    double value;
    /// Lipschitz slack n * h * sqrt(s) for the final grid spacing h; the true
    /// minimum lies within [value - error_bound, value].
    double error_bound;
};

/// Search box when none is given: bounding box of the constraint when it is
/// bounded, otherwise the box around all bounded targets inflated by their
/// largest pairwise distance. Throws std::domain_error when nothing is
/// bounded.
BoundingBox default_bounding_box(const Scenario& sc);

/// Independent global check: evaluates the objective at the projection of
/// every grid point, keeping the best (ties go to the lexicographically
/// smallest grid index). Throws std::domain_error when the evaluation budget
/// of 1e8 would be exceeded.
OracleResult grid_solve(const Scenario& sc, const OracleConfig& cfg = {});

}  // namespace heron
