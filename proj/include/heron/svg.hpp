#pragma once

#include <string>
#include <vector>

#include "heron/scenario.hpp"
#include "heron/solver.hpp"

namespace heron::io {

/// Renders a 2-dimensional scenario and an iterate trajectory as SVG 1.1:
/// one path per set (constraint outlined, targets filled) and one polyline
/// for the trajectory. The viewport frames the bounded sets and the
/// trajectory with a 10% margin; unbounded sets are clipped to it.
/// Throws std::invalid_argument for other dimensions.
std::string render_svg(const Scenario& sc, const std::vector<TraceRow>& trace);

}  // namespace heron::io
