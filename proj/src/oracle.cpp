#include "heron/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace heron {
namespace {

// Bounded sets reduce to an axis box core plus a radius (nonzero only for
// balls), which makes pairwise distances exact.
struct CoreRadius {
    Vec lo;
    Vec hi;
    double radius;
};

CoreRadius core_of(const ConvexSet& set) {
    return std::visit(
        [](const auto& s) -> CoreRadius {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Singleton>) {
                return {s.point, s.point, 0.0};
            } else if constexpr (std::is_same_v<T, Ball>) {
                return {s.center, s.center, s.radius};
            } else if constexpr (std::is_same_v<T, Box>) {
                return {s.center - s.half_widths, s.center + s.half_widths,
                        0.0};
            } else if constexpr (std::is_same_v<T, Affine>) {
                return {s.base, s.base, 0.0};
            } else {
                throw std::logic_error("core_of: unbounded set");
            }
        },
        set.variant());
}

BoundingBox aabb_of(const ConvexSet& set) {
    CoreRadius c = core_of(set);
    for (std::size_t j = 0; j < c.lo.dim(); ++j) {
        c.lo[j] -= c.radius;
        c.hi[j] += c.radius;
    }
    return {std::move(c.lo), std::move(c.hi)};
}

double bounded_set_distance(const ConvexSet& a, const ConvexSet& b) {
    const CoreRadius ca = core_of(a);
    const CoreRadius cb = core_of(b);
    Vec gap(ca.lo.dim());
    for (std::size_t j = 0; j < gap.dim(); ++j)
        gap[j] = std::max({0.0, ca.lo[j] - cb.hi[j], cb.lo[j] - ca.hi[j]});
    return std::max(0.0, norm(gap) - ca.radius - cb.radius);
}

bool advance(std::vector<std::size_t>& idx, std::size_t m) {
    for (std::size_t j = idx.size(); j-- > 0;) {
        if (++idx[j] < m) return true;
        idx[j] = 0;
    }
    return false;
}

}  // namespace

BoundingBox default_bounding_box(const Scenario& sc) {
    if (sc.constraint.is_bounded()) return aabb_of(sc.constraint);

    std::vector<const ConvexSet*> bounded;
    for (const ConvexSet& t : sc.targets)
        if (t.is_bounded()) bounded.push_back(&t);
    if (bounded.empty())
        throw std::domain_error(
            "no bounded set to derive a search box from; supply one");

    BoundingBox box = aabb_of(*bounded.front());
    for (std::size_t i = 1; i < bounded.size(); ++i) {
        const BoundingBox bb = aabb_of(*bounded[i]);
        for (std::size_t j = 0; j < box.lo.dim(); ++j) {
            box.lo[j] = std::min(box.lo[j], bb.lo[j]);
            box.hi[j] = std::max(box.hi[j], bb.hi[j]);
        }
    }
    double inflate = 0.0;
    for (std::size_t i = 0; i < bounded.size(); ++i)
        for (std::size_t j = i + 1; j < bounded.size(); ++j)
            inflate = std::max(inflate,
                               bounded_set_distance(*bounded[i], *bounded[j]));
    for (std::size_t j = 0; j < box.lo.dim(); ++j) {
        box.lo[j] -= inflate;
        box.hi[j] += inflate;
    }
    return box;
}

OracleResult grid_solve(const Scenario& sc, const OracleConfig& cfg) {
    const std::size_t m = cfg.grid_points_per_axis;
    const std::size_t s = sc.dim();
    if (m < 8)
        throw std::invalid_argument("grid_points_per_axis must be at least 8");
    if (cfg.bounding_box) {
        const BoundingBox& b = *cfg.bounding_box;
        if (b.lo.dim() != s || b.hi.dim() != s)
            throw std::invalid_argument(
                "bounding box dimension does not match the scenario");
        if (!all_finite(b.lo) || !all_finite(b.hi))
            throw std::invalid_argument("bounding box must be finite");
        for (std::size_t j = 0; j < s; ++j)
            if (b.lo[j] > b.hi[j])
                throw std::invalid_argument(
                    "bounding box has lo > hi on axis " + std::to_string(j));
    }

    const double evals = static_cast<double>(cfg.refinement_rounds + 1) *
                         std::pow(static_cast<double>(m),
                                  static_cast<double>(s));
    if (evals > 1e8)
        throw std::domain_error(
            "oracle budget exceeded: the requested grid needs about " +
            std::to_string(evals) + " evaluations, limit is 1e8");

    BoundingBox box =
        cfg.bounding_box ? *cfg.bounding_box : default_bounding_box(sc);

    Vec best_point(s);
    double best_value = std::numeric_limits<double>::infinity();
    bool have = false;
    double spacing = 0.0;
    const double denom = static_cast<double>(m - 1);

    for (std::size_t round = 0; round <= cfg.refinement_rounds; ++round) {
        spacing = 0.0;
        for (std::size_t j = 0; j < s; ++j)
            spacing = std::max(spacing, (box.hi[j] - box.lo[j]) / denom);

        std::vector<std::size_t> idx(s, 0);
        Vec g(s);
        do {
            for (std::size_t j = 0; j < s; ++j)
                g[j] = box.lo[j] + (box.hi[j] - box.lo[j]) *
                                       (static_cast<double>(idx[j]) / denom);
            Vec p = sc.constraint.project(g);
            const double v = evaluate(sc, p);
            if (!have || v < best_value) {
                have = true;
                best_value = v;
                best_point = std::move(p);
            }
        } while (advance(idx, m));

        if (round < cfg.refinement_rounds) {
            for (std::size_t j = 0; j < s; ++j) {
                const double half = (box.hi[j] - box.lo[j]) / 8.0;
                box.lo[j] = best_point[j] - half;
                box.hi[j] = best_point[j] + half;
            }
        }
    }

    const double bound = static_cast<double>(sc.targets.size()) * spacing *
                         std::sqrt(static_cast<double>(s));
    return OracleResult{std::move(best_point), best_value, bound};
}

}  // namespace heron
