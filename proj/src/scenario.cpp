#include "heron/scenario.hpp"

#include <stdexcept>
#include <string>

namespace heron {
namespace {

void require_dim(const Scenario& sc, const Vec& x, const char* op) {
    if (x.dim() != sc.dim())
        throw std::invalid_argument(
            std::string(op) + ": dimension mismatch: scenario has dimension " +
            std::to_string(sc.dim()) + ", point has dimension " +
            std::to_string(x.dim()));
}

Vec representative_point(const ConvexSet& set) {
    return std::visit(
        [](const auto& s) -> Vec {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Singleton>) return s.point;
            else if constexpr (std::is_same_v<T, Ball>) return s.center;
            else if constexpr (std::is_same_v<T, Box>) return s.center;
            else if constexpr (std::is_same_v<T, Affine>) return s.base;
            else return (s.offset / norm_sq(s.normal)) * s.normal;
        },
        set.variant());
}

}  // namespace

Scenario Scenario::make(ConvexSet constraint, std::vector<ConvexSet> targets) {
    if (targets.empty())
        throw std::invalid_argument("scenario needs at least one target");
    const std::size_t s = constraint.dim();
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (targets[i].dim() != s)
            throw std::invalid_argument(
                "target " + std::to_string(i + 1) + " has dimension " +
                std::to_string(targets[i].dim()) +
                ", expected the constraint dimension " + std::to_string(s));
    return Scenario{std::move(constraint), std::move(targets)};
}

double evaluate(const Scenario& sc, const Vec& x) {
    require_dim(sc, x, "evaluate");
    double value = 0.0;
    for (const ConvexSet& t : sc.targets) value += t.distance(x);
    return value;
}

Vec subgradient(const Scenario& sc, const Vec& x) {
    return evaluate_with_subgradient(sc, x).subgrad;
}

ObjectiveEval evaluate_with_subgradient(const Scenario& sc, const Vec& x) {
    require_dim(sc, x, "evaluate_with_subgradient");
    ObjectiveEval out{0.0, Vec(x.dim())};
    for (const ConvexSet& t : sc.targets) {
        Vec g = x - t.project(x);
        const double d = norm(g);
        out.value += d;
        if (d > kMembershipTol) {
            g /= d;
            out.subgrad += g;
        }
    }
    return out;
}

bool check_existence(const Scenario& sc) {
    if (sc.constraint.is_bounded()) return true;
    for (const ConvexSet& t : sc.targets)
        if (t.is_bounded()) return true;
    return false;
}

Vec default_start(const Scenario& sc) {
    Vec c(sc.dim());
    for (const ConvexSet& t : sc.targets) c += representative_point(t);
    c /= static_cast<double>(sc.targets.size());
    return sc.constraint.project(c);
}

}  // namespace heron
