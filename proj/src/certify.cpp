#include "heron/certify.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace heron {
namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

void require_point(const Scenario& sc, const Vec& xbar, const char* op) {
    if (xbar.dim() != sc.dim())
        throw std::invalid_argument(
            std::string(op) + ": dimension mismatch: scenario has dimension " +
            std::to_string(sc.dim()) + ", point has dimension " +
            std::to_string(xbar.dim()));
    if (!all_finite(xbar))
        throw std::invalid_argument(std::string(op) +
                                    ": point must be finite");
    const double d = sc.constraint.distance(xbar);
    if (d > kMembershipTol)
        throw std::domain_error(std::string(op) +
                                ": point is not in the constraint set "
                                "(distance " +
                                fmt_double(d) + ")");
}

// Index (1-based) of a target containing xbar, or 0.
std::size_t containing_target(const Scenario& sc, const Vec& xbar) {
    for (std::size_t i = 0; i < sc.targets.size(); ++i)
        if (sc.targets[i].distance(xbar) <= kMembershipTol) return i + 1;
    return 0;
}

std::vector<Vec> unit_vectors(const Scenario& sc, const Vec& xbar) {
    std::vector<Vec> as;
    as.reserve(sc.targets.size());
    for (const ConvexSet& t : sc.targets)
        as.push_back(t.distance_subgradient(xbar));
    return as;
}

double cosine(const Vec& a, const Vec& u) {
    return dot(a, u) / (norm(a) * norm(u));
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::certified_optimal: return "certified_optimal";
        case Verdict::not_stationary: return "not_stationary";
        case Verdict::inapplicable: return "inapplicable";
    }
    return "";
}

Certificate stationarity_residual(const Scenario& sc, const Vec& xbar,
                                  double tol) {
    require_point(sc, xbar, "stationarity_residual");
    if (!std::isfinite(tol) || tol <= 0.0)
        throw std::invalid_argument("certificate tolerance must be positive");

    Certificate cert{xbar, {}, 0.0, tol, Verdict::inapplicable, "", {}};
    if (const std::size_t i = containing_target(sc, xbar)) {
        cert.reason = "point lies in target " + std::to_string(i) +
                      ", the stationarity condition does not apply";
        return cert;
    }

    cert.unit_vectors = unit_vectors(sc, xbar);
    Vec g(sc.dim());
    for (const Vec& a : cert.unit_vectors) g += a;
    const Vec minus_g = -g;
    const Vec w = sc.constraint.normal_cone_project(xbar, minus_g);
    cert.residual = norm(minus_g - w);
    cert.verdict = cert.residual <= tol ? Verdict::certified_optimal
                                        : Verdict::not_stationary;
    return cert;
}

std::vector<double> cosine_sums(const Scenario& sc, const Vec& xbar,
                                const std::vector<Vec>& directions) {
    require_point(sc, xbar, "cosine_sums");
    for (std::size_t j = 0; j < directions.size(); ++j) {
        if (directions[j].dim() != sc.dim())
            throw std::invalid_argument(
                "cosine_sums: direction " + std::to_string(j + 1) +
                " has dimension " + std::to_string(directions[j].dim()) +
                ", expected " + std::to_string(sc.dim()));
        if (norm(directions[j]) == 0.0)
            throw std::invalid_argument("cosine_sums: direction " +
                                        std::to_string(j + 1) + " is zero");
    }
    if (const std::size_t i = containing_target(sc, xbar))
        throw std::domain_error("cosine_sums: point lies in target " +
                                std::to_string(i) +
                                ", the unit vectors are undefined");

    const std::vector<Vec> as = unit_vectors(sc, xbar);
    std::vector<double> sums;
    sums.reserve(directions.size());
    for (const Vec& u : directions) {
        double s = 0.0;
        for (const Vec& a : as) s += cosine(a, u);
        sums.push_back(s);
    }
    return sums;
}

TwoSetCheck two_set_check(const Scenario& sc, const Vec& xbar, const Vec& a,
                          double tol) {
    if (sc.targets.size() != 2)
        throw std::invalid_argument("two_set_check needs exactly two targets");
    if (a.dim() != sc.dim())
        throw std::invalid_argument(
            "two_set_check: direction has dimension " +
            std::to_string(a.dim()) + ", expected " + std::to_string(sc.dim()));
    if (norm(a) == 0.0)
        throw std::invalid_argument("two_set_check: direction a is zero");
    if (!std::isfinite(tol) || tol <= 0.0)
        throw std::invalid_argument("certificate tolerance must be positive");
    require_point(sc, xbar, "two_set_check");

    TwoSetCheck out{false, "", false, false, false};

    const Affine* aff = std::get_if<Affine>(&sc.constraint.variant());
    if (aff == nullptr || aff->directions.size() + 1 != sc.dim() ||
        aff->directions.empty()) {
        out.reason = "constraint is not an affine set of codimension one";
        return out;
    }
    for (const Vec& d : aff->directions)
        if (std::abs(dot(a, d)) > tol * norm(a)) {
            out.reason = "direction a is not normal to the constraint";
            return out;
        }
    if (const std::size_t i = containing_target(sc, xbar)) {
        out.reason = "point lies in target " + std::to_string(i);
        return out;
    }
    out.applicable = true;

    const std::vector<Vec> as = unit_vectors(sc, xbar);
    const double cos1 = cosine(as[0], a);
    const double cos2 = cosine(as[1], a);
    const bool opposite = norm(as[0] + as[1]) <= tol;
    const bool equal_cos = std::abs(cos1 - cos2) <= tol;
    out.necessary_holds = opposite || equal_cos;
    out.sufficient_applicable = sc.dim() == 2;
    if (out.sufficient_applicable)
        out.sufficient_holds =
            opposite || (norm(as[0] - as[1]) > tol && equal_cos);
    return out;
}

}  // namespace heron
