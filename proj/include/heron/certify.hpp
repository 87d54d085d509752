#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heron/scenario.hpp"
#include "heron/vec.hpp"

namespace heron {

enum class Verdict { certified_optimal, not_stationary, inapplicable };

std::string to_string(Verdict v);

/// Stationarity evidence for a candidate point. When the point lies inside
/// some target the construction of the unit vectors breaks down and the
/// verdict is `inapplicable` with `reason` set; `unit_vectors` is then empty
/// and `residual` is zero by convention.
struct Certificate {
    Vec point;
    std::vector<Vec> unit_vectors;
    double residual;
    double tol;
    Verdict verdict;
    std::string reason;
    /// Optional (direction, cosine sum) pairs; filled in by callers that
    /// also evaluate cosine_sums.
    std::vector<std::pair<Vec, double>> cosine_sums;
};

/// Builds the unit vectors a_i = (xbar - project_i(xbar)) / dist_i(xbar),
/// their sum g, and the residual || -g - project_{N(xbar)}(-g) ||. Verdict is
/// certified_optimal when the residual is at most tol. Requires xbar in the
/// constraint set (std::domain_error otherwise).
Certificate stationarity_residual(const Scenario& sc, const Vec& xbar,
                                  double tol = 1e-6);

/// For each direction u_j, the sum over targets of cos(angle(a_i, u_j)).
/// Requires xbar in the constraint and outside every target
/// (std::domain_error otherwise); directions must be nonzero.
std::vector<double> cosine_sums(const Scenario& sc, const Vec& xbar,
                                const std::vector<Vec>& directions);

/// Specialized optimality test for two targets on an affine constraint of
/// codimension one with normal direction a.
struct TwoSetCheck {
    /// Hypotheses verified: affine constraint of codimension one, a normal
    /// to it, point outside both targets.
    bool applicable;
    std::string reason;
    /// a_1 = -a_2, or the two cosines against a agree (within tol).
    bool necessary_holds;
    /// The converse direction is reported only in ambient dimension 2.
    bool sufficient_applicable;
    bool sufficient_holds;
};

TwoSetCheck two_set_check(const Scenario& sc, const Vec& xbar, const Vec& a,
                          double tol = 1e-6);

}  // namespace heron
