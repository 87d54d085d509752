#pragma once

#include <string>
#include <variant>
#include <vector>

#include "heron/vec.hpp"

namespace heron {

/// Absolute tolerance for membership and boundary classification.
inline constexpr double kMembershipTol = 1e-9;

struct Singleton {
    Vec point;
    friend bool operator==(const Singleton&, const Singleton&) = default;
};

struct Ball {
    Vec center;
    double radius;
    friend bool operator==(const Ball&, const Ball&) = default;
};

/// Axis-aligned box given by center and per-axis half-widths.
struct Box {
    Vec center;
    Vec half_widths;
    friend bool operator==(const Box&, const Box&) = default;
};

/// Affine subspace base + span(directions); directions are kept pairwise
/// orthonormal. An empty direction list is a single point.
struct Affine {
    Vec base;
    std::vector<Vec> directions;
    friend bool operator==(const Affine&, const Affine&) = default;
};

/// Closed halfspace { x : <normal, x> <= offset }.
struct Halfspace {
    Vec normal;
    double offset;
    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Radial projection onto the sphere bounding `b`. Undefined at the center.
Vec boundary_project(const Ball& b, const Vec& x);

/// Closed convex set in R^s, one of five shapes. Construction validates the
/// shape invariants (finite data, positive radius and half-widths, nonzero
/// halfspace normal) and throws std::invalid_argument on violation.
class ConvexSet {
public:
    using Variant = std::variant<Singleton, Ball, Box, Affine, Halfspace>;

    static ConvexSet singleton(Vec point);
    static ConvexSet ball(Vec center, double radius);
    static ConvexSet box(Vec center, Vec half_widths);
    /// Orthonormalizes `spanning` (Gram-Schmidt, dependents dropped) unless
    /// it is already orthonormal, in which case it is stored verbatim.
    static ConvexSet affine(Vec base, std::vector<Vec> spanning);
    static ConvexSet halfspace(Vec normal, double offset);

    std::size_t dim() const;
    const Variant& variant() const { return v_; }
    std::string kind_name() const;

    /// Euclidean distance to the set, computed as ||x - project(x)||.
    double distance(const Vec& x) const;

    /// Metric projection onto the set; the identity on members.
    Vec project(const Vec& x) const;

    /// Projection of `v` onto the normal cone at `xbar`. Requires `xbar`
    /// to be a member within `tol` (std::domain_error otherwise); points
    /// within `tol` of the boundary are classified as boundary points.
    Vec normal_cone_project(const Vec& xbar, const Vec& v,
                            double tol = kMembershipTol) const;

    /// Subgradient of x |-> distance(x): the unit vector
    /// (x - project(x)) / distance(x) outside the set, zero on it.
    Vec distance_subgradient(const Vec& x) const;

    bool is_member(const Vec& x, double tol = kMembershipTol) const;

    bool is_bounded() const;

    friend bool operator==(const ConvexSet&, const ConvexSet&) = default;

private:
    explicit ConvexSet(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

}  // namespace heron
