#include "heron/sets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace heron {
namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

void require_finite(const Vec& v, const char* what) {
    if (!all_finite(v))
        throw std::invalid_argument(std::string(what) + " must be finite");
}

void require_nonempty(const Vec& v, const char* what) {
    if (v.empty())
        throw std::invalid_argument(std::string(what) +
                                    " must have positive dimension");
}

void require_dim(std::size_t set_dim, const Vec& x, const char* op) {
    if (x.dim() != set_dim)
        throw std::invalid_argument(
            std::string(op) + ": dimension mismatch: set has dimension " +
            std::to_string(set_dim) + ", point has dimension " +
            std::to_string(x.dim()));
}

bool is_orthonormal(const std::vector<Vec>& ds, double tol) {
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(dot(ds[i], ds[j]) - want) > tol) return false;
        }
    return true;
}

// Modified Gram-Schmidt with one re-orthogonalization pass; near-dependent
// vectors (residual below 1e-10) are dropped.
std::vector<Vec> orthonormalize(const std::vector<Vec>& spanning) {
    std::vector<Vec> out;
    for (const Vec& v : spanning) {
        Vec w = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& d : out) w -= dot(w, d) * d;
        const double n = norm(w);
        if (n >= 1e-10) {
            w /= n;
            out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace

Vec boundary_project(const Ball& b, const Vec& x) {
    Vec d = x - b.center;
    const double n = norm(d);
    if (n == 0.0)
        throw std::domain_error(
            "boundary projection undefined at the ball center");
    return b.center + (b.radius / n) * d;
}

ConvexSet ConvexSet::singleton(Vec point) {
    require_nonempty(point, "singleton point");
    require_finite(point, "singleton point");
    return ConvexSet(Singleton{std::move(point)});
}

ConvexSet ConvexSet::ball(Vec center, double radius) {
    require_nonempty(center, "ball center");
    require_finite(center, "ball center");
    if (!std::isfinite(radius) || radius <= 0.0)
        throw std::invalid_argument("ball radius must be positive and finite");
    return ConvexSet(Ball{std::move(center), radius});
}

ConvexSet ConvexSet::box(Vec center, Vec half_widths) {
    require_nonempty(center, "box center");
    require_finite(center, "box center");
    if (half_widths.dim() != center.dim())
        throw std::invalid_argument(
            "box half-widths must match the center dimension");
    require_finite(half_widths, "box half-widths");
    for (double h : half_widths)
        if (h <= 0.0)
            throw std::invalid_argument("box half-widths must be positive");
    return ConvexSet(Box{std::move(center), std::move(half_widths)});
}

ConvexSet ConvexSet::affine(Vec base, std::vector<Vec> spanning) {
    require_nonempty(base, "affine base");
    require_finite(base, "affine base");
    for (const Vec& v : spanning) {
        if (v.dim() != base.dim())
            throw std::invalid_argument(
                "affine spanning vectors must match the base dimension");
        require_finite(v, "affine spanning vector");
    }
    if (!is_orthonormal(spanning, 1e-12)) spanning = orthonormalize(spanning);
    return ConvexSet(Affine{std::move(base), std::move(spanning)});
}

ConvexSet ConvexSet::halfspace(Vec normal, double offset) {
    require_nonempty(normal, "halfspace normal");
    require_finite(normal, "halfspace normal");
    if (norm(normal) == 0.0)
        throw std::invalid_argument("halfspace normal must be nonzero");
    if (!std::isfinite(offset))
        throw std::invalid_argument("halfspace offset must be finite");
    return ConvexSet(Halfspace{std::move(normal), offset});
}

std::size_t ConvexSet::dim() const {
    return std::visit(
        [](const auto& s) -> std::size_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Singleton>) return s.point.dim();
            else if constexpr (std::is_same_v<T, Ball>) return s.center.dim();
            else if constexpr (std::is_same_v<T, Box>) return s.center.dim();
            else if constexpr (std::is_same_v<T, Affine>) return s.base.dim();
            else return s.normal.dim();
        },
        v_);
}

std::string ConvexSet::kind_name() const {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Singleton>) return "singleton";
            else if constexpr (std::is_same_v<T, Ball>) return "ball";
            else if constexpr (std::is_same_v<T, Box>) return "box";
            else if constexpr (std::is_same_v<T, Affine>) return "affine";
            else return "halfspace";
        },
        v_);
}

Vec ConvexSet::project(const Vec& x) const {
    require_dim(dim(), x, "project");
    return std::visit(
        [&x](const auto& s) -> Vec {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Singleton>) {
                return s.point;
            } else if constexpr (std::is_same_v<T, Ball>) {
                if (norm(x - s.center) <= s.radius) return x;
                return boundary_project(s, x);
            } else if constexpr (std::is_same_v<T, Box>) {
                Vec p = x;
                for (std::size_t j = 0; j < p.dim(); ++j) {
                    const double lo = s.center[j] - s.half_widths[j];
                    const double hi = s.center[j] + s.half_widths[j];
                    p[j] = std::clamp(p[j], lo, hi);
                }
                return p;
            } else if constexpr (std::is_same_v<T, Affine>) {
                Vec p = s.base;
                const Vec r = x - s.base;
                for (const Vec& d : s.directions) p += dot(r, d) * d;
                return p;
            } else {
                const double excess = dot(s.normal, x) - s.offset;
                if (excess <= 0.0) return x;
                return x - (excess / norm_sq(s.normal)) * s.normal;
            }
        },
        v_);
}

double ConvexSet::distance(const Vec& x) const {
    require_dim(dim(), x, "distance");
    return norm(x - project(x));
}

Vec ConvexSet::distance_subgradient(const Vec& x) const {
    require_dim(dim(), x, "distance_subgradient");
    Vec g = x - project(x);
    const double d = norm(g);
    if (d <= kMembershipTol) return Vec(x.dim());
    g /= d;
    return g;
}

bool ConvexSet::is_member(const Vec& x, double tol) const {
    require_dim(dim(), x, "is_member");
    return distance(x) <= tol;
}

bool ConvexSet::is_bounded() const {
    return std::visit(
        [](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Singleton>) return true;
            else if constexpr (std::is_same_v<T, Ball>) return true;
            else if constexpr (std::is_same_v<T, Box>) return true;
            else if constexpr (std::is_same_v<T, Affine>)
                return s.directions.empty();
            else return false;
        },
        v_);
}

Vec ConvexSet::normal_cone_project(const Vec& xbar, const Vec& v,
                                   double tol) const {
    require_dim(dim(), xbar, "normal_cone_project");
    require_dim(dim(), v, "normal_cone_project");
    const double d = distance(xbar);
    if (d > tol)
        throw std::domain_error(
            "normal_cone_project requires a member point: distance " +
            fmt_double(d) + " exceeds tolerance " + fmt_double(tol));
    // Points within tol of a face are treated as lying on it, so near-boundary
    // points get the larger cone.
    return std::visit(
        [&](const auto& s) -> Vec {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Singleton>) {
                return v;
            } else if constexpr (std::is_same_v<T, Ball>) {
                const Vec r = xbar - s.center;
                const double dc = norm(r);
                if (std::abs(dc - s.radius) > tol || dc == 0.0)
                    return Vec(v.dim());
                const Vec u = r / dc;
                const double t = dot(v, u);
                return t > 0.0 ? t * u : Vec(v.dim());
            } else if constexpr (std::is_same_v<T, Box>) {
                Vec w(v.dim());
                for (std::size_t j = 0; j < v.dim(); ++j) {
                    const double lo = s.center[j] - s.half_widths[j];
                    const double hi = s.center[j] + s.half_widths[j];
                    const bool at_lo = xbar[j] <= lo + tol;
                    const bool at_hi = xbar[j] >= hi - tol;
                    if (at_lo && at_hi) w[j] = v[j];
                    else if (at_lo) w[j] = std::min(v[j], 0.0);
                    else if (at_hi) w[j] = std::max(v[j], 0.0);
                }
                return w;
            } else if constexpr (std::is_same_v<T, Affine>) {
                Vec w = v;
                for (const Vec& dvec : s.directions) w -= dot(w, dvec) * dvec;
                return w;
            } else {
                const double nn = norm(s.normal);
                const double excess = dot(s.normal, xbar) - s.offset;
                if (std::abs(excess) / nn > tol) return Vec(v.dim());
                const Vec u = s.normal / nn;
                const double t = dot(v, u);
                return t > 0.0 ? t * u : Vec(v.dim());
            }
        },
        v_);
}

}  // namespace heron
