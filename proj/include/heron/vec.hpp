#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace heron {

/// Dense real vector of runtime dimension. Arithmetic asserts matching
/// dimensions; public geometry entry points do the user-facing validation.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim, double fill = 0.0) : c_(dim, fill) {}
    Vec(std::initializer_list<double> xs) : c_(xs) {}
    explicit Vec(std::vector<double> xs) : c_(std::move(xs)) {}

    std::size_t dim() const { return c_.size(); }
    bool empty() const { return c_.empty(); }

    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }

    const std::vector<double>& coords() const { return c_; }

    auto begin() { return c_.begin(); }
    auto end() { return c_.end(); }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    Vec& operator+=(const Vec& o) {
        assert(dim() == o.dim());
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        assert(dim() == o.dim());
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (double& x : c_) x *= s;
        return *this;
    }
    Vec& operator/=(double s) {
        for (double& x : c_) x /= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { a += b; return a; }
    friend Vec operator-(Vec a, const Vec& b) { a -= b; return a; }
    friend Vec operator*(double s, Vec v) { v *= s; return v; }
    friend Vec operator*(Vec v, double s) { v *= s; return v; }
    friend Vec operator/(Vec v, double s) { v /= s; return v; }
    friend Vec operator-(Vec v) {
        for (double& x : v.c_) x = -x;
        return v;
    }

    friend bool operator==(const Vec&, const Vec&) = default;

private:
    std::vector<double> c_;
};

inline double dot(const Vec& a, const Vec& b) {
    assert(a.dim() == b.dim());
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }

inline bool all_finite(const Vec& a) {
    for (double x : a)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace heron
