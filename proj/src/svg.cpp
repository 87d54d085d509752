#include "heron/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

namespace heron::io {
namespace {

struct Frame {
    double x0, y0, x1, y1;  // world box
    double scale;
    double width, height;  // pixels

    double sx(double x) const { return (x - x0) * scale; }
    double sy(double y) const { return (y1 - y) * scale; }
};

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void include_point(double& x0, double& y0, double& x1, double& y1,
                   double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
}

void include_set(double& x0, double& y0, double& x1, double& y1,
                 const ConvexSet& set) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Singleton>) {
                include_point(x0, y0, x1, y1, s.point[0], s.point[1]);
            } else if constexpr (std::is_same_v<T, Ball>) {
                include_point(x0, y0, x1, y1, s.center[0] - s.radius,
                              s.center[1] - s.radius);
                include_point(x0, y0, x1, y1, s.center[0] + s.radius,
                              s.center[1] + s.radius);
            } else if constexpr (std::is_same_v<T, Box>) {
                include_point(x0, y0, x1, y1, s.center[0] - s.half_widths[0],
                              s.center[1] - s.half_widths[1]);
                include_point(x0, y0, x1, y1, s.center[0] + s.half_widths[0],
                              s.center[1] + s.half_widths[1]);
            } else if constexpr (std::is_same_v<T, Affine>) {
                if (s.directions.empty())
                    include_point(x0, y0, x1, y1, s.base[0], s.base[1]);
            }
            // Unbounded sets do not grow the viewport.
        },
        set.variant());
}

std::string circle_path(const Frame& f, double cx, double cy, double r_px) {
    const double x = f.sx(cx);
    const double y = f.sy(cy);
    std::string d = "M " + px(x - r_px) + " " + px(y);
    d += " A " + px(r_px) + " " + px(r_px) + " 0 1 0 " + px(x + r_px) + " " +
         px(y);
    d += " A " + px(r_px) + " " + px(r_px) + " 0 1 0 " + px(x - r_px) + " " +
         px(y);
    d += " Z";
    return d;
}

std::string polygon_path(const Frame& f,
                         const std::vector<std::pair<double, double>>& pts) {
    if (pts.empty()) return "";
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        d += i == 0 ? "M " : " L ";
        d += px(f.sx(pts[i].first)) + " " + px(f.sy(pts[i].second));
    }
    d += " Z";
    return d;
}

// Sutherland-Hodgman clip of the frame rectangle against n.x <= b.
std::vector<std::pair<double, double>> clip_halfplane(const Frame& f,
                                                      double nx, double ny,
                                                      double b) {
    std::vector<std::pair<double, double>> poly{
        {f.x0, f.y0}, {f.x1, f.y0}, {f.x1, f.y1}, {f.x0, f.y1}};
    std::vector<std::pair<double, double>> out;
    const auto value = [&](const std::pair<double, double>& p) {
        return nx * p.first + ny * p.second - b;
    };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        const double vp = value(p);
        const double vq = value(q);
        if (vp <= 0.0) out.push_back(p);
        if ((vp <= 0.0) != (vq <= 0.0)) {
            const double t = vp / (vp - vq);
            out.push_back({p.first + t * (q.first - p.first),
                           p.second + t * (q.second - p.second)});
        }
    }
    return out;
}

std::string set_path(const Frame& f, const ConvexSet& set) {
    return std::visit(
        [&](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Singleton>) {
                return circle_path(f, s.point[0], s.point[1], 3.0);
            } else if constexpr (std::is_same_v<T, Ball>) {
                return circle_path(f, s.center[0], s.center[1],
                                   s.radius * f.scale);
            } else if constexpr (std::is_same_v<T, Box>) {
                const double lx = s.center[0] - s.half_widths[0];
                const double hx = s.center[0] + s.half_widths[0];
                const double ly = s.center[1] - s.half_widths[1];
                const double hy = s.center[1] + s.half_widths[1];
                return polygon_path(f,
                                    {{lx, ly}, {hx, ly}, {hx, hy}, {lx, hy}});
            } else if constexpr (std::is_same_v<T, Affine>) {
                if (s.directions.empty())
                    return circle_path(f, s.base[0], s.base[1], 3.0);
                const Vec& d = s.directions.front();
                const double span =
                    std::hypot(f.x1 - f.x0, f.y1 - f.y0) +
                    std::hypot(s.base[0] - 0.5 * (f.x0 + f.x1),
                               s.base[1] - 0.5 * (f.y0 + f.y1));
                return "M " + px(f.sx(s.base[0] - span * d[0])) + " " +
                       px(f.sy(s.base[1] - span * d[1])) + " L " +
                       px(f.sx(s.base[0] + span * d[0])) + " " +
                       px(f.sy(s.base[1] + span * d[1]));
            } else {
                return polygon_path(
                    f, clip_halfplane(f, s.normal[0], s.normal[1], s.offset));
            }
        },
        set.variant());
}

}  // namespace

std::string render_svg(const Scenario& sc,
                       const std::vector<TraceRow>& trace) {
    if (sc.dim() != 2)
        throw std::invalid_argument(
            "svg rendering supports only 2-dimensional scenarios");

    double x0 = std::numeric_limits<double>::infinity();
    double y0 = x0;
    double x1 = -x0;
    double y1 = -x0;
    include_set(x0, y0, x1, y1, sc.constraint);
    for (const ConvexSet& t : sc.targets) include_set(x0, y0, x1, y1, t);
    for (const TraceRow& row : trace)
        include_point(x0, y0, x1, y1, row.x[0], row.x[1]);
    if (!(x0 <= x1))
        throw std::invalid_argument(
            "cannot derive a viewport: no bounded set and empty trajectory");

    double pad = 0.1 * std::max(x1 - x0, y1 - y0);
    if (pad == 0.0) pad = 1.0;
    x0 -= pad;
    y0 -= pad;
    x1 += pad;
    y1 += pad;

    Frame f{x0, y0, x1, y1, 0.0, 720.0, 0.0};
    f.scale = f.width / (x1 - x0);
    f.height = (y1 - y0) * f.scale;

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        "width=\"" +
        px(f.width) + "\" height=\"" + px(f.height) + "\" viewBox=\"0 0 " +
        px(f.width) + " " + px(f.height) + "\">\n";

    svg += "  <path d=\"" + set_path(f, sc.constraint) +
           "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
    for (const ConvexSet& t : sc.targets)
        svg += "  <path d=\"" + set_path(f, t) +
               "\" fill=\"#ff7f0e\" fill-opacity=\"0.35\" "
               "stroke=\"#b15a09\" stroke-width=\"1\"/>\n";

    std::string points;
    const std::size_t cap = 4000;
    const std::size_t stride =
        trace.size() > cap ? (trace.size() + cap - 1) / cap : 1;
    for (std::size_t i = 0; i < trace.size(); i += stride) {
        if (!points.empty()) points += ' ';
        points += px(f.sx(trace[i].x[0])) + "," + px(f.sy(trace[i].x[1]));
    }
    if (stride > 1 && (trace.size() - 1) % stride != 0) {
        points += ' ' + px(f.sx(trace.back().x[0])) + "," +
                  px(f.sy(trace.back().x[1]));
    }
    svg += "  <polyline points=\"" + points +
           "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.2\"/>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace heron::io
