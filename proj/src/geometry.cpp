#include "wglab/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "wglab/numformat.hpp"

namespace wglab {

void WaveguideParams::validate() const {
    if (!(L > 0.0)) throw std::invalid_argument("waveguide: L must be > 0");
    if (!(h > 1.0)) throw std::invalid_argument("waveguide: h must be > 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("waveguide: epsilon must be in (0, 1)");
    if (!(alpha > 0.0)) throw std::invalid_argument("waveguide: alpha must be > 0");
}

std::vector<double> Domain2D::x_breaks() const {
    std::vector<double> b{x_min, x_max};
    for (const auto& r : rects) {
        b.push_back(r.x0);
        b.push_back(r.x1);
    }
    for (const auto& s : segments) {
        if (s.normal_axis == 0) {
            b.push_back(s.pos);
        } else {
            b.push_back(s.lo);
            b.push_back(s.hi);
        }
    }
    return b;
}

std::vector<double> Domain2D::y_breaks() const {
    std::vector<double> b{y_min, y_max};
    for (const auto& r : rects) {
        b.push_back(r.y0);
        b.push_back(r.y1);
    }
    for (const auto& s : segments) {
        if (s.normal_axis == 1) {
            b.push_back(s.pos);
        } else {
            b.push_back(s.lo);
            b.push_back(s.hi);
        }
    }
    return b;
}

void Domain2D::validate() const {
    if (!(x_max > x_min)) throw std::invalid_argument(id + ": empty x extent");
    if (y_max < y_min) throw std::invalid_argument(id + ": empty y extent");
    if (rects.empty()) throw std::invalid_argument(id + ": no interior");
    for (const auto& s : segments) {
        if (s.normal_axis != 0 && s.normal_axis != 1)
            throw std::invalid_argument(id + ": bad segment axis");
        if (s.hi < s.lo) throw std::invalid_argument(id + ": segment hi < lo");
    }
}

namespace {

std::string wg_id(const WaveguideParams& p) {
    return "L=" + format_double(p.L) + ",h=" + format_double(p.h) +
           ",eps=" + format_double(p.epsilon);
}

}  // namespace

Domain2D build_waveguide(const WaveguideParams& p, double truncation_x) {
    p.validate();
    if (!(truncation_x > p.L / 2))
        throw std::invalid_argument("waveguide truncation X must exceed L/2");
    const double xh = p.L / 2 + truncation_x;  // outer half-length
    Domain2D d;
    d.x_min = -xh;
    d.x_max = xh;
    d.y_min = -p.h / 2;
    d.y_max = p.h / 2;
    d.rects = {{-xh, -p.L / 2, -0.5, 0.5},
               {-p.L / 2, p.L / 2, -p.h / 2, p.h / 2},
               {p.L / 2, xh, -0.5, 0.5}};
    const double eh = p.epsilon / 2;
    for (double sx : {-p.L / 2, p.L / 2}) {
        // open window passage
        d.segments.push_back({0, sx, -eh, eh, false, false, Bc::dirichlet, false, true});
        // barrier: one maximal Dirichlet segment per side of the window
        d.segments.push_back({0, sx, eh, p.h / 2, true, true, Bc::dirichlet, false, false});
        d.segments.push_back({0, sx, -p.h / 2, -eh, true, true, Bc::dirichlet, false, false});
    }
    // walls
    for (double sy : {-0.5, 0.5}) {
        d.segments.push_back({1, sy, -xh, -p.L / 2, true, true, Bc::dirichlet, false, false});
        d.segments.push_back({1, sy, p.L / 2, xh, true, true, Bc::dirichlet, false, false});
    }
    for (double sy : {-p.h / 2, p.h / 2})
        d.segments.push_back({1, sy, -p.L / 2, p.L / 2, true, true, Bc::dirichlet, false, false});
    // truncation faces
    for (double sx : {-xh, xh})
        d.segments.push_back({0, sx, -0.5, 0.5, true, true, Bc::dirichlet, true, false});
    d.id = "waveguide(" + wg_id(p) + ",X=" + format_double(truncation_x) + ")";
    d.validate();
    return d;
}

Domain2D build_window_rectangle(const WaveguideParams& p) {
    if (!(p.L > 0.0)) throw std::invalid_argument("window rectangle: L must be > 0");
    if (!(p.h > 0.0)) throw std::invalid_argument("window rectangle: h must be > 0");
    if (!(p.epsilon >= 0.0 && p.epsilon < std::min(1.0, p.h)))
        throw std::invalid_argument("window rectangle: epsilon must be in [0, min(1,h))");
    Domain2D d;
    d.x_min = -p.L / 2;
    d.x_max = p.L / 2;
    d.y_min = -p.h / 2;
    d.y_max = p.h / 2;
    d.rects = {{-p.L / 2, p.L / 2, -p.h / 2, p.h / 2}};
    const double eh = p.epsilon / 2;
    for (double sx : {-p.L / 2, p.L / 2}) {
        if (eh > 0.0)
            d.segments.push_back({0, sx, -eh, eh, false, false, Bc::neumann, false, false});
        d.segments.push_back({0, sx, eh, p.h / 2, true, true, Bc::dirichlet, false, false});
        d.segments.push_back({0, sx, -p.h / 2, -eh, true, true, Bc::dirichlet, false, false});
    }
    for (double sy : {-p.h / 2, p.h / 2})
        d.segments.push_back({1, sy, -p.L / 2, p.L / 2, true, true, Bc::dirichlet, false, false});
    d.id = "window_rect(" + wg_id(p) + ")";
    d.validate();
    return d;
}

Domain2D build_quarter_plane(double extent, Bc truncation_bc) {
    if (!(extent > 0.0)) throw std::invalid_argument("quarter plane: extent must be > 0");
    Domain2D d;
    d.x_min = 0.0;
    d.x_max = extent;
    d.y_min = 0.0;
    d.y_max = extent;
    d.rects = {{0.0, extent, 0.0, extent}};
    const bool far_neumann = truncation_bc == Bc::neumann;
    // axes carry Neumann conditions; corner (0,0) belongs to both
    d.segments.push_back({0, 0.0, 0.0, extent, true, far_neumann, Bc::neumann, false, false});
    d.segments.push_back({1, 0.0, 0.0, extent, true, far_neumann, Bc::neumann, false, false});
    d.segments.push_back({0, extent, 0.0, extent, true, far_neumann, truncation_bc, true, false});
    d.segments.push_back({1, extent, 0.0, extent, true, far_neumann, truncation_bc, true, false});
    d.id = "quarter_plane(X=" + format_double(extent) +
           (far_neumann ? ",far=N)" : ",far=D)");
    d.validate();
    return d;
}

Domain2D build_strip(double half_length) {
    if (!(half_length > 0.0)) throw std::invalid_argument("strip: half length must be > 0");
    Domain2D d;
    d.x_min = -half_length;
    d.x_max = half_length;
    d.y_min = -0.5;
    d.y_max = 0.5;
    d.rects = {{-half_length, half_length, -0.5, 0.5}};
    for (double sy : {-0.5, 0.5})
        d.segments.push_back({1, sy, -half_length, half_length, true, true, Bc::dirichlet, false, false});
    for (double sx : {-half_length, half_length})
        d.segments.push_back({0, sx, -0.5, 0.5, true, true, Bc::dirichlet, true, false});
    d.id = "strip(X=" + format_double(half_length) + ")";
    d.validate();
    return d;
}

Domain2D build_interval(double lo, double hi, Bc lo_bc, Bc hi_bc) {
    if (!(hi > lo)) throw std::invalid_argument("interval: hi must exceed lo");
    Domain2D d;
    d.x_min = lo;
    d.x_max = hi;
    d.y_min = d.y_max = 0.0;
    d.rects = {{lo, hi, 0.0, 0.0}};
    d.segments.push_back({0, lo, 0.0, 0.0, true, true, lo_bc, false, false});
    d.segments.push_back({0, hi, 0.0, 0.0, true, true, hi_bc, false, false});
    d.id = "interval(" + format_double(lo) + "," + format_double(hi) + "," +
           (lo_bc == Bc::neumann ? "N" : "D") + (hi_bc == Bc::neumann ? "N" : "D") + ")";
    d.validate();
    return d;
}

}  // namespace wglab
