// Planar domains as unions of axis-aligned rectangles with tagged boundary
// segments. Barriers are zero-thickness Dirichlet lines; windows are open
// passages on shared rectangle edges.
#pragma once

#include <string>
#include <vector>

namespace wglab {

struct WaveguideParams {
    double L;        // cavity length
    double h;        // cavity width, > 1
    double epsilon;  // window opening, in (0, 1)
    double alpha;    // interaction strength, > 0

    void validate() const;  // throws std::invalid_argument
};

enum class Bc { dirichlet, neumann };

struct Rect {
    double x0, x1, y0, y1;  // open interior (x0,x1) x (y0,y1)
};

// Axis-aligned segment on the line {axis-coordinate == pos}.
//   normal_axis 0: vertical line x = pos, tangential range in y
//   normal_axis 1: horizontal line y = pos, tangential range in x
// interior segments are open passages (window cells), not boundary.
struct LineSegment {
    int normal_axis = 0;
    double pos = 0.0;
    double lo = 0.0, hi = 0.0;
    bool closed_lo = false, closed_hi = false;
    Bc bc = Bc::dirichlet;
    bool truncation = false;
    bool interior = false;
};

struct Domain2D {
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    std::vector<Rect> rects;
    std::vector<LineSegment> segments;
    bool allow_disconnected = false;
    std::string id;

    bool is_1d() const { return y_min == y_max; }
    // Lattice-relevant coordinates (for snapping diagnostics).
    std::vector<double> x_breaks() const;
    std::vector<double> y_breaks() const;
    void validate() const;
};

// Truncated bulge waveguide: two width-1 arms of half-length X coupled to an
// L x h cavity through windows of height epsilon at x = +-L/2; Dirichlet
// everywhere including the barrier lines, Dirichlet truncation faces.
Domain2D build_waveguide(const WaveguideParams& p, double truncation_x);

// The cavity rectangle (-L/2,L/2) x (-h/2,h/2), Dirichlet walls, with Neumann
// window segments {x=+-L/2, |y| < eps/2}. eps == 0 gives the pure Dirichlet
// rectangle; h is only required positive here.
Domain2D build_window_rectangle(const WaveguideParams& p);

// [0,X]^2 with Neumann conditions on both axes and truncation_bc on the far
// faces x1 = X, x2 = X.
Domain2D build_quarter_plane(double extent, Bc truncation_bc);

// Straight reference guide (-X, X) x (-1/2, 1/2), all Dirichlet.
Domain2D build_strip(double half_length);

// 1D-degenerate interval (lo, hi) with the given end conditions.
Domain2D build_interval(double lo, double hi, Bc lo_bc, Bc hi_bc);

}  // namespace wglab
