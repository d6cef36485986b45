#include "wglab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace wglab {

namespace {

double snap_distance(double v, double origin, double s) {
    const double t = (v - origin) / s;
    return std::abs(t - std::round(t)) * s;
}

}  // namespace

Grid2D make_grid(const Domain2D& domain, double spacing) {
    if (!(spacing > 0.0)) throw std::invalid_argument("grid: spacing must be > 0");
    domain.validate();
    Grid2D g;
    g.spacing = spacing;
    g.x0 = domain.x_min;
    g.y0 = domain.y_min;
    g.nx = static_cast<int>(std::llround((domain.x_max - domain.x_min) / spacing));
    g.ny = domain.is_1d()
               ? 0
               : static_cast<int>(std::llround((domain.y_max - domain.y_min) / spacing));
    if (g.nx < 1) throw std::invalid_argument("grid: spacing exceeds domain width");
    g.domain_id = domain.id;

    for (double b : domain.x_breaks())
        g.max_snap_displacement =
            std::max(g.max_snap_displacement, snap_distance(b, g.x0, spacing));
    if (!domain.is_1d())
        for (double b : domain.y_breaks())
            g.max_snap_displacement =
                std::max(g.max_snap_displacement, snap_distance(b, g.y0, spacing));

    const double tol = spacing / 4;
    const auto on_line = [&](double v, double pos) { return std::abs(v - pos) < tol; };
    const auto in_range = [&](double v, const LineSegment& s) {
        const double lo = s.closed_lo ? s.lo - tol : s.lo + tol;
        const double hi = s.closed_hi ? s.hi + tol : s.hi - tol;
        return v > lo && v < hi;
    };
    const auto on_segment = [&](double x, double y, const LineSegment& s) {
        if (s.normal_axis == 0) return on_line(x, s.pos) && in_range(y, s);
        return on_line(y, s.pos) && in_range(x, s);
    };

    const int total = (g.nx + 1) * (g.ny + 1);
    g.index.assign(total, -1);
    g.mirror.assign(total, 0);

    for (int j = 0; j <= g.ny; ++j) {
        for (int i = 0; i <= g.nx; ++i) {
            const double x = g.x(i);
            const double y = g.y(j);
            bool dirichlet = false, passage = false;
            std::uint8_t mir = 0;
            for (const auto& s : domain.segments) {
                if (!on_segment(x, y, s)) continue;
                if (s.interior) {
                    passage = true;
                } else if (s.bc == Bc::dirichlet) {
                    dirichlet = true;  // Dirichlet dominates at junction nodes
                } else {
                    mir |= static_cast<std::uint8_t>(1 << s.normal_axis);
                }
            }
            bool active = false;
            if (dirichlet) {
                active = false;
            } else if (passage || mir != 0) {
                active = true;
            } else {
                for (const auto& r : domain.rects) {
                    const bool in_x = x > r.x0 + tol && x < r.x1 - tol;
                    const bool in_y =
                        domain.is_1d() ? true : (y > r.y0 + tol && y < r.y1 - tol);
                    if (in_x && in_y) {
                        active = true;
                        break;
                    }
                }
            }
            if (active) {
                g.index[g.node(i, j)] = g.n_unknowns++;
                g.mirror[g.node(i, j)] = mir;
            }
        }
    }
    if (g.n_unknowns == 0) throw std::invalid_argument(domain.id + ": grid has no active nodes");

    if (!domain.allow_disconnected) {
        std::vector<std::uint8_t> seen(total, 0);
        std::vector<int> stack;
        int start = 0;
        while (g.index[start] < 0) ++start;
        stack.push_back(start);
        seen[start] = 1;
        int reached = 0;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            ++reached;
            const int i = p % (g.nx + 1), j = p / (g.nx + 1);
            const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
            for (const auto& q : nb) {
                if (q[0] < 0 || q[0] > g.nx || q[1] < 0 || q[1] > g.ny) continue;
                const int t = g.node(q[0], q[1]);
                if (!seen[t] && g.index[t] >= 0) {
                    seen[t] = 1;
                    stack.push_back(t);
                }
            }
        }
        if (reached != g.n_unknowns)
            throw std::invalid_argument(domain.id + ": active region is disconnected");
    }
    return g;
}

double choose_lattice_spacing(const Domain2D& domain, double target) {
    if (!(target > 0.0)) throw std::invalid_argument("spacing target must be > 0");
    const double span = domain.x_max - domain.x_min;
    const auto lattice_ok = [&](double s) {
        const auto aligned = [&](double b, double origin) {
            const double t = (b - origin) / s;
            return std::abs(t - std::round(t)) <= 1e-9 * std::max(1.0, std::abs(t));
        };
        for (double b : domain.x_breaks())
            if (!aligned(b, domain.x_min)) return false;
        if (!domain.is_1d())
            for (double b : domain.y_breaks())
                if (!aligned(b, domain.y_min)) return false;
        return true;
    };
    const int n_min = std::max(1, static_cast<int>(std::ceil(span / target - 1e-9)));
    for (int n = n_min; n <= 8 * n_min + 4096; ++n) {
        const double s = span / n;
        if (lattice_ok(s)) return s;
    }
    return span / n_min;  // no exact lattice; snap displacement will be recorded
}

}  // namespace wglab
