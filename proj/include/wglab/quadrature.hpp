// Gauss-Legendre quadrature with node doubling until the value is stable.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace wglab {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Nodes/weights by Newton iteration on Legendre polynomials.
GaussLegendreRule gauss_legendre(int n);

struct QuadratureResult {
    double value = 0.0;
    double rel_change = 0.0;  // relative change on the last node doubling
    int nodes = 0;
    bool converged = false;
};

// Integrate f over (a, b), doubling the node count from n0 until the result
// changes by less than rel_tol (relative). Throws on non-convergence.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-12, int n0 = 32,
                           int n_max = 1 << 16);

}  // namespace wglab
