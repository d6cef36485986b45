#include "wglab/quadrature.hpp"

#include <cmath>

namespace wglab {

GaussLegendreRule gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

namespace {

double gl_apply(const std::function<double(double)>& f, double a, double b, int n) {
    static thread_local std::vector<GaussLegendreRule> cache;  // index by log2(n/32)
    int level = 0;
    for (int m = 32; m < n; m *= 2) ++level;
    if (static_cast<int>(cache.size()) <= level) cache.resize(level + 1);
    if (cache[level].nodes.empty()) cache[level] = gauss_legendre(n);
    const auto& rule = cache[level];
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol, int n0, int n_max) {
    QuadratureResult r;
    double prev = gl_apply(f, a, b, n0);
    for (int n = 2 * n0; n <= n_max; n *= 2) {
        double cur = gl_apply(f, a, b, n);
        double scale = std::max(std::abs(cur), 1e-300);
        r.value = cur;
        r.nodes = n;
        r.rel_change = std::abs(cur - prev) / scale;
        if (r.rel_change <= rel_tol) {
            r.converged = true;
            return r;
        }
        prev = cur;
    }
    throw std::runtime_error("quadrature did not stabilize to rel_tol " +
                             std::to_string(rel_tol));
}

}  // namespace wglab
