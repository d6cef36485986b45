// Symmetric 5-point discretization of -c_x d^2/dx^2 - c_y d^2/dy^2 + V on the
// active nodes of a grid. Dirichlet neighbors are eliminated; a mirror ghost
// across a Neumann line folds onto the opposite neighbor, and the doubled
// coupling is symmetrized by the similarity D A D^-1 with D = diag(2^-m/2).
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wglab/grid.hpp"

namespace wglab {

struct AxisWeights {
    double cx = 1.0;
    double cy = 1.0;
};

struct SparseOperator {
    int n = 0;
    std::vector<std::int32_t> row_ptr;  // CSR, both triangles stored
    std::vector<std::int32_t> col;
    std::vector<double> val;
    double spacing = 0.0;
    std::string domain_id;
    std::string potential_id;
    // Per-unknown similarity scale d_i; physical values are v_i / d_i.
    std::vector<double> mirror_scale;
    double snap_displacement = 0.0;

    void apply(const double* x, double* y) const;  // y = A x (symmetric form)
    // Action of the consistent (unsymmetrized) stencil: D^-1 A D x. The
    // constant vector is in its kernel for an all-Neumann zero-potential grid.
    std::vector<double> apply_consistent(const std::vector<double>& x) const;
    std::vector<double> unscale_physical(const std::vector<double>& v) const;
};

using ScalarField = std::function<double(double, double)>;

SparseOperator assemble_operator(const Domain2D& domain, const Grid2D& grid,
                                 const ScalarField& potential, AxisWeights weights,
                                 const std::string& potential_id);

}  // namespace wglab
