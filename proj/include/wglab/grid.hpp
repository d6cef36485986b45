// Uniform node-centered lattice over a domain. Dirichlet boundary nodes are
// eliminated; nodes on Neumann lines stay active and carry a mirror flag.
#pragma once

#include <cstdint>
#include <vector>

#include "wglab/geometry.hpp"

namespace wglab {

struct Grid2D {
    double spacing = 0.0;
    double x0 = 0.0, y0 = 0.0;  // lattice origin
    int nx = 0, ny = 0;         // nodes are (i, j), i in [0, nx], j in [0, ny]
    std::vector<std::int32_t> index;  // node -> unknown, -1 if eliminated
    std::vector<std::uint8_t> mirror; // bit 0: x-mirror line, bit 1: y-mirror line
    int n_unknowns = 0;
    double max_snap_displacement = 0.0;
    std::string domain_id;

    int node(int i, int j) const { return j * (nx + 1) + i; }
    double x(int i) const { return x0 + i * spacing; }
    double y(int j) const { return y0 + j * spacing; }
    bool active(int i, int j) const {
        return i >= 0 && i <= nx && j >= 0 && j <= ny && index[node(i, j)] >= 0;
    }
    bool mirrored(int i, int j, int axis) const {
        return (mirror[node(i, j)] >> axis) & 1;
    }
};

// Builds the lattice, classifies nodes, checks connectivity by flood fill
// (unless the domain allows decoupled components), and records the largest
// snap displacement of any geometric breakpoint to the lattice.
Grid2D make_grid(const Domain2D& domain, double spacing);

// Largest s <= target of the form span/n that puts every breakpoint of the
// domain on a lattice line (within 1e-9 relative). Falls back to span/n with
// n = ceil(span/target) when no exact lattice exists; the snap displacement
// is then visible in the grid metadata.
double choose_lattice_spacing(const Domain2D& domain, double target);

}  // namespace wglab
