#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trieig/grid.hpp"
#include "trieig/rational.hpp"

namespace trieig {

// One element of the structured tessellation. Cells split along the diagonal
// from (i,j+1) to (i+1,j), parallel to the hypotenuse; cells on i+j == N-1
// contribute only the lower half, whose diagonal edge lies on AB.
struct CRTriangle {
    int i = 0;
    int j = 0;
    bool upper = false;  // upper half of the cell (right angle at (i+1,j+1))
    // Element edges in local order (h-leg, hypotenuse, alpha*h-leg).
    EdgeId h_edge() const { return {EdgeType::H, i, upper ? j + 1 : j}; }
    EdgeId d_edge() const { return {EdgeType::D, i, j}; }
    EdgeId v_edge() const { return {EdgeType::V, upper ? i + 1 : i, j}; }
};

// Crouzeix-Raviart mesh on a staircase subdomain: one degree of freedom per
// kept edge midpoint. Edges on Dirichlet boundary are removed.
struct CRMesh {
    SubdomainSpec domain;
    std::vector<CRTriangle> triangles;
    std::vector<EdgeId> dof_edges;          // canonical order, index = dof
    std::vector<std::uint8_t> adjacent;     // kept triangles per dof (1 or 2)
    std::vector<EdgeId> removed_dirichlet;  // edges dropped by the boundary condition
    std::uint64_t mesh_hash = 0;

    int dof_count() const { return static_cast<int>(dof_edges.size()); }
    int dof_of(const EdgeId& e) const;  // -1 if removed/absent
};

CRMesh build_mesh(const SubdomainSpec& d);

// Integer-scaled generalized eigensystem C u = mu B u with
// C = (93)(64) K restricted to kept dofs, B diagonal with entries {1,2},
// and mu = sigma * lambda(T'''), sigma = 93^2/3.
struct DiscreteSystem {
    int n = 0;
    std::vector<std::int32_t> row_ptr;
    std::vector<std::int32_t> col;
    std::vector<std::int32_t> val;     // symmetric, both triangles stored
    std::vector<std::int8_t> b;        // mass diagonal
    Rational sigma = Rational(2883);   // mu = sigma * lambda(T''')
    int grid_n = 64;
    std::uint64_t mesh_hash = 0;

    std::int64_t nnz() const { return static_cast<std::int64_t>(col.size()); }
    // Dense symmetric copy, for small oracles.
    std::vector<std::vector<double>> dense() const;
};

// Local integer contributions in C units: diagonal 16384 (h-leg), 25033
// (hypotenuse), 8649 (alpha-leg); off-diagonal -16384 (h,hyp) and
// -8649 (hyp,alpha-leg).
struct LocalStiffness {
    std::array<std::array<Rational, 3>, 3> m;
};

// The exact CR element matrix for the right triangle with legs h and
// alpha*h, dofs ordered (h-leg midpoint, hypotenuse midpoint,
// alpha-leg midpoint).
LocalStiffness local_stiffness(const Rational& alpha);

DiscreteSystem assemble(const CRMesh& m);

// Coordinate-format export with a JSON header line (sigma, N, mesh hash).
std::string export_matrix(const DiscreteSystem& s);

std::uint64_t fnv1a64(const void* data, size_t len, std::uint64_t seed = 1469598103934665603ULL);

}  // namespace trieig
