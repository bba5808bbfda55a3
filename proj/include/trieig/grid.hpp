#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trieig/rational.hpp"

namespace trieig {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Point of the N-grid on the reference triangle: column i, row j, i+j <= N.
struct GridPoint {
    int i = 0;
    int j = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    friend auto operator<=>(const GridPoint& a, const GridPoint& b) {
        if (a.i != b.i) return a.i <=> b.i;
        return a.j <=> b.j;
    }
};

inline bool in_grid(GridPoint p, int n) { return p.i >= 0 && p.j >= 0 && p.i + p.j <= n; }

// Set of grid cells of the triangulated reference triangle. Cell (i,j) spans
// [i,i+1]x[j,j+1] in grid units; cells on i+j == N-1 are the half cells cut
// by the hypotenuse. Valid cells satisfy i+j <= N-1.
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(int n) : n_(n), bits_(static_cast<size_t>(n) * (n + 1) / 2, 0) {}

    int n() const { return n_; }
    size_t size() const { return bits_.size(); }

    static bool valid_cell(int n, int i, int j) {
        return i >= 0 && j >= 0 && i + j <= n - 1;
    }
    bool contains(int i, int j) const {
        return valid_cell(n_, i, j) && bits_[index(i, j)] != 0;
    }
    void insert(int i, int j) { bits_[index(i, j)] = 1; }
    void erase(int i, int j) { bits_[index(i, j)] = 0; }

    size_t count() const;
    bool empty() const { return count() == 0; }

    CellSet& operator|=(const CellSet& o);
    CellSet& operator-=(const CellSet& o);
    friend bool operator==(const CellSet&, const CellSet&) = default;

    static CellSet all(int n);

    // Connectivity through shared edges (4-neighbourhood); corner contact
    // does not connect.
    bool connected() const;

    const std::vector<std::uint8_t>& raw_bits() const { return bits_; }

private:
    size_t index(int i, int j) const {
        // row-major over rows j: row j holds columns 0..n-1-j
        return static_cast<size_t>(j) * n_ - static_cast<size_t>(j) * (j - 1) / 2 + i;
    }
    int n_ = 0;
    std::vector<std::uint8_t> bits_;
};

// Quadrant exclusion regions, as whole-cell sets. A cell belongs to
// R_L(p) iff min-x >= p.i and max-y <= p.j; to R_U(p) iff max-x <= p.i and
// min-y >= p.j. Closed cells, closed inequalities.
CellSet region_lower(GridPoint p, int n);
CellSet region_upper(GridPoint p, int n);

enum class DomainKind : std::uint8_t { Upper, Lower, Full };

const char* to_string(DomainKind k);
DomainKind domain_kind_from_string(const std::string& s);

// Structured-mesh edge of the triangulated grid.
//   H(i,j): (i,j)-(i+1,j)   horizontal leg
//   V(i,j): (i,j)-(i,j+1)   vertical leg
//   D(i,j): (i+1,j)-(i,j+1) diagonal, parallel to the hypotenuse
enum class EdgeType : std::uint8_t { H = 0, D = 1, V = 2 };

struct EdgeId {
    EdgeType t = EdgeType::H;
    int i = 0;
    int j = 0;
    friend bool operator==(const EdgeId&, const EdgeId&) = default;
    std::uint64_t key() const {
        return (static_cast<std::uint64_t>(t) << 48) |
               (static_cast<std::uint64_t>(static_cast<std::uint16_t>(i)) << 16) |
               static_cast<std::uint64_t>(static_cast<std::uint16_t>(j));
    }
};

enum class BoundaryCondition : std::uint8_t { Dirichlet, Neumann };

// Staircase subdomain of the reference triangle with mixed boundary labels.
//   Upper: cells = T \ (L_k union R_L(p)), Neumann on AB and OB only.
//   Lower: cells = T \ (U_k union R_U(p)), Neumann on all of dT.
//   Full:  the whole triangle, pure Neumann.
struct SubdomainSpec {
    DomainKind kind = DomainKind::Full;
    int n = 0;
    std::vector<GridPoint> history;  // length k
    GridPoint p{0, 0};
    CellSet cells;

    int k() const { return static_cast<int>(history.size()); }
    std::string id() const;

    // Classification of a mesh edge relative to the triangle boundary.
    static bool on_oa(const EdgeId& e) { return e.t == EdgeType::H && e.j == 0; }
    static bool on_ob(const EdgeId& e) { return e.t == EdgeType::V && e.i == 0; }
    bool on_ab(const EdgeId& e) const { return e.t == EdgeType::D && e.i + e.j == n - 1; }

    // Label for a boundary edge of this domain.
    BoundaryCondition boundary_label(const EdgeId& e) const {
        if (kind == DomainKind::Upper)
            return (on_ab(e) || on_ob(e)) ? BoundaryCondition::Neumann
                                          : BoundaryCondition::Dirichlet;
        return (on_ab(e) || on_ob(e) || on_oa(e)) ? BoundaryCondition::Neumann
                                                  : BoundaryCondition::Dirichlet;
    }
};

// D_U(k,p) / D_L(k,p) per the exclusion-region construction. Throws
// DomainError when the result is empty or disconnected.
SubdomainSpec build_domain(DomainKind kind, const std::vector<GridPoint>& history,
                           GridPoint p, int n);
SubdomainSpec full_triangle(int n);

// Pruning predicate of the linear search: true iff q in R_U(p) (upper) or
// q in R_L(p) (lower), with closed inequalities on grid points.
bool monotone_dominates(DomainKind kind, GridPoint p, GridPoint q);

// Boundary edge with its label, in trace order.
struct BoundaryEdge {
    EdgeId e;
    BoundaryCondition bc;
};

// All boundary edges of the domain (each boundary edge exactly once).
std::vector<BoundaryEdge> boundary_edges(const SubdomainSpec& d);

// Counterclockwise corner list of the cell-union boundary in grid units,
// collinear vertices elided, starting at the bottom-most then left-most
// corner.
std::vector<GridPoint> to_polygon_grid(const SubdomainSpec& d);

// Same corners mapped to T''' coordinates: (i,j) -> (2i, 93j/64).
struct RationalPoint {
    Rational x, y;
};
std::vector<RationalPoint> to_polygon(const SubdomainSpec& d);

// The abbreviated corner list used to publish the staircase: every other
// vertex of the Dirichlet portion (even positions for upper domains, odd for
// lower domains).
std::vector<GridPoint> published_corner_list(const SubdomainSpec& d);

}  // namespace trieig
