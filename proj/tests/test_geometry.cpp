#include <doctest.h>

#include <vector>

#include "trieig/chain.hpp"
#include "trieig/grid.hpp"

using namespace trieig;

namespace {

using PointList = std::vector<GridPoint>;

// Published corner lists for the 21-domain chain on the 64-grid (upper
// domains 0..9, lower domains 0..9 with 9 == the final one).
const std::vector<PointList> kUpperLists = {
    {{0, 0}, {25, 24}},
    {{0, 0}, {20, 17}, {28, 21}},
    {{0, 0}, {28, 30}},
    {{0, 0}, {18, 13}, {24, 14}, {28, 21}, {31, 27}},
    {{0, 0}, {22, 18}, {28, 23}, {31, 27}},
    {{0, 0}, {24, 14}, {26, 19}, {28, 28}},
    {{0, 0}, {21, 9}, {24, 14}, {26, 19}, {28, 23}, {29, 29}},
    {{0, 0}, {19, 12}, {24, 14}, {26, 19}, {28, 23}, {30, 27}},
    {{0, 0}, {21, 9}, {23, 15}, {26, 19}, {27, 25}, {30, 27}},
    {{0, 0}, {21, 9}, {23, 15}, {25, 20}, {28, 23}, {30, 27}, {31, 30}},
};

const std::vector<PointList> kLowerLists = {
    {{28, 21}},
    {{20, 17}, {25, 24}, {31, 27}},
    {{24, 14}, {25, 24}, {28, 30}},
    {{18, 13}, {20, 17}, {28, 23}},
    {{18, 13}, {20, 17}, {22, 18}, {26, 19}, {28, 30}},
    {{21, 9}, {22, 18}, {25, 24}, {28, 28}},
    {{18, 13}, {20, 17}, {22, 18}, {25, 24}, {30, 27}},
    {{19, 12}, {23, 15}, {25, 24}, {28, 28}, {29, 29}},
    {{19, 12}, {20, 17}, {22, 18}, {25, 24}, {27, 25}, {28, 28}, {29, 29}, {31, 30}},
    {{19, 12}, {20, 17}, {22, 18}, {25, 20}, {27, 25}, {28, 28}, {29, 29}},
};

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("region_lower membership by coordinate comparison") {
    CellSet r = region_lower({28, 21}, 64);
    CHECK(r.contains(40, 10));
    CHECK(!r.contains(10, 10));
    CHECK(!r.contains(30, 21));  // max-y = 22 > 21
    CHECK(r.contains(30, 20));
    CHECK(r.contains(28, 0));
    CHECK(!r.contains(27, 0));
}

TEST_CASE("region_lower degenerate corners") {
    CHECK(region_lower({64, 0}, 64).empty());
    CHECK(region_lower({0, 64}, 64) == CellSet::all(64));
    CHECK_THROWS_AS(region_lower({40, 40}, 64), DomainError);
}

TEST_CASE("region_upper membership and boundary cases") {
    CellSet r = region_upper({25, 24}, 64);
    CHECK(r.contains(0, 30));
    CHECK(r.contains(24, 24));
    CHECK(!r.contains(25, 30));
    CHECK(!r.contains(0, 23));
    CHECK(region_upper({64, 0}, 64) == CellSet::all(64));
    // (0,0) adds no cells: D_L(10,(0,0)) must equal T minus U(10).
    CHECK(region_upper({0, 0}, 64).empty());
}

TEST_CASE("quadrants of the same point do not share whole cells") {
    for (GridPoint p : {GridPoint{28, 21}, GridPoint{25, 24}, GridPoint{1, 1}, GridPoint{40, 24}}) {
        CellSet a = region_lower(p, 64);
        a -= CellSet::all(64);
        CellSet l = region_lower(p, 64);
        CellSet u = region_upper(p, 64);
        for (int j = 0; j < 64; ++j)
            for (int i = 0; i + j < 64; ++i) CHECK(!(l.contains(i, j) && u.contains(i, j)));
    }
}

TEST_CASE("build_domain basics") {
    SubdomainSpec d = build_domain(DomainKind::Upper, {}, {25, 24}, 64);
    CHECK(d.cells.contains(0, 0));
    CHECK(!d.cells.contains(40, 10));
    CHECK(d.cells.contains(39, 24));  // half cell next to the staircase exit
    CHECK_THROWS_AS(build_domain(DomainKind::Upper, {}, {0, 64}, 64), DomainError);

    SubdomainSpec dl = build_domain(DomainKind::Lower, {{25, 24}}, {28, 21}, 64);
    CHECK(published_corner_list(dl) == PointList{{28, 21}});
}

TEST_CASE("upper k=0 full polygon") {
    SubdomainSpec d = build_domain(DomainKind::Upper, {}, {25, 24}, 64);
    PointList expect = {{0, 0}, {25, 0}, {25, 24}, {40, 24}, {0, 64}};
    CHECK(to_polygon_grid(d) == expect);
    CHECK(published_corner_list(d) == PointList{{0, 0}, {25, 24}});
}

TEST_CASE("full triangle polygon in T''' coordinates") {
    auto poly = to_polygon(full_triangle(64));
    REQUIRE(poly.size() == 3);
    CHECK(poly[0].x == Rational(0));
    CHECK(poly[0].y == Rational(0));
    CHECK(poly[1].x == Rational(128));
    CHECK(poly[1].y == Rational(0));
    CHECK(poly[2].x == Rational(0));
    CHECK(poly[2].y == Rational(93));
}

TEST_CASE("published corner lists reproduce the shipped tables verbatim") {
    auto chain = certificate_chain(64);
    REQUIRE(chain.size() == 20);
    for (int k = 0; k <= 9; ++k) {
        CAPTURE(k);
        CHECK(published_corner_list(chain[k].domain) == kUpperLists[k]);
    }
    for (int k = 0; k <= 8; ++k) {
        CAPTURE(k);
        CHECK(published_corner_list(chain[10 + k].domain) == kLowerLists[k]);
    }
    CHECK(chain[19].name == "lower-final");
    CHECK(published_corner_list(chain[19].domain) == kLowerLists[9]);
}

TEST_CASE("monotone_dominates") {
    CHECK(monotone_dominates(DomainKind::Upper, {25, 24}, {20, 30}));
    CHECK(!monotone_dominates(DomainKind::Upper, {25, 24}, {26, 24}));
    CHECK(monotone_dominates(DomainKind::Upper, {25, 24}, {25, 24}));
    CHECK(monotone_dominates(DomainKind::Lower, {28, 21}, {30, 10}));
    CHECK(!monotone_dominates(DomainKind::Lower, {28, 21}, {27, 10}));
}

TEST_CASE("exclusion growth is monotone") {
    const auto& pl = published_pl();
    const auto& pu = published_pu();
    for (size_t k = 0; k + 1 < pl.size(); ++k) {
        std::vector<GridPoint> h0(pl.begin(), pl.begin() + k);
        std::vector<GridPoint> h1(pl.begin(), pl.begin() + k + 1);
        GridPoint p = pu[k + 1];
        SubdomainSpec d0 = build_domain(DomainKind::Upper, h0, p, 64);
        SubdomainSpec d1 = build_domain(DomainKind::Upper, h1, p, 64);
        for (int j = 0; j < 64; ++j)
            for (int i = 0; i + j < 64; ++i)
                if (d1.cells.contains(i, j)) CHECK(d0.cells.contains(i, j));
    }
}

TEST_CASE("boundary label partition covers every boundary edge exactly once") {
    auto chain = certificate_chain(64);
    for (const auto& entry : {chain[0], chain[10], chain[19]}) {
        auto edges = boundary_edges(entry.domain);
        size_t dirichlet = 0, neumann = 0;
        std::vector<std::uint64_t> keys;
        for (const auto& be : edges) {
            keys.push_back(be.e.key());
            (be.bc == BoundaryCondition::Dirichlet ? dirichlet : neumann)++;
        }
        std::sort(keys.begin(), keys.end());
        CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
        CHECK(dirichlet + neumann == edges.size());
        CHECK(dirichlet > 0);
        CHECK(neumann > 0);
    }
    // The full triangle is pure Neumann.
    for (const auto& be : boundary_edges(full_triangle(16)))
        CHECK(be.bc == BoundaryCondition::Neumann);
}

TEST_CASE("upper domains are Neumann exactly on AB and OB") {
    auto chain = certificate_chain(64);
    const auto& d = chain[3].domain;  // upper-3
    for (const auto& be : boundary_edges(d)) {
        const bool on_free = d.on_ab(be.e) || SubdomainSpec::on_ob(be.e);
        CHECK((be.bc == BoundaryCondition::Neumann) == on_free);
    }
}

TEST_CASE("lower domains are Neumann exactly on the triangle boundary") {
    auto chain = certificate_chain(64);
    const auto& d = chain[12].domain;  // lower-2
    for (const auto& be : boundary_edges(d)) {
        const bool on_dt = d.on_ab(be.e) || SubdomainSpec::on_ob(be.e) || SubdomainSpec::on_oa(be.e);
        CHECK((be.bc == BoundaryCondition::Neumann) == on_dt);
    }
}

TEST_CASE("domain JSON-ish identity is stable") {
    auto d = build_domain(DomainKind::Upper, {}, {25, 24}, 64);
    CHECK(d.id() == "upper-k0-p25_24");
}

TEST_SUITE_END();
