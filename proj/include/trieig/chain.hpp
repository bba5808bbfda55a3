#pragma once

#include <string>
#include <vector>

#include "trieig/grid.hpp"

namespace trieig {

// The shipped proof-certificate point sequences (grid indices on the 64-grid).
const std::vector<GridPoint>& published_pl();
const std::vector<GridPoint>& published_pu();

struct ChainEntry {
    std::string name;  // upper-0 .. upper-9, lower-0 .. lower-8, lower-final
    SubdomainSpec domain;
};

// The 21-domain certification chain:
//   upper-k  = D_U(k, pU[k])   for k = 0..9   (history pL[0..k-1])
//   lower-k  = D_L(k+1, pL[k]) for k = 0..8   (history pU[0..k])
//   lower-final = D_L(10, (0,0)) = T minus U(10)
// For n != 64 the canonical points are rescaled by n/64 (nearest index);
// the chain is exact only on the 64-grid.
std::vector<ChainEntry> certificate_chain(int n);

}  // namespace trieig
