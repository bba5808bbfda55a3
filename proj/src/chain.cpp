#include "trieig/chain.hpp"

#include <cmath>

namespace trieig {

const std::vector<GridPoint>& published_pl() {
    static const std::vector<GridPoint> pl = {{28, 21}, {31, 27}, {24, 14}, {28, 23}, {26, 19},
                                              {21, 9},  {30, 27}, {23, 15}, {31, 30}};
    return pl;
}

const std::vector<GridPoint>& published_pu() {
    static const std::vector<GridPoint> pu = {{25, 24}, {20, 17}, {28, 30}, {18, 13}, {22, 18},
                                              {28, 28}, {29, 29}, {19, 12}, {27, 25}, {25, 20}};
    return pu;
}

namespace {

GridPoint scale_point(GridPoint p, int n) {
    if (n == 64) return p;
    auto s = [n](int v) { return static_cast<int>(std::lround(static_cast<double>(v) * n / 64.0)); };
    GridPoint q{s(p.i), s(p.j)};
    if (q.i + q.j > n) q.j = n - q.i;
    return q;
}

std::vector<GridPoint> scale_points(const std::vector<GridPoint>& ps, size_t count, int n) {
    std::vector<GridPoint> out;
    for (size_t t = 0; t < count; ++t) out.push_back(scale_point(ps[t], n));
    return out;
}

}  // namespace

std::vector<ChainEntry> certificate_chain(int n) {
    const auto& pl = published_pl();
    const auto& pu = published_pu();
    std::vector<ChainEntry> chain;
    for (size_t k = 0; k < pu.size(); ++k)
        chain.push_back({"upper-" + std::to_string(k),
                         build_domain(DomainKind::Upper, scale_points(pl, k, n),
                                      scale_point(pu[k], n), n)});
    for (size_t k = 0; k < pl.size(); ++k)
        chain.push_back({"lower-" + std::to_string(k),
                         build_domain(DomainKind::Lower, scale_points(pu, k + 1, n),
                                      scale_point(pl[k], n), n)});
    chain.push_back({"lower-final",
                     build_domain(DomainKind::Lower, scale_points(pu, pu.size(), n), {0, 0}, n)});
    return chain;
}

}  // namespace trieig
