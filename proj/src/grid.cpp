#include "trieig/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace trieig {

size_t CellSet::count() const {
    return static_cast<size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t(1)));
}

CellSet& CellSet::operator|=(const CellSet& o) {
    if (o.n_ != n_) throw std::invalid_argument("CellSet: grid size mismatch");
    for (size_t t = 0; t < bits_.size(); ++t) bits_[t] |= o.bits_[t];
    return *this;
}

CellSet& CellSet::operator-=(const CellSet& o) {
    if (o.n_ != n_) throw std::invalid_argument("CellSet: grid size mismatch");
    for (size_t t = 0; t < bits_.size(); ++t)
        bits_[t] = static_cast<std::uint8_t>(bits_[t] & ~o.bits_[t]);
    return *this;
}

CellSet CellSet::all(int n) {
    CellSet s(n);
    std::fill(s.bits_.begin(), s.bits_.end(), std::uint8_t(1));
    return s;
}

bool CellSet::connected() const {
    const size_t total = count();
    if (total == 0) return false;
    std::vector<std::uint8_t> seen(bits_.size(), 0);
    std::queue<std::pair<int, int>> q;
    for (int j = 0; j < n_ && q.empty(); ++j)
        for (int i = 0; i + j <= n_ - 1; ++i)
            if (contains(i, j)) {
                q.push({i, j});
                seen[index(i, j)] = 1;
                break;
            }
    size_t reached = 0;
    while (!q.empty()) {
        auto [i, j] = q.front();
        q.pop();
        ++reached;
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int t = 0; t < 4; ++t) {
            int a = i + di[t], b = j + dj[t];
            if (contains(a, b) && !seen[index(a, b)]) {
                seen[index(a, b)] = 1;
                q.push({a, b});
            }
        }
    }
    return reached == total;
}

CellSet region_lower(GridPoint p, int n) {
    if (!in_grid(p, n)) throw DomainError("region_lower: point outside the grid");
    CellSet s(n);
    for (int j = 0; j + 1 <= p.j; ++j)
        for (int i = std::max(p.i, 0); i + j <= n - 1; ++i) s.insert(i, j);
    return s;
}

CellSet region_upper(GridPoint p, int n) {
    if (!in_grid(p, n)) throw DomainError("region_upper: point outside the grid");
    CellSet s(n);
    for (int j = std::max(p.j, 0); j <= n - 1; ++j)
        for (int i = 0; i + 1 <= p.i && i + j <= n - 1; ++i) s.insert(i, j);
    return s;
}

const char* to_string(DomainKind k) {
    switch (k) {
        case DomainKind::Upper: return "upper";
        case DomainKind::Lower: return "lower";
        default: return "full";
    }
}

DomainKind domain_kind_from_string(const std::string& s) {
    if (s == "upper") return DomainKind::Upper;
    if (s == "lower") return DomainKind::Lower;
    if (s == "full") return DomainKind::Full;
    throw std::invalid_argument("domain kind '" + s + "'");
}

std::string SubdomainSpec::id() const {
    if (kind == DomainKind::Full) return "full-N" + std::to_string(n);
    std::string s = to_string(kind);
    s += "-k" + std::to_string(k());
    s += "-p" + std::to_string(p.i) + "_" + std::to_string(p.j);
    return s;
}

SubdomainSpec build_domain(DomainKind kind, const std::vector<GridPoint>& history,
                           GridPoint p, int n) {
    if (kind == DomainKind::Full) throw std::invalid_argument("build_domain: use full_triangle");
    if (!in_grid(p, n)) throw DomainError("build_domain: p outside the grid");
    CellSet excluded(n);
    for (const auto& h : history)
        excluded |= (kind == DomainKind::Upper) ? region_lower(h, n) : region_upper(h, n);
    excluded |= (kind == DomainKind::Upper) ? region_lower(p, n) : region_upper(p, n);

    SubdomainSpec d;
    d.kind = kind;
    d.n = n;
    d.history = history;
    d.p = p;
    d.cells = CellSet::all(n);
    d.cells -= excluded;
    if (d.cells.empty()) throw DomainError("build_domain: empty domain " + d.id());
    if (!d.cells.connected()) throw DomainError("build_domain: disconnected domain " + d.id());
    return d;
}

SubdomainSpec full_triangle(int n) {
    SubdomainSpec d;
    d.kind = DomainKind::Full;
    d.n = n;
    d.cells = CellSet::all(n);
    return d;
}

bool monotone_dominates(DomainKind kind, GridPoint p, GridPoint q) {
    if (kind == DomainKind::Upper) return q.i <= p.i && q.j >= p.j;
    return q.i >= p.i && q.j <= p.j;
}

namespace {

// A boundary segment directed so the domain lies on its left (CCW trace).
struct Segment {
    GridPoint from, to;
    BoundaryEdge be;
};

bool half_cell(int n, int i, int j) { return i + j == n - 1; }

// Kept triangles adjacent to each edge type, from the cell set.
std::vector<Segment> boundary_segments(const SubdomainSpec& d) {
    const int n = d.n;
    const auto& c = d.cells;
    std::vector<Segment> segs;
    auto push = [&](EdgeId e, GridPoint a, GridPoint b) {
        segs.push_back({a, b, {e, d.boundary_label(e)}});
    };
    for (int j = 0; j <= n - 1; ++j) {
        for (int i = 0; i + j <= n - 1; ++i) {
            // H(i,j): above = lower tri of (i,j); below = upper tri of (i,j-1)
            {
                bool above = c.contains(i, j);
                bool below = c.contains(i, j - 1) && !half_cell(n, i, j - 1);
                EdgeId e{EdgeType::H, i, j};
                if (above && !below) push(e, {i, j}, {i + 1, j});
                if (below && !above) push(e, {i + 1, j}, {i, j});
            }
            // V(i,j): right = lower tri of (i,j); left = upper tri of (i-1,j)
            {
                bool right = c.contains(i, j);
                bool left = c.contains(i - 1, j) && !half_cell(n, i - 1, j);
                EdgeId e{EdgeType::V, i, j};
                if (right && !left) push(e, {i, j + 1}, {i, j});
                if (left && !right) push(e, {i, j}, {i, j + 1});
            }
            // D(i,j): interior unless (i,j) is a kept half cell (then on AB)
            if (half_cell(n, i, j) && c.contains(i, j))
                push({EdgeType::D, i, j}, {i + 1, j}, {i, j + 1});
        }
    }
    return segs;
}

std::uint64_t vkey(GridPoint v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.i)) << 32) |
           static_cast<std::uint32_t>(v.j);
}

std::vector<GridPoint> elide_collinear(const std::vector<GridPoint>& loop) {
    const size_t m = loop.size();
    std::vector<GridPoint> out;
    for (size_t t = 0; t < m; ++t) {
        const GridPoint &prev = loop[(t + m - 1) % m], &cur = loop[t], &nxt = loop[(t + 1) % m];
        const long cross = static_cast<long>(cur.i - prev.i) * (nxt.j - prev.j) -
                           static_cast<long>(cur.j - prev.j) * (nxt.i - prev.i);
        if (cross != 0) out.push_back(cur);
    }
    return out;
}

std::vector<GridPoint> trace_loop(const std::vector<Segment>& segs) {
    std::map<std::uint64_t, const Segment*> by_start;
    for (const auto& s : segs) {
        if (!by_start.emplace(vkey(s.from), &s).second)
            throw std::logic_error("boundary trace: vertex with two outgoing segments");
    }
    GridPoint start = segs.front().from;
    for (const auto& s : segs)
        if (std::pair(s.from.j, s.from.i) < std::pair(start.j, start.i)) start = s.from;
    std::vector<GridPoint> loop;
    GridPoint v = start;
    do {
        loop.push_back(v);
        auto it = by_start.find(vkey(v));
        if (it == by_start.end()) throw std::logic_error("boundary trace: open boundary");
        v = it->second->to;
    } while (!(v == start) && loop.size() <= segs.size());
    if (loop.size() > segs.size()) throw std::logic_error("boundary trace: loop did not close");
    return loop;
}

}  // namespace

std::vector<BoundaryEdge> boundary_edges(const SubdomainSpec& d) {
    std::vector<BoundaryEdge> out;
    for (const auto& s : boundary_segments(d)) out.push_back(s.be);
    return out;
}

std::vector<GridPoint> to_polygon_grid(const SubdomainSpec& d) {
    if (d.cells.empty()) throw DomainError("to_polygon: empty domain");
    return elide_collinear(trace_loop(boundary_segments(d)));
}

std::vector<RationalPoint> to_polygon(const SubdomainSpec& d) {
    std::vector<RationalPoint> out;
    for (const auto& v : to_polygon_grid(d))
        out.push_back({Rational(2L * v.i), Rational(93L * v.j, 64L)});
    return out;
}

std::vector<GridPoint> published_corner_list(const SubdomainSpec& d) {
    if (d.kind == DomainKind::Full) return {};
    auto segs = boundary_segments(d);
    // Dirichlet segments form one open path along the staircase.
    std::map<std::uint64_t, const Segment*> by_start;
    std::map<std::uint64_t, int> in_deg;
    for (const auto& s : segs) {
        if (s.be.bc != BoundaryCondition::Dirichlet) continue;
        by_start.emplace(vkey(s.from), &s);
        in_deg[vkey(s.to)]++;
    }
    if (by_start.empty()) return {};
    const Segment* first = nullptr;
    for (const auto& [vk, seg] : by_start)
        if (in_deg.find(vk) == in_deg.end()) {
            if (first) throw std::logic_error("published_corner_list: multiple path heads");
            first = seg;
        }
    if (!first) throw std::logic_error("published_corner_list: no path head");
    std::vector<GridPoint> path{first->from};
    const Segment* cur = first;
    while (true) {
        path.push_back(cur->to);
        auto it = by_start.find(vkey(cur->to));
        if (it == by_start.end()) break;
        cur = it->second;
    }
    // Corners only.
    std::vector<GridPoint> corners{path.front()};
    for (size_t t = 1; t + 1 < path.size(); ++t) {
        const long cross = static_cast<long>(path[t].i - path[t - 1].i) * (path[t + 1].j - path[t - 1].j) -
                           static_cast<long>(path[t].j - path[t - 1].j) * (path[t + 1].i - path[t - 1].i);
        if (cross != 0) corners.push_back(path[t]);
    }
    corners.push_back(path.back());
    // Order from the OB-side endpoint, then keep every other vertex.
    if (std::pair(corners.back().i, corners.back().j) < std::pair(corners.front().i, corners.front().j))
        std::reverse(corners.begin(), corners.end());
    std::vector<GridPoint> out;
    for (size_t t = (d.kind == DomainKind::Upper) ? 0 : 1; t < corners.size(); t += 2)
        out.push_back(corners[t]);
    return out;
}

}  // namespace trieig
