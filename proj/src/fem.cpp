#include "trieig/fem.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace trieig {

std::uint64_t fnv1a64(const void* data, size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (size_t t = 0; t < len; ++t) {
        h ^= p[t];
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::uint64_t hash_u64(std::uint64_t h, std::uint64_t v) { return fnv1a64(&v, sizeof v, h); }

// Canonical dof order: by (j,i) of the lexicographically smallest endpoint
// in (j,i), then orientation class H < D < V.
std::tuple<int, int, int> edge_sort_key(const EdgeId& e) {
    switch (e.t) {
        case EdgeType::H: return {e.j, e.i, 0};
        case EdgeType::D: return {e.j, e.i + 1, 1};
        default: return {e.j, e.i, 2};
    }
}

}  // namespace

int CRMesh::dof_of(const EdgeId& e) const {
    auto it = std::lower_bound(dof_edges.begin(), dof_edges.end(), e,
                               [](const EdgeId& a, const EdgeId& b) {
                                   return edge_sort_key(a) < edge_sort_key(b);
                               });
    if (it != dof_edges.end() && *it == e) return static_cast<int>(it - dof_edges.begin());
    return -1;
}

CRMesh build_mesh(const SubdomainSpec& d) {
    CRMesh m;
    m.domain = d;
    const int n = d.n;
    for (int j = 0; j <= n - 1; ++j)
        for (int i = 0; i + j <= n - 1; ++i) {
            if (!d.cells.contains(i, j)) continue;
            m.triangles.push_back({i, j, false});
            if (i + j <= n - 2) m.triangles.push_back({i, j, true});
        }

    std::map<std::tuple<int, int, int>, std::pair<EdgeId, int>> edges;
    for (const auto& t : m.triangles)
        for (const EdgeId& e : {t.h_edge(), t.d_edge(), t.v_edge()}) {
            auto [it, fresh] = edges.emplace(edge_sort_key(e), std::pair{e, 0});
            (void)fresh;
            it->second.second++;
        }

    for (const auto& [key, ec] : edges) {
        (void)key;
        const auto& [e, cnt] = ec;
        if (cnt == 1 && d.boundary_label(e) == BoundaryCondition::Dirichlet) {
            m.removed_dirichlet.push_back(e);
            continue;
        }
        m.dof_edges.push_back(e);
        m.adjacent.push_back(static_cast<std::uint8_t>(cnt));
    }

    std::uint64_t h = fnv1a64(nullptr, 0);
    h = hash_u64(h, static_cast<std::uint64_t>(n));
    h = hash_u64(h, static_cast<std::uint64_t>(d.kind));
    h = fnv1a64(d.cells.raw_bits().data(), d.cells.raw_bits().size(), h);
    for (size_t t = 0; t < m.dof_edges.size(); ++t) {
        h = hash_u64(h, m.dof_edges[t].key());
        h = hash_u64(h, m.adjacent[t]);
    }
    m.mesh_hash = h;
    return m;
}

LocalStiffness local_stiffness(const Rational& alpha) {
    if (alpha.sign() <= 0) throw std::domain_error("local_stiffness: alpha must be positive");
    const Rational two(2), zero(0);
    const Rational ta = two * alpha;            // 2*alpha
    const Rational tia = two / alpha;           // 2/alpha
    const Rational mid = ta + tia;              // 2(alpha + 1/alpha)
    LocalStiffness k;
    k.m = {{{tia, -tia, zero}, {-tia, mid, -ta}, {zero, -ta, ta}}};
    return k;
}

DiscreteSystem assemble(const CRMesh& m) {
    // C = 5952 * K: h-leg dof 16384, hypotenuse 25033, alpha-leg 8649.
    constexpr std::int32_t kH = 16384, kV = 8649, kD = kH + kV;

    const int n = m.dof_count();
    std::vector<std::map<int, std::int32_t>> rows(n);
    std::vector<std::int8_t> b(n, 0);
    auto add = [&rows](int r, int c, std::int32_t v) {
        if (r < 0 || c < 0) return;
        rows[r][c] += v;
    };
    for (const auto& t : m.triangles) {
        const int h = m.dof_of(t.h_edge());
        const int dd = m.dof_of(t.d_edge());
        const int v = m.dof_of(t.v_edge());
        add(h, h, kH);
        add(dd, dd, kD);
        add(v, v, kV);
        add(h, dd, -kH);
        add(dd, h, -kH);
        add(v, dd, -kV);
        add(dd, v, -kV);
        for (int dof : {h, dd, v})
            if (dof >= 0) b[dof] = static_cast<std::int8_t>(b[dof] + 1);
    }

    DiscreteSystem s;
    s.n = n;
    s.b = std::move(b);
    s.sigma = Rational(11808768L, static_cast<long>(m.domain.n) * m.domain.n);
    s.grid_n = m.domain.n;
    s.mesh_hash = m.mesh_hash;
    s.row_ptr.assign(n + 1, 0);
    for (int r = 0; r < n; ++r) s.row_ptr[r + 1] = s.row_ptr[r] + static_cast<int>(rows[r].size());
    s.col.reserve(s.row_ptr[n]);
    s.val.reserve(s.row_ptr[n]);
    for (int r = 0; r < n; ++r)
        for (const auto& [c, v] : rows[r]) {
            s.col.push_back(c);
            s.val.push_back(v);
        }
    return s;
}

std::vector<std::vector<double>> DiscreteSystem::dense() const {
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int r = 0; r < n; ++r)
        for (int t = row_ptr[r]; t < row_ptr[r + 1]; ++t) a[r][col[t]] = val[t];
    return a;
}

std::string export_matrix(const DiscreteSystem& s) {
    std::ostringstream out;
    out << "{\"sigma\":{\"num\":\"" << s.sigma.num().get_str() << "\",\"den\":\""
        << s.sigma.den().get_str() << "\"},\"n\":" << s.n << ",\"mesh_hash\":\"" << std::hex
        << s.mesh_hash << std::dec << "\"}\n";
    for (int r = 0; r < s.n; ++r)
        for (int t = s.row_ptr[r]; t < s.row_ptr[r + 1]; ++t)
            if (s.col[t] >= r) out << r << " " << s.col[t] << " " << s.val[t] << "\n";
    for (int r = 0; r < s.n; ++r) out << "b " << r << " " << static_cast<int>(s.b[r]) << "\n";
    return out.str();
}

}  // namespace trieig
