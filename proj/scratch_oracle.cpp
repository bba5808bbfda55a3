// Scratch: compare structured assembly against a coordinate-based CR oracle.
#include <Eigen/Dense>
#include <cstdio>
#include <map>
#include <vector>

#include "trieig/fem.hpp"
#include "trieig/grid.hpp"

using namespace trieig;

int main() {
    const int N = 8;
    // T''' coordinates: cell width w = 128/N, height h = 93/N (exact doubles for N=8)
    const double w = 128.0 / N, hh = 93.0 / N;

    // Enumerate triangles of the full triangle mesh.
    struct Tri {
        double x[3], y[3];  // vertices
        EdgeId e[3];        // edge opposite vertex t
    };
    std::vector<Tri> tris;
    for (int j = 0; j < N; ++j)
        for (int i = 0; i + j <= N - 1; ++i) {
            // lower: Q=(i,j), C=(i+1,j), D=(i,j+1); edges opposite: Q->D(i,j), C->V(i,j), D->H(i,j)
            tris.push_back({{i * w, (i + 1) * w, i * w},
                            {j * hh, j * hh, (j + 1) * hh},
                            {{EdgeType::D, i, j}, {EdgeType::V, i, j}, {EdgeType::H, i, j}}});
            if (i + j <= N - 2)
                tris.push_back({{(i + 1) * w, i * w, (i + 1) * w},
                                {(j + 1) * hh, (j + 1) * hh, j * hh},
                                {{EdgeType::D, i, j}, {EdgeType::V, i + 1, j}, {EdgeType::H, i, j + 1}}});
        }

    std::map<std::uint64_t, int> dof;
    for (auto& t : tris)
        for (auto& e : t.e)
            if (!dof.count(e.key())) {
                int id = dof.size();
                dof[e.key()] = id;
            }
    const int n = dof.size();
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (auto& t : tris) {
        const double x1 = t.x[0], x2 = t.x[1], x3 = t.x[2];
        const double y1 = t.y[0], y2 = t.y[1], y3 = t.y[2];
        const double det = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1);
        const double area = std::abs(det) / 2;
        // gradients of barycentric coordinates
        double gx[3] = {(y2 - y3) / det, (y3 - y1) / det, (y1 - y2) / det};
        double gy[3] = {(x3 - x2) / det, (x1 - x3) / det, (x2 - x1) / det};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                K(dof[t.e[a].key()], dof[t.e[b].key()]) +=
                    4.0 * area * (gx[a] * gx[b] + gy[a] * gy[b]);
        for (int a = 0; a < 3; ++a) M(dof[t.e[a].key()], dof[t.e[a].key()]) += area / 3.0;
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(K, M);
    std::printf("oracle lambda''' (first 4): %g %g %g %g\n", es.eigenvalues()(0),
                es.eigenvalues()(1), es.eigenvalues()(2), es.eigenvalues()(3));
    std::printf("oracle lambda''  (second): %.6f\n", es.eigenvalues()(1) * 128.0 * 128.0);

    // Structured integer assembly.
    DiscreteSystem s = assemble(build_mesh(full_triangle(N)));
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(s.n, s.n);
    Eigen::VectorXd B(s.n);
    for (int r = 0; r < s.n; ++r) {
        B(r) = s.b[r];
        for (int t2 = s.row_ptr[r]; t2 < s.row_ptr[r + 1]; ++t2) C(r, s.col[t2]) = s.val[t2];
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es2(C, Eigen::MatrixXd(B.asDiagonal()));
    const double sigma = 11808768.0 / (N * N);
    std::printf("structured mu (first 4): %g %g %g %g\n", es2.eigenvalues()(0),
                es2.eigenvalues()(1), es2.eigenvalues()(2), es2.eigenvalues()(3));
    std::printf("structured lambda'' (second): %.6f\n",
                es2.eigenvalues()(1) / sigma * 128.0 * 128.0);
    std::printf("n oracle=%d structured=%d\n", n, s.n);
    return 0;
}
