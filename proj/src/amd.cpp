#include <Eigen/OrderingMethods>
#include <Eigen/SparseCore>

#include "trieig/certify.hpp"

namespace trieig {

std::vector<int> amd_order(const DiscreteSystem& s) {
    using Sp = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
    Sp a(s.n, s.n);
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(s.col.size());
    for (int r = 0; r < s.n; ++r)
        for (int t = s.row_ptr[r]; t < s.row_ptr[r + 1]; ++t)
            trips.emplace_back(r, s.col[t], 1.0);
    a.setFromTriplets(trips.begin(), trips.end());

    Eigen::AMDOrdering<int> amd;
    Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int> perm;
    amd(a.selfadjointView<Eigen::Lower>(), perm);

    // Orientation: we eliminate A' = P A P^T with A'(i,j) = A(perm[i], perm[j]).
    std::vector<int> order(s.n);
    for (int i = 0; i < s.n; ++i) order[perm.indices()(i)] = i;
    std::vector<int> inv(s.n);
    for (int i = 0; i < s.n; ++i) inv[order[i]] = i;
    return inv;  // inv[new] = old
}

}  // namespace trieig
