#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "trieig/certify.hpp"
#include "trieig/fem.hpp"

namespace trieig {

namespace {

using Entry = std::pair<int, mpz_class>;  // (column >= row, value)
using Row = std::vector<Entry>;

std::uint64_t hash_pivot(std::uint64_t h, const mpz_class& p) {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), p.get_mpz_t(), 64);
    const std::uint64_t lo = mpz_get_ui(r.get_mpz_t());
    const std::uint64_t hi =
        (static_cast<std::uint64_t>(mpz_sizeinbase(p.get_mpz_t(), 2)) << 2) |
        static_cast<std::uint64_t>(sgn(p) + 1);
    std::uint64_t v[2] = {lo, hi};
    return fnv1a64(v, sizeof v, h);
}

}  // namespace

RationalLuResult posdef_rational_lu(const DiscreteSystem& s, const Rational& theta,
                                    const std::vector<int>* forced_perm) {
    const int n = s.n;
    RationalLuResult res;
    res.permutation = forced_perm ? *forced_perm : amd_order(s);
    if (static_cast<int>(res.permutation.size()) != n)
        throw std::invalid_argument("posdef_rational_lu: bad permutation size");

    // A = den*C - num*B, permuted; integer and positive-definite iff C - theta B is.
    const mpz_class den = theta.den();
    const mpz_class num = theta.num();
    std::vector<int> inv(n);  // inv[old] = new
    for (int i = 0; i < n; ++i) inv[res.permutation[i]] = i;

    std::vector<Row> rows(n);
    for (int r_old = 0; r_old < n; ++r_old) {
        for (int t = s.row_ptr[r_old]; t < s.row_ptr[r_old + 1]; ++t) {
            const int c_old = s.col[t];
            const int r = inv[r_old], c = inv[c_old];
            if (c < r) continue;  // upper triangle of the permuted matrix
            mpz_class v = den * s.val[t];
            if (r_old == c_old) v -= num * s.b[r_old];
            rows[r].emplace_back(c, std::move(v));
        }
    }
    for (auto& row : rows) std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) {
        return a.first < b.first;
    });

    // Fraction-free elimination. pivots[k] is the k-th leading principal
    // minor of the permuted matrix (Bareiss); state[i] = t means row i stores
    // a^{(t)} entries (untouched rows stay stale and are rescaled on demand:
    // a^{(k)} = a^{(t)} * pivots[k-1] / pivots[t-1], exact by the minor identity).
    std::vector<mpz_class> pivots(n);
    std::vector<int> state(n, 0);
    res.pivot_hash = fnv1a64(nullptr, 0);
    mpz_class t1, t2;

    auto scale_row = [&](int r, int to) {
        const int from = state[r];
        if (from == to) return;
        const mpz_class& mulp = pivots[to - 1];
        for (auto& [c, v] : rows[r]) {
            (void)c;
            v *= mulp;
            if (from > 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), pivots[from - 1].get_mpz_t());
        }
        state[r] = to;
    };

    for (int k = 0; k < n; ++k) {
        scale_row(k, k);
        Row& rk = rows[k];
        if (rk.empty() || rk.front().first != k) {
            res.verdict = TriBool::False;  // structurally singular leading minor
            res.failure_index = k;
            return res;
        }
        pivots[k] = rk.front().second;
        if (sgn(pivots[k]) <= 0) {
            res.verdict = TriBool::False;
            res.failure_index = k;
            return res;
        }
        res.pivot_hash = hash_pivot(res.pivot_hash, pivots[k]);
        res.pivot_count = k + 1;

        const mpz_class& pk = pivots[k];
        const mpz_class* pk1 = k > 0 ? &pivots[k - 1] : nullptr;
        // Schur update of every row coupled to column k. Stale rows are not
        // pre-rescaled: entries untouched by fill go straight from state s to
        // k+1 via one mul/divexact (a^{(k+1)} = a^{(s)} * P_k / P_{s-1}).
        Row out;
        for (size_t a = 1; a < rk.size(); ++a) {
            const int i = rk[a].first;
            const mpz_class& aki = rk[a].second;
            Row& ri = rows[i];
            const int si = state[i];
            const mpz_class* ps1 = si > 0 ? &pivots[si - 1] : nullptr;
            out.clear();
            out.reserve(ri.size() + rk.size() - a);
            size_t x = 0, y = a;
            while (x < ri.size() || y < rk.size()) {
                int cx = x < ri.size() ? ri[x].first : n;
                int cy = y < rk.size() ? rk[y].first : n;
                if (cx < cy) {
                    t1 = std::move(ri[x].second);
                    t1 *= pk;
                    if (ps1) mpz_divexact(t1.get_mpz_t(), t1.get_mpz_t(), ps1->get_mpz_t());
                    out.emplace_back(cx, std::move(t1));
                    ++x;
                } else if (cy < cx) {
                    t1 = aki * rk[y].second;
                    mpz_neg(t1.get_mpz_t(), t1.get_mpz_t());
                    if (pk1) mpz_divexact(t1.get_mpz_t(), t1.get_mpz_t(), pk1->get_mpz_t());
                    if (sgn(t1) != 0) out.emplace_back(cy, std::move(t1));
                    ++y;
                } else {
                    t1 = std::move(ri[x].second);  // bring to state k first
                    if (si < k) {
                        t1 *= pivots[k - 1];
                        if (ps1) mpz_divexact(t1.get_mpz_t(), t1.get_mpz_t(), ps1->get_mpz_t());
                    }
                    t1 *= pk;
                    t2 = aki * rk[y].second;
                    t1 -= t2;
                    if (pk1) mpz_divexact(t1.get_mpz_t(), t1.get_mpz_t(), pk1->get_mpz_t());
                    if (sgn(t1) != 0) out.emplace_back(cx, std::move(t1));
                    ++x;
                    ++y;
                }
            }
            ri.swap(out);
            state[i] = k + 1;
        }
        rk.clear();
        rk.shrink_to_fit();
    }
    res.verdict = TriBool::True;
    return res;
}

}  // namespace trieig
