#include <algorithm>
#include <vector>

#include "trieig/certify.hpp"

namespace trieig {

namespace {

// Shared sparse interval LDL^T elimination of C - theta*B under a symmetric
// permutation. In posdef mode it stops at the first nonpositive pivot; in
// inertia mode it runs to completion counting negative pivots (Sylvester).
struct LdltOutcome {
    TriBool verdict = TriBool::Indeterminate;  // posdef verdict / count validity
    int pivot_count = 0;
    int failure_index = -1;
    int negative = 0;
    double min_pivot_lo = std::numeric_limits<double>::infinity();
};

LdltOutcome ildlt_eliminate(const DiscreteSystem& s, const Rational& theta,
                            const std::vector<int>& perm, bool stop_at_nonpositive) {
    const int n = s.n;
    LdltOutcome res;

    RoundUpwardScope rounding;
    const Interval th = interval_from_rational(theta);

    using Entry = std::pair<int, Interval>;
    using Row = std::vector<Entry>;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;

    std::vector<Row> rows(n);
    for (int r_old = 0; r_old < n; ++r_old)
        for (int t = s.row_ptr[r_old]; t < s.row_ptr[r_old + 1]; ++t) {
            const int c_old = s.col[t];
            const int r = inv[r_old], c = inv[c_old];
            if (c < r) continue;
            Interval v(static_cast<double>(s.val[t]));  // exact
            if (r_old == c_old) v = iv::sub(v, iv::mul(th, Interval(static_cast<double>(s.b[r_old]))));
            rows[r].emplace_back(c, v);
        }
    for (auto& row : rows)
        std::sort(row.begin(), row.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });

    for (int k = 0; k < n; ++k) {
        Row& rk = rows[k];
        if (rk.empty() || rk.front().first != k) {
            // Structurally zero pivot: exact zero, sign indeterminate for
            // counting but definite for positive-definiteness.
            res.verdict = stop_at_nonpositive ? TriBool::False : TriBool::Indeterminate;
            res.failure_index = k;
            return res;
        }
        const Interval d = rk.front().second;
        const TriBool sign = iv_sign(d);
        if (sign == TriBool::Indeterminate) {
            res.verdict = TriBool::Indeterminate;
            res.failure_index = k;
            return res;
        }
        if (sign == TriBool::False) {
            ++res.negative;
            if (stop_at_nonpositive) {
                res.verdict = TriBool::False;
                res.failure_index = k;
                return res;
            }
        } else {
            res.min_pivot_lo = std::min(res.min_pivot_lo, d.lo);
        }
        res.pivot_count = k + 1;

        for (size_t a = 1; a < rk.size(); ++a) {
            const int i = rk[a].first;
            const Interval l = iv::div(rk[a].second, d);
            Row& ri = rows[i];
            Row out;
            out.reserve(ri.size() + rk.size());
            size_t x = 0, y = a;
            while (x < ri.size() || y < rk.size()) {
                int cx = x < ri.size() ? ri[x].first : n;
                int cy = y < rk.size() ? rk[y].first : n;
                if (cx < cy) {
                    out.emplace_back(cx, ri[x].second);
                    ++x;
                } else if (cy < cx) {
                    out.emplace_back(cy, iv::neg(iv::mul(l, rk[y].second)));
                    ++y;
                } else {
                    out.emplace_back(cx, iv::sub(ri[x].second, iv::mul(l, rk[y].second)));
                    ++x;
                    ++y;
                }
            }
            ri = std::move(out);
        }
        rk.clear();
        rk.shrink_to_fit();
    }
    res.verdict = TriBool::True;
    return res;
}

}  // namespace

IntervalLdltResult posdef_interval_ldlt(const DiscreteSystem& s, const Rational& theta,
                                        const std::vector<int>* forced_perm) {
    IntervalLdltResult res;
    res.permutation = forced_perm ? *forced_perm : amd_order(s);
    if (static_cast<int>(res.permutation.size()) != s.n)
        throw std::invalid_argument("posdef_interval_ldlt: bad permutation size");
    LdltOutcome out = ildlt_eliminate(s, theta, res.permutation, true);
    res.verdict = out.verdict;
    res.pivot_count = out.pivot_count;
    res.failure_index = out.failure_index;
    res.min_pivot_lo = out.min_pivot_lo;
    return res;
}

std::optional<int> inertia_count(const DiscreteSystem& s, const Rational& x,
                                 const std::vector<int>* forced_perm) {
    std::vector<int> perm = forced_perm ? *forced_perm : amd_order(s);
    LdltOutcome out = ildlt_eliminate(s, x, perm, false);
    if (out.verdict != TriBool::True) return std::nullopt;
    return out.negative;
}

std::vector<EigBracket> bisect_brackets_sparse(const DiscreteSystem& s, int k,
                                               const Rational& tol) {
    if (k < 1) throw std::invalid_argument("bisect_brackets_sparse: k must be >= 1");
    if (k > s.n) throw std::invalid_argument("bisect_brackets_sparse: k exceeds dimension");
    const std::vector<int> perm = amd_order(s);
    // Gershgorin bound of B^{-1/2} C B^{-1/2}: |entries| <= |c_ij| since
    // B diagonal entries are >= 1.
    double hi_d = 0.0;
    {
        RoundUpwardScope rounding;
        for (int r = 0; r < s.n; ++r) {
            double row = 0.0;
            for (int t = s.row_ptr[r]; t < s.row_ptr[r + 1]; ++t)
                row += std::abs(static_cast<double>(s.val[t]));
            hi_d = std::max(hi_d, row);
        }
    }
    const Rational glo = Rational(-1);  // spectra of (C,B) are nonnegative here
    // Unpivoted elimination turns indeterminate deep inside the spectrum, so
    // grow the top endpoint geometrically with certified counts instead of
    // starting at the Gershgorin radius.
    Rational ghi = Rational(1);
    const Rational gmax = Rational(mpq_class(hi_d)) + Rational(1);
    std::optional<int> top = inertia_count(s, ghi, &perm);
    while ((!top || *top < k) && ghi < gmax) {
        ghi = ghi * Rational(2);
        top = inertia_count(s, ghi, &perm);
    }
    if (!top || *top < k)
        throw std::runtime_error("bisect_brackets_sparse: no determinate upper seed");

    std::vector<EigBracket> out;
    for (int j = 1; j <= k; ++j) {
        EigBracket b;
        b.index = j;
        b.lo = glo;
        b.hi = ghi;
        while (b.hi - b.lo > tol) {
            Rational mid = (b.lo + b.hi) / Rational(2);
            auto c = inertia_count(s, mid, &perm);
            if (!c) {
                const Rational step = (b.hi - b.lo) / Rational(16);
                bool resolved = false;
                for (int attempt = 1; attempt <= 3 && !resolved; ++attempt) {
                    Rational alt = mid + step * Rational(attempt);
                    if (alt >= b.hi) break;
                    if (auto c2 = inertia_count(s, alt, &perm)) {
                        mid = alt;
                        c = c2;
                        resolved = true;
                    }
                }
                if (!resolved) {
                    b.flagged = true;
                    break;
                }
            }
            if (*c < j)
                b.lo = mid;
            else
                b.hi = mid;
        }
        out.push_back(b);
    }
    return out;
}

}  // namespace trieig
