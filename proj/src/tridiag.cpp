#include <cmath>
#include <vector>

#include "trieig/certify.hpp"

namespace trieig {

namespace {

// Packed symmetric upper-triangle storage, row-major: row i holds (i,j) j>=i.
struct PackedSym {
    int n = 0;
    std::vector<Interval> a;
    explicit PackedSym(int n_) : n(n_), a(static_cast<size_t>(n_) * (n_ + 1) / 2) {}
    size_t base(int i) const {
        return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i - 1) / 2 - i;
    }
    Interval& at(int i, int j) { return a[base(i) + j]; }  // requires i <= j
    const Interval& at(int i, int j) const { return a[base(i) + j]; }
};

// Householder reduction in interval arithmetic. Entries annihilated by
// construction are exact zeros for every member of the matrix family, so the
// output tridiagonal family encloses a matrix orthogonally similar to each
// member; spectra are preserved within the enclosure.
IntervalTridiag householder(PackedSym m, double width_cap) {
    const int n = m.n;
    IntervalTridiag t;
    t.diag.resize(n);
    if (n == 0) return t;
    t.off.resize(n - 1);
    if (n == 1) {
        t.diag[0] = m.at(0, 0);
        return t;
    }

    RoundUpwardScope rounding;
    std::vector<Interval> v(n), p(n), w(n);
    double max_width = 0.0;
    auto track = [&](const Interval& x) {
        const double wd = x.width();
        if (wd > max_width) max_width = wd;
        if (!(wd <= width_cap))
            throw TridiagBlowup(
                "tridiagonalize: interval width exceeded cap; use a smaller grid or the "
                "rational back-end");
    };

    for (int k = 0; k + 2 < n; ++k) {
        // Column below the diagonal: x = A[k+1..n-1, k].
        Interval sig(0.0);
        bool tail_zero = true;
        for (int i = k + 1; i < n; ++i) {
            const Interval& xi = m.at(k, i);
            sig = iv::add(sig, iv::sqr(xi));
            if (i > k + 1 && (xi.lo != 0.0 || xi.hi != 0.0)) tail_zero = false;
        }
        const Interval x1 = m.at(k, k + 1);
        if (tail_zero) {  // already tridiagonal in this column
            t.diag[k] = m.at(k, k);
            t.off[k] = x1;
            continue;
        }
        const Interval norm = iv::sqrt(sig);
        const double sgn = x1.mid() >= 0.0 ? 1.0 : -1.0;
        const Interval snorm = sgn > 0 ? norm : iv::neg(norm);
        // v = x + sgn*norm*e1;  beta = v'v = 2*(sig + sgn*norm*x1)
        const Interval beta =
            iv::scale2(iv::add(sig, iv::mul(snorm, x1)), 1);
        if (beta.lo <= 0.0)
            throw TridiagBlowup("tridiagonalize: reflector norm enclosure straddles zero");
        v[k + 1] = iv::add(x1, snorm);
        for (int i = k + 2; i < n; ++i) v[i] = m.at(k, i);

        t.diag[k] = m.at(k, k);
        t.off[k] = iv::neg(snorm);
        track(t.off[k]);
        track(t.diag[k]);

        // p = A22 * v over the trailing block, paired sweep on the upper triangle.
        for (int i = k + 1; i < n; ++i) p[i] = Interval(0.0);
        for (int i = k + 1; i < n; ++i) {
            const Interval vi = v[i];
            const Interval* row = &m.at(i, i);
            Interval acc = iv::mul(row[0], vi);
            for (int j = i + 1; j < n; ++j) {
                const Interval& aij = row[j - i];
                acc = iv::add(acc, iv::mul(aij, v[j]));
                p[j] = iv::add(p[j], iv::mul(aij, vi));
            }
            p[i] = iv::add(p[i], acc);
        }
        // w = (2/beta) * p - (2 * v'p / beta^2) * v
        Interval vtp(0.0);
        for (int i = k + 1; i < n; ++i) vtp = iv::add(vtp, iv::mul(v[i], p[i]));
        const Interval two_over_beta = iv::div(Interval(2.0), beta);
        const Interval kappa = iv::div(iv::mul(two_over_beta, vtp), beta);
        for (int i = k + 1; i < n; ++i)
            w[i] = iv::sub(iv::mul(two_over_beta, p[i]), iv::mul(kappa, v[i]));

        // A22 -= v w' + w v'
        for (int i = k + 1; i < n; ++i) {
            const Interval vi = v[i], wi = w[i];
            Interval* row = &m.at(i, i);
            for (int j = i; j < n; ++j) {
                row[j - i] = iv::sub(row[j - i],
                                     iv::add(iv::mul(vi, w[j]), iv::mul(wi, v[j])));
            }
        }
        track(m.at(k + 1, k + 1));
    }
    t.diag[n - 2] = m.at(n - 2, n - 2);
    t.diag[n - 1] = m.at(n - 1, n - 1);
    t.off[n - 2] = m.at(n - 2, n - 1);
    track(t.diag[n - 1]);
    track(t.off[n - 2]);
    return t;
}

}  // namespace

IntervalTridiag tridiagonalize_dense(std::vector<std::vector<Interval>> a, double width_cap) {
    const int n = static_cast<int>(a.size());
    PackedSym m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.at(i, j) = a[i][j];
    return householder(std::move(m), width_cap);
}

IntervalTridiag tridiagonalize(const DiscreteSystem& s, double width_cap) {
    // P = B^{-1/2} C B^{-1/2} in matrix units; entries c, c/sqrt(2), c/2.
    RoundUpwardScope rounding;
    const Interval inv_sqrt2 = iv::div(Interval(1.0), iv::sqrt(Interval(2.0)));
    PackedSym m(s.n);
    for (int r = 0; r < s.n; ++r)
        for (int t = s.row_ptr[r]; t < s.row_ptr[r + 1]; ++t) {
            const int c = s.col[t];
            if (c < r) continue;
            Interval v(static_cast<double>(s.val[t]));
            const int twos = (s.b[r] == 2) + (s.b[c] == 2);
            if (twos == 1) v = iv::mul(v, inv_sqrt2);
            if (twos == 2) v = iv::scale2(v, -1);
            m.at(r, c) = v;
        }
    return householder(std::move(m), width_cap);
}

std::optional<int> sturm_count(const IntervalTridiag& t, const Interval& x) {
    // LDL' pivot recurrence q_i = (d_i - x) - e_{i-1}^2 / q_{i-1};
    // the number of negative pivots counts eigenvalues below x.
    RoundUpwardScope rounding;
    const int n = t.n();
    int count = 0;
    Interval q;
    for (int i = 0; i < n; ++i) {
        Interval qi = iv::sub(t.diag[i], x);
        if (i > 0) {
            if (q.straddles_zero()) return std::nullopt;
            qi = iv::sub(qi, iv::div(iv::sqr(t.off[i - 1]), q));
        }
        if (qi.straddles_zero()) return std::nullopt;
        if (qi.hi < 0.0) ++count;
        q = qi;
    }
    return count;
}

std::optional<int> sturm_count(const IntervalTridiag& t, const Rational& x) {
    return sturm_count(t, interval_from_rational(x));
}

std::pair<Rational, Rational> gershgorin_bounds(const IntervalTridiag& t) {
    RoundUpwardScope rounding;
    const int n = t.n();
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::max(std::abs(t.off[i - 1].lo), std::abs(t.off[i - 1].hi));
        if (i + 1 < n) r += std::max(std::abs(t.off[i].lo), std::abs(t.off[i].hi));
        lo = std::min(lo, -(r + (-t.diag[i].lo)));  // round-up of -(d.lo - r)
        hi = std::max(hi, t.diag[i].hi + r);
    }
    return {Rational(mpq_class(lo)), Rational(mpq_class(hi))};
}

std::vector<EigBracket> bisect_brackets(const IntervalTridiag& t, int k, const Rational& tol) {
    if (k < 1) throw std::invalid_argument("bisect_brackets: k must be >= 1");
    if (k > t.n()) throw std::invalid_argument("bisect_brackets: k exceeds dimension");
    auto [glo, ghi] = gershgorin_bounds(t);
    glo -= Rational(1);
    ghi += Rational(1);

    // count(x) memoized on demand; nullopt (indeterminate) handled by nudging.
    auto count_at = [&](const Rational& x) { return sturm_count(t, x); };

    std::vector<EigBracket> out;
    for (int j = 1; j <= k; ++j) {
        EigBracket b;
        b.index = j;
        b.lo = glo;
        b.hi = ghi;
        // Invariant: count(lo) < j <= count(hi).
        while (b.hi - b.lo > tol) {
            Rational mid = (b.lo + b.hi) / Rational(2);
            auto c = count_at(mid);
            if (!c) {
                // nudge the split point; widen-and-flag when stuck
                const Rational step = (b.hi - b.lo) / Rational(16);
                bool resolved = false;
                for (int attempt = 1; attempt <= 3 && !resolved; ++attempt) {
                    Rational alt = mid + step * Rational(attempt);
                    if (alt >= b.hi) break;
                    if (auto c2 = count_at(alt)) {
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
