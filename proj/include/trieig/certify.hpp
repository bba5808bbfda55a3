#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trieig/fem.hpp"
#include "trieig/grid.hpp"
#include "trieig/interval.hpp"
#include "trieig/rational.hpp"
#include "trieig/tribool.hpp"

namespace trieig {

// theta = sigma * Lambda / 128^2: the (C,B) matrix-unit threshold equivalent
// to lambda(T'') >= Lambda, together with the integer multiplier (the theta
// denominator; a power of two for the shipped Lambda).
struct MatrixThreshold {
    Rational theta;
    mpz_class multiplier;
};
MatrixThreshold matrix_threshold(const Rational& lambda, int grid_n = 64);

// Exact rational Carstensen-Gedicke transfer: Lambda / (1 + kappa2*Lambda*H2).
Rational cg_lower_bound(const Rational& lambda, const Rational& kappa2, const Rational& h2);

inline Rational kappa_squared_bound() { return Rational(1931, 10000); }

// Fill-reducing (approximate minimum degree) ordering of the symmetric
// pattern; perm[new] = old.
std::vector<int> amd_order(const DiscreteSystem& s);

// --- exact rational back-end -------------------------------------------------

struct RationalLuResult {
    TriBool verdict = TriBool::Indeterminate;
    int pivot_count = 0;                 // positive pivots certified
    int failure_index = -1;              // offending leading minor, if any
    std::vector<int> permutation;        // perm[new] = old
    std::uint64_t pivot_hash = 0;        // FNV chain over pivot residues
};

// Fraction-free (Bareiss) symmetric elimination of P (mult*C - num*B) P^T.
// verdict=true iff all leading principal minors are positive; a zero or
// negative pivot reports the offending index instead of throwing.
RationalLuResult posdef_rational_lu(const DiscreteSystem& s, const Rational& theta,
                                    const std::vector<int>* forced_perm = nullptr);

// --- interval back-end --------------------------------------------------------

struct IntervalLdltResult {
    TriBool verdict = TriBool::Indeterminate;
    int pivot_count = 0;
    int failure_index = -1;
    std::vector<int> permutation;
    double min_pivot_lo = 0.0;  // smallest certified pivot lower bound
};

// Sparse LDL^T of C - theta*B in outward-rounded interval arithmetic.
// True iff every pivot interval is strictly positive; Indeterminate as soon
// as a pivot straddles zero.
IntervalLdltResult posdef_interval_ldlt(const DiscreteSystem& s, const Rational& theta,
                                        const std::vector<int>* forced_perm = nullptr);


// --- Sturm / tridiagonal back-end ---------------------------------------------

struct IntervalTridiag {
    std::vector<Interval> diag;
    std::vector<Interval> off;  // off[i] couples i and i+1
    int n() const { return static_cast<int>(diag.size()); }
};

struct TridiagBlowup : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Interval Householder reduction of P = B^{-1/2} C B^{-1/2} (matrix units).
// Every eigenvalue of the exact P lies in the eigenvalue set of the interval
// family. Throws TridiagBlowup when entry widths exceed width_cap (advice:
// smaller N or the rational back-end).
IntervalTridiag tridiagonalize(const DiscreteSystem& s, double width_cap = 1.0);

// Dense symmetric interval matrix variant, for tests and small systems.
IntervalTridiag tridiagonalize_dense(std::vector<std::vector<Interval>> a,
                                     double width_cap = 1.0);

// Certified count of eigenvalues < x; nullopt when an interval Sturm pivot
// straddles zero.
std::optional<int> sturm_count(const IntervalTridiag& t, const Rational& x);
std::optional<int> sturm_count(const IntervalTridiag& t, const Interval& x);

struct EigBracket {
    int index = 1;  // 1-based eigenvalue position
    Rational lo;
    Rational hi;
    bool flagged = false;  // refinement stopped by an indeterminate count
};

// Brackets for the k smallest eigenvalues, each of width <= tol unless
// flagged. Rational endpoints; bisection on dyadic midpoints.
std::vector<EigBracket> bisect_brackets(const IntervalTridiag& t, int k, const Rational& tol);

// Certified number of generalized eigenvalues of (C,B) below x, by Sylvester
// inertia of the sparse interval LDL^T of C - x*B: the same pivot-sign count
// as the tridiagonal Sturm sequence, without the similarity transform.
// nullopt when a pivot interval straddles zero.
std::optional<int> inertia_count(const DiscreteSystem& s, const Rational& x,
                                 const std::vector<int>* forced_perm = nullptr);

// Sturm bisection driven by inertia_count; the production bracket route for
// large systems (the dense tridiagonal route blows interval widths up).
std::vector<EigBracket> bisect_brackets_sparse(const DiscreteSystem& s, int k,
                                               const Rational& tol);

// Gershgorin enclosure of the spectrum (outward, rational endpoints).
std::pair<Rational, Rational> gershgorin_bounds(const IntervalTridiag& t);

// --- non-validated Lanczos + verified eigenpair --------------------------------

struct LanczosPair {
    double value = 0.0;  // matrix units, mu of (C,B)
    std::vector<double> vector;
};

// Shift-invert Lanczos approximations to the k smallest generalized
// eigenpairs of (C, B). Seeded and reproducible; no rigor claimed.
std::vector<LanczosPair> lanczos_estimate(const DiscreteSystem& s, int k,
                                          std::uint64_t seed = 20240901);

struct VerifiedEigenpair {
    bool verified = false;
    Interval value;          // matrix units
    double value_radius = 0.0;
    double vector_radius = 0.0;  // max half-width of the eigenvector enclosure
};

// Krawczyk/contraction test on the bordered system (C - lambda B) u = 0,
// u_m = 1: on success the interval provably contains a true eigenpair.
VerifiedEigenpair verify_eigenpair(const DiscreteSystem& s, const LanczosPair& approx);

}  // namespace trieig
