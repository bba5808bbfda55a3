#include "trieig/certify.hpp"
#include "trieig/triangles.hpp"

namespace trieig {

MatrixThreshold matrix_threshold(const Rational& lambda, int grid_n) {
    if (lambda.sign() < 0) throw std::domain_error("matrix_threshold: negative threshold");
    MatrixThreshold t;
    t.theta = TriangleFamily::sigma(grid_n) / TriangleFamily::tpp_scale() * lambda;
    t.multiplier = t.theta.den();
    return t;
}

Rational cg_lower_bound(const Rational& lambda, const Rational& kappa2, const Rational& h2) {
    if (lambda.sign() < 0 || kappa2.sign() < 0 || h2.sign() < 0)
        throw std::domain_error("cg_lower_bound: negative input");
    return lambda / (Rational(1) + kappa2 * lambda * h2);
}

}  // namespace trieig
