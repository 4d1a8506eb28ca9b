#pragma once

#include <string>
#include <vector>

#include "rmtsf/mvpoly.hpp"
#include "rmtsf/partition.hpp"
#include "rmtsf/polynomial.hpp"

namespace rmtsf {

using PointList = std::vector<Rational>;

// Schur polynomial S_lambda(x) by Jacobi-Trudi over complete symmetric
// functions; well defined at coincident points, 0 when l(lambda) > |x|.
Rational schur_eval(const Partition& lambda, const PointList& x);

// S_lambda(1^N) as a polynomial in N: prod over boxes (N + content)/hook.
PolyN schur_at_ones(const Partition& lambda);

// P_mu(x) = prod_j sum_i x_i^{mu_j}
Rational power_eval(const Partition& mu, const PointList& x);

// Complete symmetric function h_r(x), Newton recurrence from power sums.
Rational complete_homogeneous_eval(unsigned r, const PointList& x);

struct BasisExpansion {
    std::string basis;  // "schur", "power", "mop-hermite", "mop-laguerre", "mop-jacobi"
    std::vector<std::pair<Partition, Rational>> terms;  // no zero coefficients
};

// P_mu = sum_lambda chi^lambda_mu S_lambda
BasisExpansion power_to_schur(const Partition& mu);

// C_lambda(N) = prod over boxes (N - i + j), degree |lambda|
PolyN c_lambda(const Partition& lambda);

// G_lambda(N,gamma)/G_0(N,gamma) = prod_j (N - j + gamma + 1)_{lambda_j}.
// Requires gamma > -1.
PolyN g_ratio(const Partition& lambda, const Rational& gamma);

// Product of hook lengths of lambda.
BigInt hook_product(const Partition& lambda);

// S_lambda as an explicit polynomial in nvars variables (small cases only).
MvPoly schur_mvpoly(const Partition& lambda, unsigned nvars);

}  // namespace rmtsf
