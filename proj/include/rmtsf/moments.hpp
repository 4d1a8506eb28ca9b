#pragma once

#include <optional>

#include "rmtsf/mops.hpp"

namespace rmtsf {

// Result of a moment computation; a polynomial in N in symbolic mode, a
// rational at fixed N. Evaluating the symbolic value at an integer N agrees
// with fixed-N mode.
struct MomentResult {
    EnsembleSpec ensemble;
    Partition index;
    bool symbolic = true;
    PolyN poly;      // symbolic mode
    Rational value;  // fixed-N mode

    Rational at(const Rational& n) const { return symbolic ? poly.eval(n) : value; }
};

// E[prod_j Tr M^{mu_j}] via the character sums. Symbolic mode is supported
// for hermite and laguerre; jacobi is fixed-N only.
MomentResult trace_joint_moment(const EnsembleSpec& ensemble, const Partition& mu,
                                std::optional<unsigned> fixed_n = std::nullopt);

// E[S_lambda] under the ensemble's eigenvalue measure.
MomentResult schur_moment(const EnsembleSpec& ensemble, const Partition& lambda,
                          std::optional<unsigned> fixed_n = std::nullopt);

// E[prod_j det(t_j - M)] for an N x N matrix at pairwise distinct points.
Rational charpoly_moment(const EnsembleSpec& ensemble, unsigned N, const PointList& t);

// E[(det(t - M))^p] as a coefficient sequence in t (degree p*N, monic).
std::vector<Rational> charpoly_power_moment(const EnsembleSpec& ensemble, unsigned N, unsigned p);

// N (2j-1)!! 2F1(-j, 1-N; 2; 2) as a polynomial in N; equals E[Tr M^{2j}].
PolyN gue_even_trace_hypergeom_poly(unsigned j);
Rational gue_even_trace_hypergeom(unsigned j, unsigned N);

// E[p_{2k-1} p_1] = (2k-1) E[p_{2k-2}] at matrix size N (Tr M^0 = N).
bool gue_odd_pair_identity(unsigned k, unsigned N);

}  // namespace rmtsf
