#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmtsf/partition.hpp"
#include "rmtsf/polynomial.hpp"
#include "rmtsf/symfun.hpp"

namespace rmtsf {

struct EnsembleSpec {
    enum class Kind { hermite, laguerre, jacobi };
    Kind kind = Kind::hermite;
    Rational gamma = 0;               // laguerre
    Rational gamma1 = 0, gamma2 = 0;  // jacobi

    static EnsembleSpec hermite();
    static EnsembleSpec laguerre(const Rational& g);
    static EnsembleSpec jacobi(const Rational& g1, const Rational& g2);

    bool is(Kind k) const { return kind == k; }
    std::string name() const;
};

// Univariate orthogonal polynomial in the normalization of the classical
// orthogonality relations: Hermite monic (probabilists'), Laguerre with
// leading coefficient (-1)^n/n!, Jacobi per the explicit sum.
struct UnivariateOP {
    EnsembleSpec family;
    unsigned degree = 0;
    std::vector<Rational> coeffs;  // coeffs[j] multiplies x^j

    Rational eval(const Rational& x) const;
};

const UnivariateOP& univariate_coeffs(const EnsembleSpec& family, unsigned n);

// Multivariate orthogonal polynomial det[phi_{lambda_j+N-j}(x_i)]/Vandermonde.
// Requires l(lambda) <= |x| and pairwise distinct points.
Rational mop_eval(const EnsembleSpec& family, const Partition& lambda, const PointList& x);

// Change-of-basis determinants. Hermite and Laguerre are N-free and need no
// matrix size; Jacobi requires N (the value is the determinant of
// eq-style N x N matrices, normalized so that det_D(jacobi, lambda, 0, N)
// is the D^{(J)}_{lambda 0} entering the Jacobi trace moments).
Rational det_D(const EnsembleSpec& family, const Partition& lambda, const Partition& nu,
               std::optional<unsigned> N = std::nullopt);

// Hermite-only symbolic coefficients (polynomials in N).
PolyN psi_coeff_symbolic(const Partition& lambda, const Partition& nu);
PolyN kappa_coeff_symbolic(const Partition& lambda, const Partition& nu);

// S_lambda = sum_nu psi_{lambda nu} Phi_nu  and  Phi_lambda = sum_nu kappa_{lambda nu} S_nu
// at fixed integer N >= l(lambda).
Rational psi_coeff(const EnsembleSpec& family, const Partition& lambda, const Partition& nu, unsigned N);
Rational kappa_coeff(const EnsembleSpec& family, const Partition& lambda, const Partition& nu, unsigned N);

// Both sides of the generalized dual Cauchy identity
//   prod_{ij} (t_i - x_j) = pref * sum_{lambda in (q^p)} (-1)^{|lambda~|} Phi_lambda(t) Phi_{lambda~}(x).
std::pair<Rational, Rational> verify_dual_cauchy(const EnsembleSpec& family, const PointList& t,
                                                 const PointList& x);

// Truncated generating-function identity
//   prod_j exp(-t_j^2/2) = sum_{nu, |nu| even} (-1)^{|nu|/2} 2^{-|nu|/2} S_nu(t) D^{(H)}_{nu 0}
// compared as polynomials up to the given total degree.
bool verify_genfun_truncated(unsigned vars, unsigned max_degree);

// Partitions contained in the p x q rectangle (at most p parts, each <= q).
std::vector<Partition> partitions_in_rectangle(unsigned p, unsigned q);

}  // namespace rmtsf
