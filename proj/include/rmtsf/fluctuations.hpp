#pragma once

#include <map>
#include <vector>

#include "rmtsf/moments.hpp"

namespace rmtsf {

// Moments and cumulants of the rescaled GUE (entry covariance 1/(4N),
// semicircle supported on [-1,1]) and of the Chebyshev linear statistics
// X_k = Tr T_k(M_R) - E[Tr T_k(M_R)].

// E[prod_j Tr M_R^{mu_j}]; the symbolic character sum divided by (4N)^{|mu|/2}.
LaurentPolyN rescaled_trace_moment(const Partition& mu);

struct ChebyshevCoeffs {
    unsigned k = 0;
    std::map<unsigned, Rational> coeffs;  // monomial degree -> coefficient of T_k
};
ChebyshevCoeffs chebyshev_coeffs(unsigned k);

// Formal polynomial in the commuting symbols y_d = Tr M_R^d with Laurent
// coefficients in N; the carrier for expanding products of X_k.
class TraceExpr {
public:
    TraceExpr() = default;
    static TraceExpr constant(const LaurentPolyN& c);
    static TraceExpr trace_power(unsigned d);

    TraceExpr& operator+=(const TraceExpr& o);
    TraceExpr& operator-=(const TraceExpr& o);
    TraceExpr& operator*=(const TraceExpr& o);
    TraceExpr& operator*=(const Rational& c);
    friend TraceExpr operator+(TraceExpr a, const TraceExpr& b) { return a += b; }
    friend TraceExpr operator-(TraceExpr a, const TraceExpr& b) { return a -= b; }
    friend TraceExpr operator*(TraceExpr a, const TraceExpr& b) { return a *= b; }
    friend TraceExpr operator*(TraceExpr a, const Rational& c) { return a *= c; }

    LaurentPolyN expectation() const;  // linear in the y-monomials

    const std::map<Partition, LaurentPolyN>& terms() const { return terms_; }

private:
    std::map<Partition, LaurentPolyN> terms_;  // y-degree multiset -> coefficient
};

// X_k as a TraceExpr (already centered; constants cancel).
TraceExpr xk_expr(unsigned k);

// E[prod_i X_{k_i}] exactly as a Laurent polynomial in N.
LaurentPolyN xk_joint_central_moment(const std::vector<unsigned>& ks);
Rational xk_joint_central_moment_at(const std::vector<unsigned>& ks, unsigned N);

// E[(Tr M_R)^{2n}] = (2n)!/(2^{3n} n!), N-independent.
Rational tr_m1_power_closed_form(unsigned n);

struct ConnectedCorrelator {
    Partition mu;
    LaurentPolyN value;
};

// Joint cumulant of the Tr M_R^{mu_j} (moment -> cumulant inversion over
// set partitions of the index set).
ConnectedCorrelator connected_correlator(const Partition& mu);

// a_g = 2^{|mu|} x coefficient of N^{2-2g-l(mu)} in the connected correlator.
Rational genus_coefficient(const Partition& mu, unsigned g);

// n-th cumulant of X_k from connected correlators with Chebyshev weights.
LaurentPolyN xk_cumulant(unsigned k, unsigned n);

// Closed form E[(Tr M_R^2)^k (Tr M_R)^{2(n-k)}]
//   = (2(n-k)-1)!! (4N)^{-n} N^{n-k} prod_{l=n-k}^{n-1} (N^2 + 2l).
// mixed_k = n is the pure power E[(Tr M_R^2)^n].
LaurentPolyN tr_m2_power_closed_form(unsigned n, unsigned mixed_k);

}  // namespace rmtsf
