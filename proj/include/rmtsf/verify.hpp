#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rmtsf {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    unsigned checks = 0;                 // identities evaluated
    std::vector<std::string> failures;   // one line per failed identity, lhs vs rhs
};

// The individual acceptance criteria. Exact unless stated otherwise.
CriterionResult check_trace_table_partitions6();       // 1
CriterionResult check_schur_table_partitions4();       // 2
CriterionResult check_x_table_partitions6();           // 3
CriterionResult check_first_power_moments();           // 4
CriterionResult check_tr_m2_closed_form();             // 5
CriterionResult check_x2_cumulants();                  // 6
CriterionResult check_hypergeom_identity();            // 7
CriterionResult check_dual_cauchy(std::uint64_t seed); // 8
CriterionResult check_wick_equivalence();              // 9
CriterionResult check_odd_pair_identity();             // 10
CriterionResult check_character_invariants();          // 11
CriterionResult check_genfun_identity();               // 12
CriterionResult check_psi_kappa_inverse();             // 13
CriterionResult check_gaussian_limit_structure();      // 14
CriterionResult check_monte_carlo(std::uint64_t seed, unsigned workers);  // 15

std::vector<CriterionResult> run_exact_suite(std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(bool include_mc, std::uint64_t seed, unsigned workers);

}  // namespace rmtsf
