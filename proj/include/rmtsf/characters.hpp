#pragma once

#include <vector>

#include "rmtsf/partition.hpp"

namespace rmtsf {

// Symmetric-group character chi^lambda_mu, exact. Throws on weight mismatch.
long long character(const Partition& lambda, const Partition& mu);

// Dimension of the irreducible representation labelled by lambda (hook lengths).
BigInt dim_irrep(const Partition& lambda);

unsigned character_weight_bound();
void set_character_weight_bound(unsigned n);  // default 24

// Full table for S_n; rows and columns are partitions_of(n) in canonical order.
struct CharacterTable {
    unsigned n = 0;
    std::vector<Partition> labels;             // both row (lambda) and column (mu) labels
    std::vector<std::vector<long long>> chi;   // chi[lambda_index][mu_index]

    long long entry(const Partition& lambda, const Partition& mu) const;
};

const CharacterTable& character_table(unsigned n);

}  // namespace rmtsf
