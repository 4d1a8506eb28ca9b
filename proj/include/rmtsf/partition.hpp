#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rmtsf/rational.hpp"

namespace rmtsf {

// Integer partition: weakly decreasing positive parts, trailing zeros never
// stored. The universal index type of the whole library.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    unsigned weight() const;
    bool empty() const { return parts_.empty(); }
    // part(i) is 1-based and returns 0 beyond the length
    unsigned part(unsigned i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // lexicographic on the part lists; partitions_of sorts descending by this
    std::strong_ordering operator<=>(const Partition& o) const = default;

    // "4,2,1"; the empty partition prints as "" and parses from "" or "0"
    static Partition parse(std::string_view text);
    std::string to_string() const;

private:
    std::vector<unsigned> parts_;
};

// part size -> multiplicity
using Frequency = std::map<unsigned, unsigned>;
Frequency frequency(const Partition& p);

Partition conjugate(const Partition& p);
bool contains(const Partition& mu, const Partition& lambda);  // mu inside lambda
// lambda~ = (p - lambda'_q, ..., p - lambda'_1); throws if lambda does not fit (q^p)
Partition rect_complement(const Partition& lambda, unsigned p, unsigned q);
// one entry j - i per box (i, j), row by row
std::vector<int> contents(const Partition& p);
// z_mu = prod j^{b_j} b_j!
BigInt z_centralizer(const Partition& p);

unsigned partition_weight_bound();  // RMT_MAX_WEIGHT env override, default 40

// All partitions of n in reverse-lexicographic (descending) order,
// (n) first and (1^n) last. Throws when n exceeds the weight bound.
const std::vector<Partition>& partitions_of(unsigned n);

}  // namespace rmtsf
