#include "rmtsf/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>

namespace rmtsf {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
    }
}

unsigned Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::parse(std::string_view text) {
    size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    std::string s(text.substr(a, b - a));
    if (s.empty() || s == "0") return Partition();
    std::vector<unsigned> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long v = std::stol(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size() || v < 0)
            throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
        parts.push_back(static_cast<unsigned>(v));
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Frequency frequency(const Partition& p) {
    Frequency f;
    for (unsigned x : p.parts()) ++f[x];
    return f;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition();
    std::vector<unsigned> out(p.parts()[0], 0);
    for (unsigned x : p.parts())
        for (unsigned j = 0; j < x; ++j) ++out[j];
    return Partition(std::move(out));
}

bool contains(const Partition& mu, const Partition& lambda) {
    for (unsigned i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

Partition rect_complement(const Partition& lambda, unsigned p, unsigned q) {
    if (lambda.length() > p || lambda.part(1) > q)
        throw std::invalid_argument("rect_complement: partition does not fit in the rectangle");
    Partition lc = conjugate(lambda);
    std::vector<unsigned> out;
    out.reserve(q);
    for (unsigned j = q; j >= 1; --j) out.push_back(p - lc.part(j));
    return Partition(std::move(out));
}

std::vector<int> contents(const Partition& p) {
    std::vector<int> out;
    out.reserve(p.weight());
    for (unsigned i = 1; i <= p.length(); ++i)
        for (unsigned j = 1; j <= p.part(i); ++j)
            out.push_back(static_cast<int>(j) - static_cast<int>(i));
    return out;
}

BigInt z_centralizer(const Partition& p) {
    BigInt z = 1;
    for (const auto& [j, b] : frequency(p)) {
        for (unsigned i = 0; i < b; ++i) z *= j;
        z *= factorial(b);
    }
    return z;
}

unsigned partition_weight_bound() {
    static const unsigned bound = [] {
        if (const char* env = std::getenv("RMT_MAX_WEIGHT")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) return static_cast<unsigned>(v);
        }
        return 40u;
    }();
    return bound;
}

namespace {

std::vector<Partition> enumerate_partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    // descending lexicographic enumeration: largest first part first
    auto rec = [&](auto&& self, unsigned rest, unsigned cap) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned k = std::min(rest, cap); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

}  // namespace

const std::vector<Partition>& partitions_of(unsigned n) {
    if (n > partition_weight_bound())
        throw std::invalid_argument("partitions_of: weight " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(partition_weight_bound()));
    static std::mutex mu;
    static std::map<unsigned, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_partitions(n)).first;
    return it->second;
}

}  // namespace rmtsf
