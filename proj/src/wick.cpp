#include "rmtsf/wick.hpp"

#include <numeric>
#include <vector>

namespace rmtsf {

namespace {

struct WordStructure {
    std::vector<unsigned> rotation;  // position -> next position within its trace
    std::vector<unsigned> vertex;    // position -> trace index
};

WordStructure build_word(const Partition& mu) {
    WordStructure w;
    unsigned pos = 0;
    for (unsigned v = 0; v < mu.length(); ++v) {
        unsigned len = mu.part(v + 1);
        for (unsigned i = 0; i < len; ++i) {
            w.rotation.push_back(pos + (i + 1) % len);
            w.vertex.push_back(v);
        }
        pos += len;
    }
    return w;
}

struct UnionFind {
    std::vector<unsigned> parent;
    explicit UnionFind(unsigned n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    unsigned find(unsigned a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(unsigned a, unsigned b) { parent[find(a)] = find(b); }
};

// Enumerates pairings lexicographically on the match of the smallest
// unmatched letter, calling visit(pairing) for each.
template <typename Visit>
void enumerate_pairings(unsigned m, std::vector<int>& match, Visit&& visit) {
    unsigned first = 0;
    while (first < m && match[first] >= 0) ++first;
    if (first == m) {
        visit(match);
        return;
    }
    for (unsigned other = first + 1; other < m; ++other) {
        if (match[other] >= 0) continue;
        match[first] = static_cast<int>(other);
        match[other] = static_cast<int>(first);
        enumerate_pairings(m, match, visit);
        match[first] = match[other] = -1;
    }
}

unsigned count_faces(const WordStructure& w, const std::vector<int>& match) {
    const unsigned m = static_cast<unsigned>(w.rotation.size());
    std::vector<bool> seen(m, false);
    unsigned faces = 0;
    for (unsigned s = 0; s < m; ++s) {
        if (seen[s]) continue;
        ++faces;
        unsigned t = s;
        do {
            seen[t] = true;
            t = w.rotation[static_cast<unsigned>(match[t])];
        } while (t != s);
    }
    return faces;
}

LaurentPolyN wick_sum(const Partition& mu, bool connected_only) {
    const unsigned m = mu.weight();
    const unsigned l = mu.length();
    if (m % 2 != 0) return LaurentPolyN();
    if (m > 12) throw std::invalid_argument("wick: |mu| exceeds 12");
    if (m == 0) return LaurentPolyN(Rational(1));

    WordStructure w = build_word(mu);
    std::map<unsigned, BigInt> face_counts;
    std::vector<int> match(m, -1);
    enumerate_pairings(m, match, [&](const std::vector<int>& pairing) {
        unsigned faces = count_faces(w, pairing);
        if ((faces + m / 2 + l) % 2 != 0)
            throw std::logic_error("wick: face-count parity violated");
        if (connected_only) {
            UnionFind uf(l);
            for (unsigned t = 0; t < m; ++t)
                uf.unite(w.vertex[t], w.vertex[static_cast<unsigned>(pairing[t])]);
            unsigned components = 0;
            for (unsigned v = 0; v < l; ++v)
                if (uf.find(v) == v) ++components;
            if (components != 1) return;
        }
        ++face_counts[faces];
    });

    LaurentPolyN out;
    for (const auto& [faces, count] : face_counts)
        out += LaurentPolyN::term(Rational(count), static_cast<int>(faces));
    return out;
}

}  // namespace

LaurentPolyN wick_trace_moment(const Partition& mu, WickConvention convention) {
    LaurentPolyN raw = wick_sum(mu, false);
    if (convention == WickConvention::unrescaled) return raw;
    const unsigned half = mu.weight() / 2;
    return (raw * pow_rational(Rational(4), -static_cast<long long>(half)))
        .shifted(-static_cast<int>(half));
}

LaurentPolyN wick_connected(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("wick_connected: empty word");
    LaurentPolyN raw = wick_sum(mu, true);
    const unsigned half = mu.weight() / 2;
    return (raw * pow_rational(Rational(4), -static_cast<long long>(half)))
        .shifted(-static_cast<int>(half));
}

}  // namespace rmtsf
