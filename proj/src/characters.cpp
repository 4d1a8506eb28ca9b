#include "rmtsf/characters.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <unordered_map>

namespace rmtsf {

namespace {

std::atomic<unsigned> g_char_bound{24};

// Key packing a (lambda, mu-suffix) pair for memoization.
struct PairKey {
    std::vector<unsigned> lam;
    std::vector<unsigned> mu;
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    size_t operator()(const PairKey& k) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
        for (unsigned x : k.lam) mix(x + 1);
        mix(0);
        for (unsigned x : k.mu) mix(x + 1);
        return h;
    }
};

// Murnaghan-Nakayama on beta-numbers: beta_i = lambda_i + L - i. Removing a
// border strip of length r replaces some beta with beta - r, provided the
// target is free; the height contribution is the number of betas crossed.
long long mn_recurse(std::vector<unsigned> lam, const std::vector<unsigned>& mu, size_t mu_pos,
                     std::unordered_map<PairKey, long long, PairKeyHash>& memo) {
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (mu_pos == mu.size()) return lam.empty() ? 1 : 0;
    if (lam.empty()) return 0;

    PairKey key{lam, std::vector<unsigned>(mu.begin() + static_cast<long>(mu_pos), mu.end())};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const unsigned r = mu[mu_pos];
    const size_t L = lam.size();
    std::vector<long long> beta(L);
    for (size_t i = 0; i < L; ++i) beta[i] = static_cast<long long>(lam[i]) + static_cast<long long>(L - 1 - i);

    long long total = 0;
    for (size_t i = 0; i < L; ++i) {
        long long target = beta[i] - static_cast<long long>(r);
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // betas strictly between target and beta[i] get jumped over
        int crossings = 0;
        for (size_t j = 0; j < L; ++j)
            if (beta[j] > target && beta[j] < beta[i]) ++crossings;
        std::vector<long long> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<unsigned> next(L);
        for (size_t j = 0; j < L; ++j)
            next[j] = static_cast<unsigned>(nb[j] - static_cast<long long>(L - 1 - j));
        long long sub = mn_recurse(std::move(next), mu, mu_pos + 1, memo);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::mutex g_char_mutex;
std::unordered_map<PairKey, long long, PairKeyHash> g_char_memo;

}  // namespace

unsigned character_weight_bound() { return g_char_bound.load(); }
void set_character_weight_bound(unsigned n) { g_char_bound.store(n); }

long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: |lambda| != |mu|");
    if (lambda.weight() > character_weight_bound())
        throw std::invalid_argument("character: weight exceeds bound " +
                                    std::to_string(character_weight_bound()));
    if (lambda.empty()) return 1;
    // strip parts largest-first; order is irrelevant for the value
    std::lock_guard<std::mutex> lock(g_char_mutex);
    return mn_recurse(lambda.parts(), mu.parts(), 0, g_char_memo);
}

BigInt dim_irrep(const Partition& lambda) {
    BigInt hooks = 1;
    Partition lc = conjugate(lambda);
    for (unsigned i = 1; i <= lambda.length(); ++i)
        for (unsigned j = 1; j <= lambda.part(i); ++j)
            hooks *= (lambda.part(i) - j) + (lc.part(j) - i) + 1;
    return factorial(lambda.weight()) / hooks;
}

long long CharacterTable::entry(const Partition& lambda, const Partition& mu) const {
    auto find = [this](const Partition& p) {
        auto it = std::find(labels.begin(), labels.end(), p);
        if (it == labels.end()) throw std::invalid_argument("CharacterTable: unknown partition");
        return static_cast<size_t>(it - labels.begin());
    };
    return chi[find(lambda)][find(mu)];
}

const CharacterTable& character_table(unsigned n) {
    if (n > character_weight_bound())
        throw std::invalid_argument("character_table: n exceeds bound " +
                                    std::to_string(character_weight_bound()));
    static std::mutex mu;
    static std::map<unsigned, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        CharacterTable t;
        t.n = n;
        t.labels = partitions_of(n);
        t.chi.resize(t.labels.size());
        for (size_t i = 0; i < t.labels.size(); ++i) {
            t.chi[i].resize(t.labels.size());
            for (size_t j = 0; j < t.labels.size(); ++j)
                t.chi[i][j] = character(t.labels[i], t.labels[j]);
        }
        it = cache.emplace(n, std::move(t)).first;
    }
    return it->second;
}

}  // namespace rmtsf
